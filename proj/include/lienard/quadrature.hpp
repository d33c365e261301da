#pragma once

#include <functional>

#include "lienard/types.hpp"

namespace lienard {

inline constexpr int kQuadMaxDepth = 48;

/// Adaptive Simpson integration of a complex-valued integrand over [a, b].
/// Accuracy contract: |result - true| <= tol * (1 + |result|).
/// Throws DepthExceeded when bisection exhausts max_depth (non-integrable
/// behavior on some subinterval).
Cx quad(const std::function<Cx(double)>& f, double a, double b,
        double tol = 1e-10, int max_depth = kQuadMaxDepth);

/// Fixed-grid composite Simpson rule with n panels (n even, >= 2). Used where
/// an integrand carries isolated branch-cut jumps that would starve the
/// adaptive rule; accuracy is then O((b-a)/n) near the jump and O(h^4) away
/// from it.
Cx composite_simpson(const std::function<Cx(double)>& f, double a, double b, int n);

} // namespace lienard
