#pragma once

#include <functional>

#include "lienard/types.hpp"

namespace lienard {

// Central five-point stencils, O(h^4) truncation.
// order: 1 or 2 (anything else throws Error).
// h <= 0 selects the default step 1e-4 * max(1, |t|).
Cx fd_derivative(const std::function<Cx(double)>& f, double t,
                 int order = 1, double h = 0.0);

} // namespace lienard
