#pragma once

#include <vector>

#include "lienard/types.hpp"

namespace lienard {

// Roots of sum_k coeffs[k] * x^(n-k), i.e. coefficients in DESCENDING degree
// order with coeffs[0] the leading coefficient (must be nonzero).
// Degrees 0..4 are supported; higher degrees throw DegreeUnsupported.
// Closed forms handle degrees <= 2; Laguerre iteration with deflation and a
// final polish on the original polynomial handles 3 and 4.
// Result is sorted by (re, im); real parts within 1e-9*(1 + max|re|) count
// as equal, so conjugate pairs order by imaginary part instead of rounding
// noise. Every root r satisfies |p(r)| <= tol * max_k |coeffs[k]| (else Error).
std::vector<Cx> poly_roots(const std::vector<Cx>& coeffs, double tol = 1e-8);

} // namespace lienard
