#pragma once

#include <utility>
#include <vector>

#include "lienard/coefficients.hpp"
#include "lienard/types.hpp"

namespace lienard {

// Self-excited oscillator acceleration: eps*(1 - |z|^2)*dz - z.
Cx vdp_rhs(Cx eps, double t, Cx z, Cx zdot);

// Variational deformation of the oscillator around a base orbit:
// F1(t) = eps*(|z(t)|^2 - 1), F2(t) = eps*zdot(t). G is not produced by the
// deformation; it is carried through from the caller.
// Throws MissingDerivatives when base has no stored derivatives.
CoefficientSet deform_coefficients(const Trajectory& base, Cx eps,
                                   Coefficient G = {});

// Same deformation around the closed-form orbit z = c*e^{i*theta*t},
// returned symbolically: F1 = eps*|c|^2*e^{-2 Im(theta) x} - eps (a constant
// when theta is real), F2 = eps*i*c*theta*e^{i*theta*x}.
CoefficientSet deform_coefficients(Cx c, Cx theta, Cx eps, Coefficient G = {});

// Deformed acceleration: -F1*Ydot - F2*Y^2 - G*Y.
Cx deformed_rhs(const CoefficientSet& coeffs, double t, Cx Y, Cx Ydot);

struct SkeletonNode {
    double Y;
    double P;
    Cx Q;
};

// Uniform n x n sampling of (Y, P) real ranges with Q = deformed_rhs at each
// node; Y is the outer loop. n >= 2.
std::vector<SkeletonNode> skeleton_grid(const CoefficientSet& coeffs,
                                        std::pair<double, double> y_range,
                                        std::pair<double, double> p_range,
                                        int n, double t);

struct TransformedCoefficients {
    Cx dY;        // multiplies dY/dT
    Cx Y2;        // multiplies Y^2
    Cx Y;         // multiplies Y
    Cx constant;  // inhomogeneous term
};

// The four coefficients of the gauge-transformed equation at time t, read
// verbatim off the displayed transformation (Eq 12):
//   dY:       (1/theta')*(2 alpha'/alpha + theta''/theta - F1)
//   Y^2:      -F2*alpha/theta'^2
//   Y:        (alpha''/alpha + 2 F2 beta + F1 alpha'/alpha)/theta'^2
//   constant: alpha*(beta'' + F2 beta^2 + F1 beta' - G)/theta'^2
// with eps*(x^2-1) identified as F1 and eps*xdot as F2. The theta''/theta
// ratio is defined as 0 when theta'' is exactly zero, so the identity gauge
// works at t = 0. Throws SingularGauge when |alpha*theta'| < 1e-12.
TransformedCoefficients transform_coefficients(const CoefficientSet& coeffs,
                                               const GaugeFunctions& gauge,
                                               double t);

// Gauge pinned by theta'^2 = -eps*xdot*alpha/6 (Eq 14): alpha from
// quadrature of (Ln alpha)' = -(2/5)*(eps*(1-x^2) + xddot/(2 xdot)) with
// alpha(t0) = 1, theta from quadrature of the principal root theta', beta
// from the closed formula. t0 is the front of t_grid; the grid is also the
// validation set for the xdot != 0 precondition (VanishingVelocity).
// Derivatives of alpha and theta are analytic; beta falls back to finite
// differences.
GaugeFunctions canonical_gauge(const SmoothFn& x_base, Cx eps,
                               const Coefficient& G,
                               const std::vector<double>& t_grid);
GaugeFunctions canonical_gauge(const Trajectory& x_base, Cx eps,
                               const Coefficient& G,
                               const std::vector<double>& t_grid);

} // namespace lienard
