#pragma once

#include <functional>
#include <vector>

#include "lienard/coefficients.hpp"
#include "lienard/types.hpp"

namespace lienard {

// f(Y, t) = sqrtY_coeff(t)*sqrt(Y) + const_coeff(t), principal root.
struct HalfPowerAffine {
    Coefficient sqrtY_coeff;
    Coefficient const_coeff;
};

// Factor pair of the deformed operator, alpha^2 = -2/3.
struct FactorPair {
    HalfPowerAffine f1;
    HalfPowerAffine f2;
    Cx alpha;
};

// f1 = alpha*(sqrt(F2 Y) + i sqrt(G)), f2 = alpha^{-1}*(sqrt(F2 Y) - i sqrt(G)),
// alpha = +-i*sqrt(2/3) per branch.
FactorPair make_factor_pair(const CoefficientSet& coeffs, Sign branch);

// Residuals of the factorization identities, expanded in the carrier algebra
// {1, sqrt(Y), Y}; each is the max coefficient magnitude over probe_t.
struct FactorizationReport {
    // f1*f2 - (F2*Y + G): Y, sqrt(Y) and constant slots.
    double product_residual = 0.0;
    // sqrt(Y) slot of f1 + f2 + Y*df1/dY; zero iff alpha^2 = -2/3.
    double sqrtY_cancel_residual = 0.0;
    // constant slot of -(f1 + f2 + Y*df1/dY) - F1; zero iff the F1-G
    // relation holds for the pair's branch.
    double F1_residual = 0.0;
};

FactorizationReport verify_factorization(const FactorPair& pair,
                                         const CoefficientSet& coeffs,
                                         const std::vector<double>& probe_t = {0.0});

// F1 - (+-5/sqrt(6))*sqrt(G) at time t.
Cx check_F1_G_relation(const CoefficientSet& coeffs, Sign branch, double t = 0.0);

// Closed-form solution of the factored first-order equation:
// Y = -mu^2 * (integral of sqrt(F2/6)*mu from t0)^{-2},
// mu = e^{-+ integral of sqrt(G/6) from t0}.
// Y throws NearPole where |integral| <= 1e-6.
struct BernoulliSolution {
    std::function<Cx(double)> Y;
    std::function<Cx(double)> mu;
    std::function<Cx(double)> integral;
    Sign sign = Sign::Plus;
    double t0 = 0.0;
};

BernoulliSolution bernoulli_solution(const CoefficientSet& coeffs, Sign sign,
                                     double t0 = 0.0);

// Pointwise residual form r(t, y, y', y'') of a first- or second-order ODE;
// first-order forms ignore the last argument.
using OdeResidualFn = std::function<Cx(double, Cx, Cx, Cx)>;

// Max |r| over the grid, derivatives of sol taken by central differences
// (step h, 0 = default). Grid needs >= 5 points spaced > 4h apart.
double verify_ode_residual(const std::function<Cx(double)>& sol,
                           const OdeResidualFn& ode,
                           const std::vector<double>& grid, double h = 0.0);

// Residual of the factored first-order form with explicit control of the
// half-power branch: r = Y' - hb*2i*sqrt(F2/6)*Y*sqrt(Y) + sg*2*sqrt(G/6)*Y,
// half_branch hb in {+1, -1} selecting which square root of Y^3 the Y^{3/2}
// means. hb = +1 is the principal choice and the one the closed form
// satisfies whenever arg(mu/integral) lies in (-pi, 0].
double bernoulli_eq19_residual(const CoefficientSet& coeffs, Sign sign,
                               const std::function<Cx(double)>& Y,
                               const std::vector<double>& grid,
                               int half_branch = +1, double h = 0.0);

// Same residual at a single time, for per-sample reporting.
Cx bernoulli_eq19_pointwise(const CoefficientSet& coeffs, Sign sign,
                            const std::function<Cx(double)>& Y, double t,
                            int half_branch = +1, double h = 0.0);

// omega = (1/4)*(C1 +- i * integral of sqrt(F2/6) from t0)^2 and its
// companion Y = omega^{-2}.
struct OmegaSolution {
    std::function<Cx(double)> omega;
    std::function<Cx(double)> Y;
};

OmegaSolution omega_special_solution(const CoefficientSet& coeffs, Cx C1,
                                     Sign sign, double t0 = 0.0);

// Residual of the omega equation
//   omega' -+ sqrt(G/6)*omega = -+ i*sqrt(F2/6)
//           - (1/2)*omega^3*e^{-+ i*sqrt(3/2)*int(sqrt(F2/omega) - i*sqrt(G))}
// with the inner integral anchored at t0 and evaluated on a fixed Simpson
// grid (the integrand can cross the principal cut mid-interval). Reported,
// not asserted.
double omega_ode_residual(const std::function<Cx(double)>& omega,
                          const CoefficientSet& coeffs, Sign sign,
                          const std::vector<double>& grid, double t0 = 0.0,
                          double h = 0.0);

// phi'/phi = -+ i*sqrt(3*F2/(2*omega)) + 3*omega'/omega at time t; zero
// would justify the constant-phi specialization.
Cx phi_log_derivative(const std::function<Cx(double)>& omega,
                      const CoefficientSet& coeffs, Sign sign, double t,
                      double h = 0.0);

} // namespace lienard
