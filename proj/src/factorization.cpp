#include "lienard/factorization.hpp"

#include <cmath>

#include "lienard/errors.hpp"
#include "lienard/finite_diff.hpp"
#include "lienard/quadrature.hpp"

namespace lienard {

namespace {

constexpr double kPoleThreshold = 1e-6;
constexpr double kOmegaThreshold = 1e-12;

// Shift an integrand evaluation off the anchor point. The coefficient square
// roots can sit exactly on the principal cut at the anchor (arg = pi there,
// a removable jump), which stalls adaptive bisection; one ulp-scale nudge
// restores smoothness without moving the integral. The nudge must point into
// the integration interval, or the endpoint value lands on the wrong side of
// the cut and bisection stalls anyway; dir = sign(t_target - t0).
std::function<Cx(double)> shift_anchor(std::function<Cx(double)> f, double t0,
                                       double dir = 1.0) {
    const double t0_shifted =
        t0 + (dir < 0.0 ? -1e-12 : 1e-12) * (1.0 + std::abs(t0));
    return [f = std::move(f), t0, t0_shifted](double u) {
        return f(u == t0 ? t0_shifted : u);
    };
}

} // namespace

FactorPair make_factor_pair(const CoefficientSet& coeffs, Sign branch) {
    const Cx i{0.0, 1.0};
    const Cx alpha = sign_value(branch) * i * std::sqrt(2.0 / 3.0);
    const Cx inv_alpha = 1.0 / alpha;
    const Coefficient& F2 = coeffs.F2;
    const Coefficient& G = coeffs.G;
    FactorPair pair;
    pair.alpha = alpha;
    pair.f1.sqrtY_coeff = Coefficient(std::function<Cx(double)>(
        [alpha, F2](double t) { return alpha * psqrt(F2(t)); }));
    pair.f1.const_coeff = Coefficient(std::function<Cx(double)>(
        [alpha, G, i](double t) { return i * alpha * psqrt(G(t)); }));
    pair.f2.sqrtY_coeff = Coefficient(std::function<Cx(double)>(
        [inv_alpha, F2](double t) { return inv_alpha * psqrt(F2(t)); }));
    pair.f2.const_coeff = Coefficient(std::function<Cx(double)>(
        [inv_alpha, G, i](double t) { return -i * inv_alpha * psqrt(G(t)); }));
    return pair;
}

FactorizationReport verify_factorization(const FactorPair& pair,
                                         const CoefficientSet& coeffs,
                                         const std::vector<double>& probe_t) {
    if (probe_t.empty())
        throw Error("verify_factorization: empty probe grid");
    FactorizationReport rep;
    for (double t : probe_t) {
        const Cx A = pair.f1.sqrtY_coeff(t), B = pair.f1.const_coeff(t);
        const Cx C = pair.f2.sqrtY_coeff(t), D = pair.f2.const_coeff(t);
        // f1*f2 = AC*Y + (AD + BC)*sqrt(Y) + BD against F2*Y + G.
        const double prod = std::max({std::abs(A * C - coeffs.F2(t)),
                                      std::abs(A * D + B * C),
                                      std::abs(B * D - coeffs.G(t))});
        // f1 + f2 + Y*df1/dY = (3A/2 + C)*sqrt(Y) + (B + D).
        const double cancel = std::abs(1.5 * A + C);
        const double f1res = std::abs(-(B + D) - coeffs.F1(t));
        rep.product_residual = std::max(rep.product_residual, prod);
        rep.sqrtY_cancel_residual = std::max(rep.sqrtY_cancel_residual, cancel);
        rep.F1_residual = std::max(rep.F1_residual, f1res);
    }
    return rep;
}

Cx check_F1_G_relation(const CoefficientSet& coeffs, Sign branch, double t) {
    return coeffs.F1(t) -
           sign_value(branch) * (5.0 / std::sqrt(6.0)) * psqrt(coeffs.G(t));
}

BernoulliSolution bernoulli_solution(const CoefficientSet& coeffs, Sign sign,
                                     double t0) {
    const double sg = sign_value(sign);
    const Coefficient F2 = coeffs.F2;
    const Coefficient G = coeffs.G;
    auto mu = [G, sg, t0](double t) {
        auto g_int = shift_anchor([G](double u) { return psqrt(G(u) / 6.0); },
                                  t0, t - t0);
        return std::exp(-sg * quad(g_int, t0, t, 1e-12));
    };
    auto integral = [F2, mu, t0](double t) {
        auto f_int = shift_anchor(
            [F2, mu](double u) { return psqrt(F2(u) / 6.0) * mu(u); }, t0,
            t - t0);
        return quad(f_int, t0, t, 1e-12);
    };
    auto Y = [mu, integral](double t) -> Cx {
        const Cx I = integral(t);
        if (std::abs(I) <= kPoleThreshold)
            throw NearPole("bernoulli_solution: evaluation at a double pole");
        const Cx m = mu(t);
        const Cx w = m / I;
        return -w * w;
    };
    return {Y, mu, integral, sign, t0};
}

double verify_ode_residual(const std::function<Cx(double)>& sol,
                           const OdeResidualFn& ode,
                           const std::vector<double>& grid, double h) {
    if (grid.size() < 5)
        throw Error("verify_ode_residual: need >= 5 grid points");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double hi = h > 0.0
                              ? h
                              : 1e-4 * std::max(1.0, std::abs(grid[i]));
        if (grid[i] - grid[i - 1] <= 4.0 * hi)
            throw Error("verify_ode_residual: grid spacing must exceed the "
                        "4h stencil width");
    }
    double worst = 0.0;
    for (double t : grid) {
        const Cx y = sol(t);
        const Cx yp = fd_derivative(sol, t, 1, h);
        const Cx ypp = fd_derivative(sol, t, 2, h);
        worst = std::max(worst, std::abs(ode(t, y, yp, ypp)));
    }
    return worst;
}

namespace {

OdeResidualFn eq19_residual_fn(const CoefficientSet& coeffs, Sign sign,
                               int half_branch) {
    if (half_branch != 1 && half_branch != -1)
        throw Error("bernoulli_eq19_residual: half_branch must be +-1");
    const double sg = sign_value(sign);
    const double hb = half_branch;
    const Cx i{0.0, 1.0};
    const Coefficient F2 = coeffs.F2;
    const Coefficient G = coeffs.G;
    return [F2, G, sg, hb, i](double t, Cx y, Cx yp, Cx) {
        return yp - hb * 2.0 * i * psqrt(F2(t) / 6.0) * y * psqrt(y) +
               sg * 2.0 * psqrt(G(t) / 6.0) * y;
    };
}

} // namespace

double bernoulli_eq19_residual(const CoefficientSet& coeffs, Sign sign,
                               const std::function<Cx(double)>& Y,
                               const std::vector<double>& grid,
                               int half_branch, double h) {
    return verify_ode_residual(Y, eq19_residual_fn(coeffs, sign, half_branch),
                               grid, h);
}

Cx bernoulli_eq19_pointwise(const CoefficientSet& coeffs, Sign sign,
                            const std::function<Cx(double)>& Y, double t,
                            int half_branch, double h) {
    const OdeResidualFn ode = eq19_residual_fn(coeffs, sign, half_branch);
    return ode(t, Y(t), fd_derivative(Y, t, 1, h), Cx{});
}

OmegaSolution omega_special_solution(const CoefficientSet& coeffs, Cx C1,
                                     Sign sign, double t0) {
    const double sg = sign_value(sign);
    const Cx i{0.0, 1.0};
    const Coefficient F2 = coeffs.F2;
    auto omega = [F2, C1, sg, i, t0](double t) {
        auto f_int = shift_anchor(
            [F2](double u) { return psqrt(F2(u) / 6.0); }, t0, t - t0);
        const Cx w = C1 + sg * i * quad(f_int, t0, t, 1e-12);
        return 0.25 * w * w;
    };
    auto Y = [omega](double t) -> Cx {
        const Cx w = omega(t);
        if (std::abs(w) < kOmegaThreshold)
            throw VanishingOmega("omega_special_solution: omega vanishes");
        return 1.0 / (w * w);
    };
    return {omega, Y};
}

double omega_ode_residual(const std::function<Cx(double)>& omega,
                          const CoefficientSet& coeffs, Sign sign,
                          const std::vector<double>& grid, double t0,
                          double h) {
    if (grid.empty()) throw Error("omega_ode_residual: empty grid");
    const double sg = sign_value(sign);
    const Cx i{0.0, 1.0};
    const Coefficient F2 = coeffs.F2;
    const Coefficient G = coeffs.G;
    auto inner = [F2, G, omega, i](double u) -> Cx {
        const Cx w = omega(u);
        if (std::abs(w) < kOmegaThreshold)
            throw VanishingOmega("omega_ode_residual: omega vanishes on the "
                                 "inner integral path");
        return psqrt(F2(u) / w) - i * psqrt(G(u));
    };
    double worst = 0.0;
    for (double t : grid) {
        const Cx w = omega(t);
        if (std::abs(w) < kOmegaThreshold)
            throw VanishingOmega("omega_ode_residual: omega vanishes on the grid");
        const Cx wp = fd_derivative(omega, t, 1, h);
        const Cx K = composite_simpson(inner, t0, t, 1024);
        const Cx rhs = -sg * i * psqrt(F2(t) / 6.0) -
                       0.5 * w * w * w *
                           std::exp(-sg * i * std::sqrt(1.5) * K);
        const Cx lhs = wp - sg * psqrt(G(t) / 6.0) * w;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

Cx phi_log_derivative(const std::function<Cx(double)>& omega,
                      const CoefficientSet& coeffs, Sign sign, double t,
                      double h) {
    const Cx w = omega(t);
    if (std::abs(w) < kOmegaThreshold)
        throw VanishingOmega("phi_log_derivative: omega vanishes");
    const Cx wp = fd_derivative(omega, t, 1, h);
    const Cx i{0.0, 1.0};
    return -sign_value(sign) * i * psqrt(3.0 * coeffs.F2(t) / (2.0 * w)) +
           3.0 * wp / w;
}

} // namespace lienard
