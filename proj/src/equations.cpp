#include "lienard/equations.hpp"

#include <cmath>
#include <memory>

#include "lienard/errors.hpp"
#include "lienard/finite_diff.hpp"
#include "lienard/quadrature.hpp"

namespace lienard {

Coefficient::Coefficient(ExpPoly sym) : symbolic_(true), sym_(std::move(sym)) {
    for (const Term& t : sym_.terms())
        if (t.p != 0 || t.q != 0)
            throw Error("Coefficient: symbolic form must not depend on y or y'");
}

GaugeFunctions identity_gauge() {
    GaugeFunctions g;
    g.alpha = {[](double) { return Cx{1.0, 0.0}; },
               [](double) { return Cx{}; },
               [](double) { return Cx{}; }};
    g.beta_tilde = {[](double) { return Cx{}; },
                    [](double) { return Cx{}; },
                    [](double) { return Cx{}; }};
    g.theta = {[](double t) { return Cx{t, 0.0}; },
               [](double) { return Cx{1.0, 0.0}; },
               [](double) { return Cx{}; }};
    return g;
}

Cx vdp_rhs(Cx eps, double, Cx z, Cx zdot) {
    return eps * (1.0 - std::norm(z)) * zdot - z;
}

CoefficientSet deform_coefficients(const Trajectory& base, Cx eps, Coefficient G) {
    if (!base.has_derivatives())
        throw MissingDerivatives("deform_coefficients: base orbit lacks derivatives");
    auto tr = std::make_shared<Trajectory>(base);
    CoefficientSet cs;
    cs.F1 = Coefficient(std::function<Cx(double)>(
        [tr, eps](double t) { return eps * (std::norm(tr->value(t)) - 1.0); }));
    cs.F2 = Coefficient(std::function<Cx(double)>(
        [tr, eps](double t) { return eps * tr->derivative(t); }));
    cs.G = std::move(G);
    return cs;
}

CoefficientSet deform_coefficients(Cx c, Cx theta, Cx eps, Coefficient G) {
    const Cx i{0.0, 1.0};
    CoefficientSet cs;
    // |z|^2 = |c|^2 e^{-2 Im(theta) t}; rates merge to a constant for real theta.
    cs.F1 = Coefficient(ep_add(ep_term(eps * std::norm(c), Cx{-2.0 * theta.imag(), 0.0}, 0, 0),
                               ep_constant(-eps)));
    cs.F2 = Coefficient(ep_term(eps * i * c * theta, i * theta, 0, 0));
    cs.G = std::move(G);
    return cs;
}

Cx deformed_rhs(const CoefficientSet& coeffs, double t, Cx Y, Cx Ydot) {
    return -(coeffs.F1(t) * Ydot) - coeffs.F2(t) * (Y * Y) - coeffs.G(t) * Y;
}

std::vector<SkeletonNode> skeleton_grid(const CoefficientSet& coeffs,
                                        std::pair<double, double> y_range,
                                        std::pair<double, double> p_range,
                                        int n, double t) {
    if (n < 2) throw Error("skeleton_grid: need n >= 2");
    std::vector<SkeletonNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n) * n);
    for (int iy = 0; iy < n; ++iy) {
        const double Y = y_range.first +
                         iy * (y_range.second - y_range.first) / (n - 1);
        for (int ip = 0; ip < n; ++ip) {
            const double P = p_range.first +
                             ip * (p_range.second - p_range.first) / (n - 1);
            nodes.push_back({Y, P, deformed_rhs(coeffs, t, Cx{Y, 0.0}, Cx{P, 0.0})});
        }
    }
    return nodes;
}

TransformedCoefficients transform_coefficients(const CoefficientSet& coeffs,
                                               const GaugeFunctions& gauge,
                                               double t) {
    const Cx a = gauge.alpha.value(t);
    const Cx ap = gauge.alpha.d1(t);
    const Cx app = gauge.alpha.d2(t);
    const Cx b = gauge.beta_tilde.value(t);
    const Cx bp = gauge.beta_tilde.d1(t);
    const Cx bpp = gauge.beta_tilde.d2(t);
    const Cx th = gauge.theta.value(t);
    const Cx thp = gauge.theta.d1(t);
    const Cx thpp = gauge.theta.d2(t);
    if (std::abs(a * thp) < 1e-12)
        throw SingularGauge("transform_coefficients: |alpha*theta'| < 1e-12");

    const Cx F1 = coeffs.F1(t);
    const Cx F2 = coeffs.F2(t);
    const Cx G = coeffs.G(t);
    const Cx theta_ratio = thpp == Cx{} ? Cx{} : thpp / th;
    const Cx thp2 = thp * thp;

    TransformedCoefficients out;
    out.dY = (2.0 * ap / a + theta_ratio - F1) / thp;
    out.Y2 = -F2 * a / thp2;
    out.Y = (app / a + 2.0 * F2 * b + F1 * ap / a) / thp2;
    out.constant = a * (bpp + F2 * (b * b) + F1 * bp - G) / thp2;
    return out;
}

namespace {

struct BaseFns {
    std::function<Cx(double)> x, dx, ddx;
};

GaugeFunctions build_gauge(const BaseFns& xf, Cx eps, const Coefficient& G,
                           const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw Error("canonical_gauge: empty t_grid");
    for (double t : t_grid)
        if (std::abs(xf.dx(t)) < 1e-10)
            throw VanishingVelocity("canonical_gauge: xdot vanishes on the grid");

    const double t0 = t_grid.front();
    // (Ln alpha)' straight from the pinning relation; x^2 is the complex
    // square, exactly as displayed.
    auto L = [xf, eps](double t) -> Cx {
        const Cx x = xf.x(t);
        return -0.4 * (eps * (1.0 - x * x) + xf.ddx(t) / (2.0 * xf.dx(t)));
    };
    auto Lp = [L](double t) { return fd_derivative(L, t, 1); };
    auto alpha = [L, t0](double t) { return std::exp(quad(L, t0, t, 1e-12)); };
    auto alpha_d1 = [L, alpha](double t) { return L(t) * alpha(t); };
    auto alpha_d2 = [L, Lp, alpha](double t) {
        const Cx l = L(t);
        return (Lp(t) + l * l) * alpha(t);
    };
    auto theta_d1 = [xf, eps, alpha](double t) {
        return psqrt(-eps * xf.dx(t) * alpha(t) / 6.0);
    };
    auto theta = [theta_d1, t0](double t) { return quad(theta_d1, t0, t, 1e-12); };
    // Differentiate theta'^2 = -eps*xdot*alpha/6 instead of theta' itself:
    // stays exact across the principal-root cut.
    auto theta_d2 = [xf, eps, alpha, alpha_d1, theta_d1](double t) {
        return -eps * (xf.ddx(t) * alpha(t) + xf.dx(t) * alpha_d1(t)) /
               (12.0 * theta_d1(t));
    };
    auto beta = [xf, eps, L, Lp, G](double t) -> Cx {
        const Cx x = xf.x(t);
        const Cx l = L(t);
        return -(1.0 / (2.0 * eps * xf.dx(t))) *
               (-G(t) + eps * (1.0 - x * x) * l + Lp(t) + l * l);
    };
    auto beta_d1 = [beta](double t) { return fd_derivative(beta, t, 1); };
    auto beta_d2 = [beta](double t) { return fd_derivative(beta, t, 2); };

    GaugeFunctions g;
    g.alpha = {alpha, alpha_d1, alpha_d2};
    g.beta_tilde = {beta, beta_d1, beta_d2};
    g.theta = {theta, theta_d1, theta_d2};
    return g;
}

} // namespace

GaugeFunctions canonical_gauge(const SmoothFn& x_base, Cx eps,
                               const Coefficient& G,
                               const std::vector<double>& t_grid) {
    return build_gauge({x_base.value, x_base.d1, x_base.d2}, eps, G, t_grid);
}

GaugeFunctions canonical_gauge(const Trajectory& x_base, Cx eps,
                               const Coefficient& G,
                               const std::vector<double>& t_grid) {
    if (!x_base.has_derivatives())
        throw MissingDerivatives("canonical_gauge: base orbit lacks derivatives");
    auto tr = std::make_shared<Trajectory>(x_base);
    BaseFns xf{[tr](double t) { return tr->value(t); },
               [tr](double t) { return tr->derivative(t); },
               [tr](double t) { return tr->second_derivative(t); }};
    return build_gauge(xf, eps, G, t_grid);
}

} // namespace lienard
