#include "lienard/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include "lienard/errors.hpp"

namespace lienard {

namespace {

void require_point_field(const VectorField2D& v) {
    for (const Term& t : v.xi.terms())
        if (t.q != 0) throw Error("VectorField2D: xi must not depend on y'");
    for (const Term& t : v.eta.terms())
        if (t.q != 0) throw Error("VectorField2D: eta must not depend on y'");
}

ExpPoly require_symbolic(const Coefficient& c, const char* name) {
    if (!c.symbolic())
        throw Error(std::string("rhs_exppoly: ") + name + " is not symbolic");
    return c.sym();
}

// v applied to a scalar: xi*dg/dx + eta*dg/dy.
ExpPoly apply_field(const VectorField2D& v, const ExpPoly& g) {
    return ep_add(ep_mul(v.xi, ep_diff(g, Var::X)),
                  ep_mul(v.eta, ep_diff(g, Var::Y)));
}

} // namespace

ExpPoly rhs_exppoly(const CoefficientSet& coeffs) {
    const ExpPoly F1 = require_symbolic(coeffs.F1, "F1");
    const ExpPoly F2 = require_symbolic(coeffs.F2, "F2");
    const ExpPoly G = require_symbolic(coeffs.G, "G");
    const ExpPoly y = ep_y();
    const ExpPoly yp = ep_yprime();
    return ep_neg(ep_add(ep_add(ep_mul(F1, yp), ep_mul(F2, ep_mul(y, y))),
                         ep_mul(G, y)));
}

ExpPoly lin_symmetry_residual(const VectorField2D& v, const ExpPoly& f) {
    require_point_field(v);
    const ExpPoly& xi = v.xi;
    const ExpPoly& eta = v.eta;
    const ExpPoly yp = ep_yprime();
    const ExpPoly yp2 = ep_mul(yp, yp);
    const ExpPoly yp3 = ep_mul(yp2, yp);

    const ExpPoly xi_x = ep_diff(xi, Var::X);
    const ExpPoly xi_y = ep_diff(xi, Var::Y);
    const ExpPoly xi_xx = ep_diff(xi_x, Var::X);
    const ExpPoly xi_xy = ep_diff(xi_x, Var::Y);
    const ExpPoly xi_yy = ep_diff(xi_y, Var::Y);
    const ExpPoly eta_x = ep_diff(eta, Var::X);
    const ExpPoly eta_y = ep_diff(eta, Var::Y);
    const ExpPoly eta_xx = ep_diff(eta_x, Var::X);
    const ExpPoly eta_xy = ep_diff(eta_x, Var::Y);
    const ExpPoly eta_yy = ep_diff(eta_y, Var::Y);
    const ExpPoly f_x = ep_diff(f, Var::X);
    const ExpPoly f_y = ep_diff(f, Var::Y);
    const ExpPoly f_yp = ep_diff(f, Var::YPrime);

    ExpPoly r = eta_xx;
    r = ep_add(r, ep_mul(ep_sub(ep_scale(eta_xy, 2.0), xi_xx), yp));
    r = ep_add(r, ep_mul(ep_sub(eta_yy, ep_scale(xi_xy, 2.0)), yp2));
    r = ep_sub(r, ep_mul(yp3, xi_yy));
    r = ep_sub(r, ep_mul(xi, f_x));
    r = ep_sub(r, ep_mul(eta, f_y));
    const ExpPoly lead = ep_sub(ep_sub(eta_y, ep_scale(xi_x, 2.0)),
                                ep_scale(ep_mul(yp, xi_y), 3.0));
    r = ep_add(r, ep_mul(lead, f));
    const ExpPoly dlead = ep_add(eta_x, ep_sub(ep_mul(ep_sub(eta_y, xi_x), yp),
                                               ep_mul(yp2, xi_y)));
    r = ep_sub(r, ep_mul(dlead, f_yp));
    return r;
}

DeterminingSystem extract_determining_system(const VectorField2D& v,
                                             const CoefficientSet& coeffs) {
    require_point_field(v);
    const ExpPoly F1 = require_symbolic(coeffs.F1, "F1");
    const ExpPoly F2 = require_symbolic(coeffs.F2, "F2");
    const ExpPoly G = require_symbolic(coeffs.G, "G");
    const ExpPoly F1_x = ep_diff(F1, Var::X);
    const ExpPoly F2_x = ep_diff(F2, Var::X);
    const ExpPoly G_x = ep_diff(G, Var::X);

    const ExpPoly& xi = v.xi;
    const ExpPoly& eta = v.eta;
    const ExpPoly xi_x = ep_diff(xi, Var::X);
    const ExpPoly xi_y = ep_diff(xi, Var::Y);
    const ExpPoly xi_xx = ep_diff(xi_x, Var::X);
    const ExpPoly xi_xy = ep_diff(xi_x, Var::Y);
    const ExpPoly xi_yy = ep_diff(xi_y, Var::Y);
    const ExpPoly eta_x = ep_diff(eta, Var::X);
    const ExpPoly eta_y = ep_diff(eta, Var::Y);
    const ExpPoly eta_xx = ep_diff(eta_x, Var::X);
    const ExpPoly eta_xy = ep_diff(eta_x, Var::Y);
    const ExpPoly eta_yy = ep_diff(eta_y, Var::Y);
    const ExpPoly shear = ep_sub(eta_y, ep_scale(xi_x, 2.0));

    DeterminingSystem sys;
    sys.groups["y'3"] = xi_yy;
    sys.groups["y'2"] = ep_add(ep_sub(eta_yy, ep_scale(xi_xy, 2.0)),
                               ep_scale(ep_mul(F1, xi_y), 2.0));
    sys.groups["y'"] = ep_add(ep_sub(ep_scale(eta_xy, 2.0), xi_xx),
                              ep_add(ep_mul(xi, F1_x), ep_mul(F1, xi_x)));
    sys.groups["y2"] = ep_sub(ep_mul(xi, F2_x), ep_mul(F2, shear));
    sys.groups["y"] = ep_sub(ep_add(ep_mul(xi, G_x),
                                    ep_scale(ep_mul(F2, eta), 2.0)),
                             ep_mul(G, shear));
    sys.groups["y0"] = ep_sub(ep_add(eta_xx, ep_mul(eta_x, F1)), ep_mul(eta, G));
    sys.groups["yy'"] = ep_scale(ep_mul(G, xi_y), 3.0);

    // What the printed grouping fails to cover.
    const ExpPoly y = ep_y();
    const ExpPoly yp = ep_yprime();
    const std::map<std::string, ExpPoly> monomials = {
        {"y'3", ep_mul(ep_mul(yp, yp), yp)},
        {"y'2", ep_mul(yp, yp)},
        {"y'", yp},
        {"y2", ep_mul(y, y)},
        {"y", y},
        {"y0", ep_constant(Cx{1.0, 0.0})},
        {"yy'", ep_mul(y, yp)},
    };
    ExpPoly covered;
    for (const char* label : kGroupLabels)
        covered = ep_add(covered, ep_mul(sys.groups.at(label), monomials.at(label)));
    sys.extra = ep_sub(lin_symmetry_residual(v, rhs_exppoly(coeffs)), covered);
    return sys;
}

ExpPoly solve_xi(Cx F1, Cx A, Cx B) {
    return ep_add(ep_constant(A), ep_term(B, F1, 0, 0));
}

std::pair<Cx, Cx> char_roots(Cx F1, Cx G) {
    const Cx disc = psqrt(F1 * F1 + 4.0 * G);
    return {(F1 + disc) / 2.0, (F1 - disc) / 2.0};
}

std::pair<Cx, Cx> eq55_roots(Cx F1, Cx G) {
    const Cx disc = psqrt(F1 * F1 + 4.0 * G);
    return {0.5 * (F1 + disc / 2.0), 0.5 * (F1 - disc / 2.0)};
}

ClaimedAlphaCheck claimed_alpha_check(const ExactSolutionBranch& b) {
    const Cx i{0.0, 1.0};
    const Cx F1 = b.coeffs.F1(0.0);
    const Cx G = b.coeffs.G(0.0);
    ClaimedAlphaCheck out;
    std::tie(out.oracle_plus, out.oracle_minus) = char_roots(F1, G);
    out.claimed_plus = -i * b.theta + F1;
    out.claimed_minus = i * b.theta;
    out.deviation_plus = std::abs(out.claimed_plus - out.oracle_plus);
    out.deviation_minus = std::abs(out.claimed_minus - out.oracle_minus);
    out.sum_rule_residual = std::abs(out.claimed_plus + out.claimed_minus - F1);
    const auto [p55, m55] = eq55_roots(F1, G);
    out.eq55_deviation = std::max(std::abs(p55 - out.oracle_plus),
                                  std::abs(m55 - out.oracle_minus));
    out.theta_eq58 = (1.0 - b.c * b.c) / 5.0;
    return out;
}

std::pair<VectorField2D, VectorField2D> make_generators(Cx F1, Cx alpha_plus,
                                                        Cx alpha_minus) {
    VectorField2D X1{ep_constant(Cx{1.0, 0.0}), ep_exp_x(-alpha_plus)};
    VectorField2D X2{ep_exp_x(F1), ep_exp_x(-alpha_minus)};
    return {X1, X2};
}

VectorField2D commutator(const VectorField2D& a, const VectorField2D& b) {
    require_point_field(a);
    require_point_field(b);
    VectorField2D r;
    r.xi = ep_sub(apply_field(a, b.xi), apply_field(b, a.xi));
    r.eta = ep_sub(apply_field(a, b.eta), apply_field(b, a.eta));
    return r;
}

InvarianceAudit invariance_audit(const VectorField2D& v,
                                 const CoefficientSet& coeffs, int x_nodes,
                                 double tol) {
    if (x_nodes < 2) throw Error("invariance_audit: need >= 2 x nodes");
    InvarianceAudit out;
    out.residual = lin_symmetry_residual(v, rhs_exppoly(coeffs));

    // One period of the fastest F2 rate (full turn of the slowest nonzero
    // rate would also do; F2 carries the only oscillation here).
    double rate = 0.0;
    for (const Term& t : coeffs.F2.sym().terms())
        rate = std::max(rate, std::abs(t.lambda));
    const double two_pi = 2.0 * std::numbers::pi;
    const double x_max = rate > 0.0 ? two_pi / rate : two_pi;

    const Cx i{0.0, 1.0};
    const std::array<Cx, 4> ys = {Cx{1, 0}, Cx{-1, 0}, i, -i};
    const std::array<Cx, 3> yps = {Cx{}, Cx{1, 0}, Cx{-1, 0}};
    for (int k = 0; k < x_nodes; ++k) {
        const double x = x_max * k / (x_nodes - 1);
        for (const Cx& y : ys)
            for (const Cx& yp : yps)
                out.max_abs = std::max(out.max_abs,
                                       std::abs(ep_eval(out.residual, x, y, yp)));
    }

    const ZeroWitness w = ep_is_zero(out.residual, tol);
    out.pass = w.zero;
    if (!w.zero) out.witness = render_term(w.witness);
    return out;
}

} // namespace lienard
