#include "lienard/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lienard/equations.hpp"
#include "lienard/errors.hpp"
#include "lienard/factorization.hpp"
#include "lienard/quadrature.hpp"
#include "lienard/roots.hpp"

namespace lienard {

namespace {

// Eq 32 residual c(c^2-1) - (-+5), Upper taking the top (-5).
Cx cubic_residual(Cx c, Branch branch) {
    const double rhs = branch == Branch::Upper ? -5.0 : 5.0;
    return c * (c * c - 1.0) - rhs;
}

} // namespace

std::vector<Cx> solve_c(Branch branch) {
    const double k = branch == Branch::Upper ? 5.0 : -5.0;
    std::vector<Cx> roots = poly_roots({Cx{1.0, 0.0}, Cx{}, Cx{-1.0, 0.0}, Cx{k, 0.0}});
    std::stable_partition(roots.begin(), roots.end(), [](const Cx& r) {
        return std::abs(r.imag()) < 1e-10;
    });
    return roots;
}

ExactSolutionBranch make_branch(Cx c, Branch branch) {
    if (std::abs(cubic_residual(c, branch)) > 1e-10)
        throw NotARoot("make_branch: c does not satisfy the cubic for this branch");
    const Cx i{0.0, 1.0};
    const double top = branch == Branch::Upper ? 1.0 : -1.0;
    ExactSolutionBranch b;
    b.branch = branch;
    b.c = c;
    b.theta = top * (1.0 - c * c) / 5.0;
    b.theta_real = std::abs(b.theta.imag()) < 1e-12;
    b.eps = i;
    b.coeffs.F1 = Coefficient(i * (c * c - 1.0));
    b.coeffs.F2 = Coefficient(ep_term(-c * b.theta, i * b.theta, 0, 0));
    b.coeffs.G = Coefficient((6.0 / 25.0) * (1.0 - c * c));
    const Cx theta = b.theta;
    b.z = [c, theta, i](double t) { return c * std::exp(i * theta * t); };
    b.zdot = [c, theta, i](double t) { return i * c * theta * std::exp(i * theta * t); };
    return b;
}

double theta_c_identity(const ExactSolutionBranch& b) {
    return std::abs(b.theta * b.c - 1.0);
}

Cx consistent_G(Cx c, Cx theta, Cx eps) {
    const Cx i{0.0, 1.0};
    const Cx G = theta * theta + i * eps * theta * (1.0 - c * c);
    // Substitute z = c*e^{i*theta*t} back: the exponential factors out for
    // real c, leaving -theta^2*c + eps*(c^2-1)*i*c*theta + G*c.
    const Cx resid = -theta * theta * c + eps * (c * c - 1.0) * (i * c * theta) + G * c;
    if (std::abs(resid) > 1e-12)
        throw Error("consistent_G: internal substitution check failed");
    return G;
}

Eq29Audit audit_eq29(const ExactSolutionBranch& b, Cx kappa,
                     const std::vector<double>& grid) {
    if (grid.empty()) throw Error("audit_eq29: empty grid");
    const auto z = b.z;
    auto speed_excess = [z](double s) -> Cx {
        return Cx{std::norm(z(s)) - 1.0, 0.0};
    };
    Eq29Audit out;
    for (double t : grid) {
        const Cx arg = kappa * quad(speed_excess, 0.0, t, 1e-12);
        const Cx rhs = -(6.0 / b.eps) * std::exp(arg);
        const double r = std::abs(b.zdot(t) - rhs);
        out.t.push_back(t);
        out.residual.push_back(r);
        out.max_residual = std::max(out.max_residual, r);
    }
    return out;
}

KappaSweepResult audit_eq29_kappa_sweep(const ExactSolutionBranch& b,
                                        const std::vector<double>& grid) {
    const Cx eps = b.eps;
    const std::vector<Cx> candidates = {eps, -eps, std::sqrt(6.0) / 6.0 * eps,
                                        -std::sqrt(6.0) / 6.0 * eps};
    KappaSweepResult out;
    out.best_residual = std::numeric_limits<double>::infinity();
    for (const Cx& kappa : candidates) {
        const double r = audit_eq29(b, kappa, grid).max_residual;
        out.tried.emplace_back(kappa, r);
        if (r < out.best_residual) {
            out.best_residual = r;
            out.best_kappa = kappa;
        }
    }
    return out;
}

double exact_solution_Y_residual(const ExactSolutionBranch& b,
                                 const std::function<Cx(double)>& Y,
                                 const std::vector<double>& grid, double h) {
    const CoefficientSet coeffs = b.coeffs;
    OdeResidualFn ode = [coeffs](double t, Cx y, Cx yp, Cx ypp) {
        return ypp - deformed_rhs(coeffs, t, y, yp);
    };
    return verify_ode_residual(Y, ode, grid, h);
}

} // namespace lienard
