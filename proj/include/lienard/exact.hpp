#pragma once

#include <functional>
#include <vector>

#include "lienard/coefficients.hpp"
#include "lienard/types.hpp"

namespace lienard {

// One row of the closed-form solution table: z = c*e^{i*theta*t} with eps = i,
// c a root of c(c^2-1) = -+5 and theta = +-(1-c^2)/5 (top symbols = Upper).
// theta*c = 1 on every root of either branch.
struct ExactSolutionBranch {
    Branch branch = Branch::Upper;
    Cx c{};
    Cx theta{};
    bool theta_real = false;  // true for the real root; theta stays Cx either way
    Cx eps{};
    CoefficientSet coeffs;    // F1 = i(c^2-1), F2 = -c*theta*e^{i*theta*t}, G = (6/25)(1-c^2)
    std::function<Cx(double)> z;
    std::function<Cx(double)> zdot;
};

// Roots of c^3 - c +- 5 (Upper: +5), real root first, the rest sorted.
std::vector<Cx> solve_c(Branch branch);

// Builds the full record; NotARoot when the cubic residual of c exceeds 1e-10.
ExactSolutionBranch make_branch(Cx c, Branch branch);

// |theta*c - 1|.
double theta_c_identity(const ExactSolutionBranch& b);

// The G that actually makes z = c*e^{i*theta*t} (real c) solve the
// generalized equation: G* = theta^2 + i*eps*theta*(1 - c^2). Verified
// internally by substitution; the audit compares it with the published G.
Cx consistent_G(Cx c, Cx theta, Cx eps);

struct Eq29Audit {
    std::vector<double> t;
    std::vector<double> residual;
    double max_residual = 0.0;
};

// Pointwise |zdot(t) + (6/eps)*e^{kappa*int(|z|^2-1)}| on the grid. The
// printed exponent prefactor is ambiguous, so kappa is explicit.
Eq29Audit audit_eq29(const ExactSolutionBranch& b, Cx kappa,
                     const std::vector<double>& grid);

struct KappaSweepResult {
    std::vector<std::pair<Cx, double>> tried;  // (kappa, max residual)
    Cx best_kappa{};
    double best_residual = 0.0;
};

// Tries kappa in {eps, -eps, sqrt(6)*eps/6, -sqrt(6)*eps/6} and reports
// which reading of the prefactor comes closest. Calibration only.
KappaSweepResult audit_eq29_kappa_sweep(const ExactSolutionBranch& b,
                                        const std::vector<double>& grid);

// Max residual of the deformed equation Y'' + F1*Y' + F2*Y^2 + G*Y = 0 with
// the branch coefficients, derivatives by finite differences.
double exact_solution_Y_residual(const ExactSolutionBranch& b,
                                 const std::function<Cx(double)>& Y,
                                 const std::vector<double>& grid,
                                 double h = 0.0);

} // namespace lienard
