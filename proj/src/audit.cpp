#include "lienard/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "lienard/equations.hpp"
#include "lienard/errors.hpp"
#include "lienard/exact.hpp"
#include "lienard/factorization.hpp"
#include "lienard/integrate.hpp"
#include "lienard/io.hpp"
#include "lienard/symmetry.hpp"

namespace lienard {

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

double max_coeff(const ExpPoly& p) {
    double m = 0.0;
    for (const Term& t : p.terms()) m = std::max(m, std::abs(t.coeff));
    return m;
}

struct CheckResult {
    double residual = 0.0;
    std::string witness;
};

template <typename F>
void run_check(AuditReport& rep, const char* id, const char* anchor,
               double tol, bool gated, F&& body) {
    AuditCheck c;
    c.id = id;
    c.anchor = anchor;
    c.tolerance = tol;
    const auto start = std::chrono::steady_clock::now();
    try {
        CheckResult r = body();
        c.residual = r.residual;
        c.witness = std::move(r.witness);
        c.status = gated ? (c.residual <= tol ? CheckStatus::Pass
                                              : CheckStatus::Fail)
                         : CheckStatus::ReportOnly;
    } catch (const std::exception& e) {
        c.residual = 9e99;
        c.witness = std::string("exception: ") + e.what();
        c.status = gated ? CheckStatus::Fail : CheckStatus::ReportOnly;
    }
    const auto stop = std::chrono::steady_clock::now();
    c.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    rep.checks.push_back(std::move(c));
}

const char* sign_label(Sign s) { return s == Sign::Plus ? "+" : "-"; }

} // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "REPORT-ONLY";
    }
}

const char* to_string(Branch b) { return b == Branch::Upper ? "upper" : "lower"; }

const std::vector<std::string>& anchor_registry() {
    static const std::vector<std::string> anchors = {
        "Eq 5",  "Eq 7",  "Eq 8",  "Eq 10", "Eq 11", "Eq 12", "Eq 13",
        "Eq 14", "Eq 15", "Eq 16", "Eq 17", "Eq 18", "Eq 19", "Eq 20",
        "Eq 24", "Eq 26", "Eq 27", "Eq 29", "Eq 32", "Eq 33", "Eq 34",
        "Eq 37", "Eq 42", "Eq 43", "Eq 45", "Eq 48", "Eq 49", "Eq 53",
        "Eq 55", "Eq 57", "Eq 58", "Eq 59", "Eq 60"};
    return anchors;
}

AuditReport run_full_audit(const AuditConfig& cfg) {
    AuditReport rep;
    rep.config = cfg;
    rep.version = "1.0.0";
    const double ts = cfg.tol_scale;
    const Branch branch = cfg.branch;

    run_check(rep, "cubic_constraint", "Eq 32", 1e-12 * ts, true, [&] {
        const double rhs = branch == Branch::Upper ? -5.0 : 5.0;
        CheckResult r;
        for (const Cx& c : solve_c(branch))
            r.residual = std::max(r.residual, std::abs(c * (c * c - 1.0) - rhs));
        return r;
    });

    run_check(rep, "theta_c", "Eq 33", 1e-12 * ts, true, [&] {
        CheckResult r;
        for (Branch b : {Branch::Upper, Branch::Lower})
            for (const Cx& c : solve_c(b))
                r.residual = std::max(r.residual,
                                      theta_c_identity(make_branch(c, b)));
        return r;
    });

    const ExactSolutionBranch b = make_branch(solve_c(branch).front(), branch);
    const std::vector<double> probes = {0.0, 0.5, 1.0, 1.7};

    run_check(rep, "factorization_product", "Eq 16", 1e-13 * ts, true, [&] {
        CheckResult r;
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const FactorizationReport fr =
                verify_factorization(make_factor_pair(b.coeffs, s), b.coeffs, probes);
            r.residual = std::max(r.residual, fr.product_residual);
        }
        return r;
    });

    run_check(rep, "factorization_sqrtY_cancel", "Eq 17", 1e-13 * ts, true, [&] {
        CheckResult r;
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const FactorizationReport fr =
                verify_factorization(make_factor_pair(b.coeffs, s), b.coeffs, probes);
            r.residual = std::max(r.residual, fr.sqrtY_cancel_residual);
        }
        return r;
    });

    run_check(rep, "eq18_relation", "Eq 18", 0.0, false, [&] {
        const Sign s = branch == Branch::Upper ? Sign::Plus : Sign::Minus;
        CheckResult r;
        r.residual = std::abs(check_F1_G_relation(b.coeffs, s, 0.0));
        r.witness = std::string("sign=") + sign_label(s);
        return r;
    });

    run_check(rep, "bernoulli_eq19", "Eq 20", 1e-6 * ts, true, [&] {
        const std::vector<double> grid = linspace(0.5, 3.0, 11);
        CheckResult r;
        r.residual = std::numeric_limits<double>::infinity();
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const BernoulliSolution sol = bernoulli_solution(b.coeffs, s, 0.0);
            for (int hb : {+1, -1}) {
                const double res =
                    bernoulli_eq19_residual(b.coeffs, s, sol.Y, grid, hb);
                if (res < r.residual) {
                    r.residual = res;
                    r.witness = std::string("sign=") + sign_label(s) +
                                ", half_branch=" + (hb > 0 ? "+1" : "-1");
                }
            }
        }
        return r;
    });

    run_check(rep, "omega_eq24", "Eq 24", 0.0, false, [&] {
        const OmegaSolution sol =
            omega_special_solution(b.coeffs, Cx{2.0, 0.0}, Sign::Plus, 0.0);
        CheckResult r;
        r.residual = omega_ode_residual(sol.omega, b.coeffs, Sign::Plus,
                                        linspace(0.0, 2.0, 9), 0.0);
        r.witness = "C1=2+0i, sign=+";
        return r;
    });

    run_check(rep, "eq29_t0", "Eq 29", 0.0, false, [&] {
        CheckResult r;
        r.residual = audit_eq29(b, cfg.kappa, {0.0}).max_residual;
        r.witness = "kappa=" + format_complex(cfg.kappa);
        return r;
    });

    run_check(rep, "eq29_kappa_sweep", "Eq 29", 0.0, false, [&] {
        const KappaSweepResult sweep =
            audit_eq29_kappa_sweep(b, linspace(0.0, 2.0, 9));
        CheckResult r;
        r.residual = sweep.best_residual;
        r.witness = "best kappa=" + format_complex(sweep.best_kappa);
        return r;
    });

    run_check(rep, "consistent_G_mismatch", "Eq 34", 0.0, false, [&] {
        const Cx g_star = consistent_G(b.c, b.theta, b.eps);
        CheckResult r;
        r.residual = std::abs(b.coeffs.G(0.0) - g_star);
        r.witness = "G*=" + format_complex(g_star) +
                    ", G34=" + format_complex(b.coeffs.G(0.0));
        return r;
    });

    const Cx F1 = b.coeffs.F1(0.0);
    const Cx G0 = b.coeffs.G(0.0);
    const auto [alpha_plus, alpha_minus] = char_roots(F1, G0);

    run_check(rep, "char_roots_vieta", "Eq 48", 1e-12 * ts, true, [&] {
        CheckResult r;
        r.residual = std::max(std::abs(alpha_plus + alpha_minus - F1),
                              std::abs(alpha_plus * alpha_minus + G0));
        return r;
    });

    run_check(rep, "eq55_deviation", "Eq 55", 0.0, false, [&] {
        CheckResult r;
        r.residual = claimed_alpha_check(b).eq55_deviation;
        return r;
    });

    run_check(rep, "eq57_deviation", "Eq 57", 0.0, false, [&] {
        const ClaimedAlphaCheck pc = claimed_alpha_check(b);
        CheckResult r;
        r.residual = pc.deviation_minus;
        r.witness = "claimed alpha-=" + format_complex(pc.claimed_minus) +
                    " vs oracle " + format_complex(pc.oracle_minus);
        return r;
    });

    const auto [X1, X2] = make_generators(F1, alpha_plus, alpha_minus);
    auto group_check = [&](const VectorField2D& v) {
        const DeterminingSystem sys = extract_determining_system(v, b.coeffs);
        CheckResult r;
        std::string worst = "extra";
        r.residual = max_coeff(sys.extra);
        for (const char* label : kGroupLabels) {
            const double m = max_coeff(sys.groups.at(label));
            if (m > r.residual) {
                r.residual = m;
                worst = label;
            }
        }
        r.witness = "worst group: " + worst;
        return r;
    };
    run_check(rep, "determining_groups_X1", "Eq 42", 0.0, false,
              [&] { return group_check(X1); });
    run_check(rep, "determining_groups_X2", "Eq 42", 0.0, false,
              [&] { return group_check(X2); });

    run_check(rep, "commutator_nonzero", "Eq 60", 0.5, true, [&] {
        const VectorField2D k = commutator(X1, X2);
        const bool zero = ep_is_zero(k.xi, 1e-12).zero &&
                          ep_is_zero(k.eta, 1e-12).zero;
        CheckResult r;
        r.residual = zero ? 1.0 : 0.0;
        if (!zero) {
            const ExpPoly& lead = k.xi.empty() ? k.eta : k.xi;
            r.witness = std::string(k.xi.empty() ? "d/dy: " : "d/dx: ") +
                        render_term(lead.terms().front());
        }
        return r;
    });

    run_check(rep, "exact_orbit_eq7", "Eq 7", 1e-6 * ts, true, [&] {
        CheckResult r;
        for (const Cx eps : {Cx{0.1, 0.0}, Cx{0.5, 0.0}, Cx{1.0, 0.0}, Cx{0.0, 1.0}}) {
            const Trajectory tr =
                integrate_ode(oscillator_rhs(eps), {Cx{1.0, 0.0}, Cx{0.0, 1.0}},
                              0.0, 20.0, StepperConfig{}, linspace(0.0, 20.0, 201));
            double worst = 0.0;
            for (const Cx& z : tr.values())
                worst = std::max(worst, std::abs(std::abs(z) - 1.0));
            if (worst > r.residual) {
                r.residual = worst;
                r.witness = "eps=" + format_complex(eps);
            }
        }
        return r;
    });

    return rep;
}

bool audit_passed(const AuditReport& r) {
    return std::none_of(r.checks.begin(), r.checks.end(), [](const AuditCheck& c) {
        return c.status == CheckStatus::Fail;
    });
}

std::string render_report_json(const AuditReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["version"] = r.version;
    j["config"]["branch"] = to_string(r.config.branch);
    j["config"]["kappa"] = {r.config.kappa.real(), r.config.kappa.imag()};
    j["config"]["tol_scale"] = r.config.tol_scale;
    j["config"]["seed"] = r.config.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const AuditCheck& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["status"] = to_string(c.status);
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["witness"] = c.witness;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string render_report_table(const AuditReport& r) {
    std::string out = "derivation audit v" + r.version +
                      "  branch=" + to_string(r.config.branch) +
                      " kappa=" + format_complex(r.config.kappa) +
                      " tol_scale=" + format_shortest(r.config.tol_scale) +
                      " seed=" + std::to_string(r.config.seed) + "\n";
    char line[512];
    std::snprintf(line, sizeof line, "%-28s %-7s %-12s %-13s %-13s %8s  %s\n",
                  "id", "anchor", "status", "residual", "tolerance", "ms",
                  "witness");
    out += line;
    for (const AuditCheck& c : r.checks) {
        std::snprintf(line, sizeof line,
                      "%-28s %-7s %-12s %-13.6e %-13.6e %8.1f  %s\n",
                      c.id.c_str(), c.anchor.c_str(), to_string(c.status),
                      c.residual, c.tolerance, c.wall_ms, c.witness.c_str());
        out += line;
    }
    out += audit_passed(r) ? "gated checks: all green\n"
                           : "gated checks: FAILURES present\n";
    return out;
}

} // namespace lienard
