// Acceptance gate: one line per criterion, exit code = number of failures.
// argv[1] is the path to the audit CLI binary.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lienard/exact.hpp"
#include "lienard/exppoly.hpp"
#include "lienard/factorization.hpp"
#include "lienard/integrate.hpp"
#include "lienard/symmetry.hpp"
#include "lienard/types.hpp"

#include "gen.hpp"

using namespace lienard;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", criterion, ok ? "pass" : "FAIL",
                detail.c_str());
    if (!ok) ++g_failures;
}

struct RunResult {
    int exit_code = -1;
    double seconds = 0.0;
};

RunResult run(const std::string& cmd) {
    const auto start = std::chrono::steady_clock::now();
    const int raw = std::system(cmd.c_str());
    const auto stop = std::chrono::steady_clock::now();
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.seconds = std::chrono::duration<double>(stop - start).count();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_1(const std::string& cli) {
    const RunResult lower = run(cli + " roots --branch lower --json > acc_roots_l.json");
    const RunResult upper = run(cli + " roots --branch upper --json > acc_roots_u.json");
    bool ok = lower.exit_code == 0 && upper.exit_code == 0;
    std::ostringstream detail;
    if (ok) {
        const json jl = json::parse(slurp("acc_roots_l.json"));
        const json ju = json::parse(slurp("acc_roots_u.json"));
        const double real_lower = jl["roots"][0][0].get<double>();
        const double imag_lower = jl["roots"][0][1].get<double>();
        const double real_upper = ju["roots"][0][0].get<double>();
        const double res = jl["cubic_residual_max"].get<double>();
        ok = std::abs(real_lower - 1.9041609) < 1e-6 && std::abs(imag_lower) < 1e-12 &&
             std::abs(real_upper + 1.9041609) < 1e-6 && res < 1e-12 &&
             lower.seconds < 0.1 && upper.seconds < 0.1;
        detail << "real root " << real_lower << ", negated on the other branch, "
               << "cubic residual " << res << ", " << lower.seconds << " s";
    } else {
        detail << "CLI exit codes " << lower.exit_code << "/" << upper.exit_code;
    }
    report(1, ok, detail.str());
}

void criterion_2() {
    double worst = 0.0;
    for (Branch br : {Branch::Upper, Branch::Lower})
        for (const Cx& c : solve_c(br))
            worst = std::max(worst, theta_c_identity(make_branch(c, br)));
    std::ostringstream detail;
    detail << "max |theta*c - 1| over six pairs = " << worst;
    report(2, worst < 1e-12, detail.str());
}

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    Gen g(31);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        CoefficientSet c;
        c.F2 = Coefficient(g.complex_box(3.0));
        const Cx G = g.complex_box(3.0);
        c.G = Coefficient(G);
        const Sign s = k % 2 == 0 ? Sign::Plus : Sign::Minus;
        c.F1 = Coefficient(sign_value(s) * (5.0 / std::sqrt(6.0)) * psqrt(G));
        const FactorizationReport r = verify_factorization(make_factor_pair(c, s), c);
        worst = std::max({worst, r.product_residual, r.sqrtY_cancel_residual,
                          r.F1_residual});
    }
    const double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << "worst identity residual " << worst << " over 100 sets, " << secs << " s";
    report(3, worst < 1e-14 && secs < 1.0, detail.str());
}

void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> window = linspace(0.5, 3.0, 11);

    CoefficientSet exact;
    exact.F2 = Coefficient(Cx{6.0});
    const BernoulliSolution ref = bernoulli_solution(exact, Sign::Plus, 0.0);
    double exact_err = bernoulli_eq19_residual(exact, Sign::Plus, ref.Y, window);
    for (double t : window)
        exact_err = std::max(exact_err, std::abs(ref.Y(t) + 1.0 / (t * t)));

    Gen g(41);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        CoefficientSet c;
        c.F2 = Coefficient(Cx{g.uniform(1.0, 10.0)});
        c.G = Coefficient(Cx{g.uniform(0.0, 1.0)});
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const BernoulliSolution sol = bernoulli_solution(c, s, 0.0);
            worst = std::max(worst, bernoulli_eq19_residual(c, s, sol.Y, window));
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << "worst residual " << worst << " over 20 random pairs, exact case "
           << exact_err << ", " << secs << " s";
    report(4, worst < 1e-7 && exact_err < 1e-10 && secs < 5.0, detail.str());
}

void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const Cx eps : {Cx{0.1}, Cx{0.5}, Cx{1.0}, Cx{0.0, 1.0}}) {
        const Trajectory tr = integrate_ode(oscillator_rhs(eps), {Cx{1.0}, Cx{0.0, 1.0}},
                                            0.0, 20.0, {}, linspace(0.0, 20.0, 101));
        for (const Cx& z : tr.values())
            worst = std::max(worst, std::abs(std::abs(z) - 1.0));
    }
    const double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << "max | |z| - 1 | = " << worst << " across four eps, " << secs << " s";
    report(5, worst < 1e-6 && secs < 2.0, detail.str());
}

void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    Gen g(61);
    bool ok = true;

    const char* labels[] = {"y'3", "y'2", "y'", "y2", "y", "y0", "yy'"};
    auto monomial = [](const std::string& label) {
        if (label == "y'3") return ep_term(Cx{1.0}, {}, 0, 3);
        if (label == "y'2") return ep_term(Cx{1.0}, {}, 0, 2);
        if (label == "y'") return ep_yprime();
        if (label == "y2") return ep_term(Cx{1.0}, {}, 2, 0);
        if (label == "y") return ep_y();
        if (label == "y0") return ep_constant(Cx{1.0});
        return ep_term(Cx{1.0}, {}, 1, 1);
    };
    for (int k = 0; k < 100 && ok; ++k) {
        const VectorField2D v{g.exppoly(2, 1, 0), g.exppoly(2, 1, 0)};
        CoefficientSet c;
        c.F1 = Coefficient(g.exppoly(1, 0, 0));
        c.F2 = Coefficient(g.exppoly(1, 0, 0));
        c.G = Coefficient(g.exppoly(1, 0, 0));
        const DeterminingSystem sys = extract_determining_system(v, c);
        ExpPoly sum = sys.extra;
        for (const char* label : labels)
            sum = ep_add(sum, ep_mul(sys.groups.at(label), monomial(label)));
        ok = ep_is_zero(ep_sub(sum, lin_symmetry_residual(v, rhs_exppoly(c)))).zero;
    }

    double vieta = 0.0;
    for (int k = 0; k < 100; ++k) {
        const Cx F1 = g.complex_box(3.0), G = g.complex_box(3.0);
        const auto [ap, am] = char_roots(F1, G);
        vieta = std::max({vieta, std::abs(ap + am - F1), std::abs(ap * am + G)});
    }
    ok = ok && vieta < 1e-12;

    for (int k = 0; k < 20 && ok; ++k) {
        const Cx F1 = g.complex_box(2.0);
        CoefficientSet c;
        c.F1 = Coefficient(F1);
        c.F2 = Coefficient(g.complex_box(2.0));
        c.G = Coefficient(g.complex_box(2.0));
        const DeterminingSystem sys = extract_determining_system(
            {solve_xi(F1, g.complex_box(2.0), g.complex_box(2.0)), {}}, c);
        ok = ep_is_zero(sys.groups.at("y'")).zero;
    }

    for (int k = 0; k < 20 && ok; ++k) {
        const VectorField2D a{g.exppoly(2, 1, 0), g.exppoly(2, 1, 0)};
        const VectorField2D b{g.exppoly(2, 1, 0), g.exppoly(2, 1, 0)};
        const VectorField2D ab = commutator(a, b), ba = commutator(b, a);
        ok = ep_is_zero(ep_add(ab.xi, ba.xi), 1e-12).zero &&
             ep_is_zero(ep_add(ab.eta, ba.eta), 1e-12).zero;
    }
    for (int k = 0; k < 10 && ok; ++k) {
        auto field = [&g] {
            return VectorField2D{ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5)),
                                 ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5))};
        };
        const VectorField2D a = field(), b = field(), c = field();
        const VectorField2D j1 = commutator(a, commutator(b, c));
        const VectorField2D j2 = commutator(b, commutator(c, a));
        const VectorField2D j3 = commutator(c, commutator(a, b));
        ok = ep_is_zero(ep_add(ep_add(j1.xi, j2.xi), j3.xi), 1e-12).zero &&
             ep_is_zero(ep_add(ep_add(j1.eta, j2.eta), j3.eta), 1e-12).zero;
    }

    const double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << "grouping/Vieta (" << vieta << ")/solve_xi/bracket sweeps, " << secs
           << " s";
    report(6, ok && secs < 5.0, detail.str());
}

void criterion_7() {
    const ExactSolutionBranch b = make_branch(solve_c(Branch::Upper)[0], Branch::Upper);
    const Eq29Audit eq29 = audit_eq29(b, -b.eps, {0.0});
    const ClaimedAlphaCheck alpha = claimed_alpha_check(b);
    const double mismatch =
        std::abs(consistent_G(b.c, b.theta, b.eps) - b.coeffs.G(0.0));
    const bool ok = std::abs(eq29.residual[0] - 5.000000) <= 1e-6 &&
                    std::abs(alpha.deviation_minus - 0.3038232) <= 1e-6 &&
                    std::abs(mismatch - 0.4730) <= 1e-3;
    std::ostringstream detail;
    detail << "eq29(0) = " << eq29.residual[0] << ", alpha- deviation "
           << alpha.deviation_minus << ", G mismatch " << mismatch;
    report(7, ok, detail.str());
}

void criterion_8() {
    const ExactSolutionBranch b = make_branch(solve_c(Branch::Upper)[0], Branch::Upper);
    const Cx F1 = b.coeffs.F1(0.0);
    const auto [ap, am] = char_roots(F1, b.coeffs.G(0.0));
    const auto [X1, X2] = make_generators(F1, ap, am);
    const VectorField2D k = commutator(X1, X2);
    bool ok = k.xi.terms().size() == 1 && !ep_is_zero(k.xi).zero;
    std::ostringstream detail;
    if (ok) {
        const Term& t = k.xi.terms()[0];
        ok = std::abs(std::abs(t.coeff) - 2.6258286) < 1e-6 &&
             std::abs(t.lambda - F1) < 1e-12;
        detail << "d/dx component " << render_term(t);
    } else {
        detail << "d/dx component " << ep_render(k.xi);
    }
    report(8, ok, detail.str());
}

void criterion_9(const std::string& cli) {
    const RunResult r1 = run(cli + " audit --format json --out acc_audit_1.json");
    const RunResult r2 = run(cli + " audit --format json --out acc_audit_2.json");
    const std::string a = slurp("acc_audit_1.json");
    const std::string b = slurp("acc_audit_2.json");
    const bool ok = r1.exit_code == 0 && r2.exit_code == 0 && !a.empty() && a == b &&
                    r1.seconds < 30.0 && r2.seconds < 30.0;
    std::ostringstream detail;
    detail << "exit codes " << r1.exit_code << "/" << r2.exit_code << ", "
           << (a == b ? "byte-identical JSON" : "JSON DIFFERS") << ", " << r1.seconds
           << " s";
    report(9, ok, detail.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 64;
    }
    const std::string cli = argv[1];

    criterion_1(cli);
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(cli);

    if (g_failures == 0)
        std::printf("all 9 criteria hold\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures;
}
