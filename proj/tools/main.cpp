#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lienard/audit.hpp"
#include "lienard/equations.hpp"
#include "lienard/errors.hpp"
#include "lienard/exact.hpp"
#include "lienard/factorization.hpp"
#include "lienard/integrate.hpp"
#include "lienard/io.hpp"
#include "lienard/symmetry.hpp"

namespace {

using namespace lienard;

Cx parse_complex_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected RE,IM, got '" + s + "'");
    double re = 0.0, im = 0.0;
    const char* b1 = s.data();
    const char* e1 = s.data() + comma;
    const char* b2 = s.data() + comma + 1;
    const char* e2 = s.data() + s.size();
    if (std::from_chars(b1, e1, re).ptr != e1 ||
        std::from_chars(b2, e2, im).ptr != e2)
        throw CLI::ValidationError("expected RE,IM, got '" + s + "'");
    return {re, im};
}

Branch parse_branch(const std::string& s) {
    if (s == "upper") return Branch::Upper;
    if (s == "lower") return Branch::Lower;
    throw CLI::ValidationError("branch must be upper or lower, got '" + s + "'");
}

Sign parse_sign(const std::string& s) {
    if (s == "+") return Sign::Plus;
    if (s == "-") return Sign::Minus;
    throw CLI::ValidationError("sign must be + or -, got '" + s + "'");
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open output file: " + path);
    return os;
}

// Merge config-file keys into the token stream as "--key value" (or bare
// "--key" for boolean true), skipping keys already present: flags win.
void apply_config_file(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") path = args[i + 1];
    if (path.empty()) return;
    std::ifstream is(path);
    if (!is) throw Error("cannot open config file: " + path);
    nlohmann::json j;
    is >> j;
    if (!j.is_object()) throw Error("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        const std::string flag = "--" + key;
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_string()) {
            args.push_back(flag);
            args.push_back(value.get<std::string>());
        } else {
            args.push_back(flag);
            args.push_back(value.dump());
        }
    }
}

ExactSolutionBranch branch_record(const std::string& branch_str, int root_index) {
    const Branch branch = parse_branch(branch_str);
    const std::vector<Cx> roots = solve_c(branch);
    if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
        throw Error("root index out of range (0..2)");
    return make_branch(roots[root_index], branch);
}

int cmd_roots(const std::string& branch_str, bool as_json, bool quiet) {
    const Branch branch = parse_branch(branch_str);
    const std::vector<Cx> roots = solve_c(branch);
    const double rhs = branch == Branch::Upper ? -5.0 : 5.0;
    double worst = 0.0;
    std::vector<double> residuals;
    for (const Cx& c : roots) {
        residuals.push_back(std::abs(c * (c * c - 1.0) - rhs));
        worst = std::max(worst, residuals.back());
    }
    if (quiet) return 0;
    if (as_json) {
        nlohmann::ordered_json j;
        j["branch"] = branch_str;
        j["roots"] = nlohmann::ordered_json::array();
        for (const Cx& c : roots) j["roots"].push_back({c.real(), c.imag()});
        j["cubic_residuals"] = residuals;
        j["cubic_residual_max"] = worst;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < roots.size(); ++k)
            std::cout << "c[" << k << "] = " << format_complex(roots[k])
                      << "  |cubic residual| = " << format_shortest(residuals[k])
                      << "\n";
    }
    return 0;
}

int cmd_exact(const std::string& branch_str, int root_index, bool quiet) {
    const ExactSolutionBranch b = branch_record(branch_str, root_index);
    if (quiet) return 0;
    std::cout << "branch: " << to_string(b.branch) << "\n"
              << "c: " << format_complex(b.c) << "\n"
              << "theta: " << format_complex(b.theta)
              << (b.theta_real ? " (real)" : "") << "\n"
              << "eps: " << format_complex(b.eps) << "\n"
              << "F1: " << format_complex(b.coeffs.F1(0.0)) << "\n"
              << "G: " << format_complex(b.coeffs.G(0.0)) << "\n"
              << "F2: " << ep_render(b.coeffs.F2.sym()) << "\n"
              << "F2 rate: "
              << format_complex(b.coeffs.F2.sym().terms().front().lambda)
              << "\n";
    return 0;
}

int cmd_integrate(Cx eps, Cx z0, Cx v0, double t1, int n,
                  const std::string& out, bool quiet) {
    if (n < 2) throw Error("integrate: need --n >= 2");
    const Trajectory tr = integrate_ode(oscillator_rhs(eps), {z0, v0}, 0.0, t1,
                                        StepperConfig{}, linspace(0.0, t1, n));
    std::ofstream os = open_out(out);
    os << "t,z_re,z_im,dz_re,dz_im\n";
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const Cx z = tr.values()[i];
        const Cx dz = tr.derivatives()[i];
        os << format_g17(tr.times()[i]) << ',' << format_g17(z.real()) << ','
           << format_g17(z.imag()) << ',' << format_g17(dz.real()) << ','
           << format_g17(dz.imag()) << "\n";
    }
    if (!quiet)
        std::cout << "wrote " << out << " (" << tr.size() << " rows)\n";
    return 0;
}

int cmd_skeleton(const std::string& branch_str, double ymin, double ymax,
                 double pmin, double pmax, int n, double t,
                 const std::string& out, bool quiet) {
    const ExactSolutionBranch b = branch_record(branch_str, 0);
    const std::vector<SkeletonNode> nodes =
        skeleton_grid(b.coeffs, {ymin, ymax}, {pmin, pmax}, n, t);
    std::ofstream os = open_out(out);
    os << "Y,P,Q_re,Q_im\n";
    for (const SkeletonNode& node : nodes)
        os << format_g17(node.Y) << ',' << format_g17(node.P) << ','
           << format_g17(node.Q.real()) << ',' << format_g17(node.Q.imag())
           << "\n";
    if (!quiet)
        std::cout << "wrote " << out << " (" << nodes.size() << " rows)\n";
    return 0;
}

int cmd_bernoulli(const std::string& branch_str, const std::string& sign_str,
                  double t0, double t1, int n, const std::string& out,
                  bool quiet) {
    if (n < 2) throw Error("bernoulli: need --n >= 2");
    const ExactSolutionBranch b = branch_record(branch_str, 0);
    const Sign sign = parse_sign(sign_str);
    const BernoulliSolution sol = bernoulli_solution(b.coeffs, sign, t0);
    std::ofstream os = open_out(out);
    os << "t,Y_re,Y_im,residual\n";
    std::size_t rows = 0, skipped = 0;
    for (double t : linspace(t0, t1, n)) {
        try {
            const Cx Y = sol.Y(t);
            double res = std::abs(
                bernoulli_eq19_pointwise(b.coeffs, sign, sol.Y, t, +1));
            res = std::min(res, std::abs(bernoulli_eq19_pointwise(
                                    b.coeffs, sign, sol.Y, t, -1)));
            os << format_shortest(t) << ',' << format_shortest(Y.real()) << ','
               << format_shortest(Y.imag()) << ',' << format_shortest(res)
               << "\n";
            ++rows;
        } catch (const NearPole&) {
            ++skipped;  // sample sits on the double pole; row omitted
        }
    }
    if (!quiet)
        std::cout << "wrote " << out << " (" << rows << " rows, " << skipped
                  << " near-pole samples skipped)\n";
    return 0;
}

nlohmann::ordered_json group_json(const ExpPoly& p, double x_max) {
    const ZeroWitness w = ep_is_zero(p, 1e-9);
    double max_numeric = 0.0;
    const Cx i{0.0, 1.0};
    for (int k = 0; k < 32; ++k) {
        const double x = x_max * k / 31.0;
        for (const Cx& y : {Cx{1, 0}, Cx{-1, 0}, i, -i})
            for (const Cx& yp : {Cx{}, Cx{1, 0}, Cx{-1, 0}})
                max_numeric = std::max(max_numeric, std::abs(ep_eval(p, x, y, yp)));
    }
    nlohmann::ordered_json j;
    j["zero"] = w.zero;
    j["witness"] = w.zero ? "" : render_term(w.witness);
    j["max_numeric"] = max_numeric;
    return j;
}

int cmd_symmetry(const std::string& branch_str, bool general_ansatz,
                 bool quiet) {
    const ExactSolutionBranch b = branch_record(branch_str, 0);
    const Cx F1 = b.coeffs.F1(0.0);
    const Cx G = b.coeffs.G(0.0);
    const auto [ap, am] = char_roots(F1, G);
    auto [X1, X2] = make_generators(F1, ap, am);
    if (general_ansatz) {
        X1.xi = ep_add(X1.xi, ep_y());
        X2.xi = ep_add(X2.xi, ep_y());
    }

    double rate = 0.0;
    for (const Term& t : b.coeffs.F2.sym().terms())
        rate = std::max(rate, std::abs(t.lambda));
    const double x_max = rate > 0.0 ? 2.0 * std::numbers::pi / rate : 1.0;

    nlohmann::ordered_json j;
    j["branch"] = branch_str;
    j["general_ansatz"] = general_ansatz;
    const std::pair<const char*, const VectorField2D*> gens[] = {{"X1", &X1},
                                                                 {"X2", &X2}};
    for (const auto& [name, v] : gens) {
        const DeterminingSystem sys = extract_determining_system(*v, b.coeffs);
        nlohmann::ordered_json jg;
        for (const char* label : kGroupLabels)
            jg[label] = group_json(sys.groups.at(label), x_max);
        nlohmann::ordered_json jv;
        jv["xi"] = ep_render(v->xi);
        jv["eta"] = ep_render(v->eta);
        jv["groups"] = std::move(jg);
        jv["extra"] = group_json(sys.extra, x_max);
        j["generators"][name] = std::move(jv);
    }
    const VectorField2D k = commutator(X1, X2);
    j["commutator"]["xi"] = ep_render(k.xi);
    j["commutator"]["eta"] = ep_render(k.eta);
    j["commutator"]["zero"] =
        ep_is_zero(k.xi, 1e-12).zero && ep_is_zero(k.eta, 1e-12).zero;
    if (!quiet) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_audit(const std::string& branch_str, const std::string& kappa_str,
              double tol_scale, const std::string& format,
              const std::string& out, unsigned seed, bool quiet) {
    if (format != "json" && format != "table")
        throw Error("audit: --format must be json or table");
    AuditConfig cfg;
    cfg.branch = parse_branch(branch_str);
    cfg.kappa = parse_complex_pair(kappa_str);
    cfg.tol_scale = tol_scale;
    cfg.seed = seed;
    const AuditReport rep = run_full_audit(cfg);
    const std::string text =
        format == "json" ? render_report_json(rep) : render_report_table(rep);
    if (!out.empty())
        open_out(out) << text;
    else if (!quiet)
        std::cout << text;
    return audit_passed(rep) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        apply_config_file(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"numerical audit of a factorization and point-symmetry "
                 "derivation for a complex self-excited oscillator"};
    app.fallthrough();
    std::string config_path;
    unsigned seed = 0;
    bool quiet = false;
    app.add_option("--config", config_path, "JSON config; keys mirror flags, flags win");
    app.add_option("--seed", seed, "seed echoed into reports");
    app.add_flag("--quiet", quiet, "suppress stdout");
    app.require_subcommand(0, 1);

    auto* roots = app.add_subcommand("roots", "cubic roots for a branch");
    std::string roots_branch = "upper";
    bool roots_json = false;
    roots->add_option("--branch", roots_branch, "upper|lower");
    roots->add_flag("--json", roots_json, "emit JSON");

    auto* exact = app.add_subcommand("exact", "closed-form branch record");
    std::string exact_branch = "upper";
    int exact_root = 0;
    exact->add_option("--branch", exact_branch, "upper|lower");
    exact->add_option("--root-index", exact_root, "0 = real root");

    auto* integrate = app.add_subcommand("integrate", "oscillator orbit CSV");
    std::string i_eps = "0.5,0", i_z0 = "1,0", i_v0 = "0,1", i_out;
    double i_t1 = 20.0;
    int i_n = 201;
    integrate->add_option("--eps", i_eps, "RE,IM");
    integrate->add_option("--z0", i_z0, "RE,IM");
    integrate->add_option("--v0", i_v0, "RE,IM");
    integrate->add_option("--t1", i_t1, "end time");
    integrate->add_option("--n", i_n, "output samples");
    integrate->add_option("--out", i_out, "CSV path")->required();

    auto* skeleton = app.add_subcommand("skeleton", "deformed-equation surface CSV");
    std::string s_branch = "upper", s_out;
    double s_ymin = -2.0, s_ymax = 2.0, s_pmin = -2.0, s_pmax = 2.0, s_t = 0.0;
    int s_n = 41;
    skeleton->add_option("--branch", s_branch, "upper|lower");
    skeleton->add_option("--ymin", s_ymin, "Y range low");
    skeleton->add_option("--ymax", s_ymax, "Y range high");
    skeleton->add_option("--pmin", s_pmin, "P range low");
    skeleton->add_option("--pmax", s_pmax, "P range high");
    skeleton->add_option("--n", s_n, "nodes per axis");
    skeleton->add_option("--t", s_t, "evaluation time");
    skeleton->add_option("--out", s_out, "CSV path")->required();

    auto* bernoulli = app.add_subcommand("bernoulli", "closed-form Y samples CSV");
    std::string b_branch = "upper", b_sign = "+", b_out;
    double b_t0 = 0.0, b_t1 = 3.0;
    int b_n = 25;
    bernoulli->add_option("--branch", b_branch, "upper|lower");
    bernoulli->add_option("--sign", b_sign, "+|-");
    bernoulli->add_option("--t0", b_t0, "quadrature anchor");
    bernoulli->add_option("--t1", b_t1, "end time");
    bernoulli->add_option("--n", b_n, "samples");
    bernoulli->add_option("--out", b_out, "CSV path")->required();

    auto* symmetry = app.add_subcommand("symmetry", "determining-system JSON");
    std::string sym_branch = "upper";
    bool sym_general = false;
    symmetry->add_option("--branch", sym_branch, "upper|lower");
    symmetry->add_flag("--general-ansatz", sym_general,
                       "inject a y-term into xi");

    auto* audit = app.add_subcommand("audit", "full derivation audit");
    std::string a_branch = "upper", a_kappa = "0,-1", a_format = "table", a_out;
    double a_tol = 1.0;
    audit->add_option("--branch", a_branch, "upper|lower");
    audit->add_option("--kappa", a_kappa, "Eq-29 prefactor RE,IM");
    audit->add_option("--tol", a_tol, "tolerance scale");
    audit->add_option("--format", a_format, "json|table");
    audit->add_option("--out", a_out, "write report here instead of stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*roots) return cmd_roots(roots_branch, roots_json, quiet);
        if (*exact) return cmd_exact(exact_branch, exact_root, quiet);
        if (*integrate)
            return cmd_integrate(parse_complex_pair(i_eps),
                                 parse_complex_pair(i_z0),
                                 parse_complex_pair(i_v0), i_t1, i_n, i_out,
                                 quiet);
        if (*skeleton)
            return cmd_skeleton(s_branch, s_ymin, s_ymax, s_pmin, s_pmax, s_n,
                                s_t, s_out, quiet);
        if (*bernoulli)
            return cmd_bernoulli(b_branch, b_sign, b_t0, b_t1, b_n, b_out, quiet);
        if (*symmetry) return cmd_symmetry(sym_branch, sym_general, quiet);
        if (*audit)
            return cmd_audit(a_branch, a_kappa, a_tol, a_format, a_out, seed,
                             quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << app.help();
    return 0;
}
