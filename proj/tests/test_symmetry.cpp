#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lienard/exact.hpp"
#include "lienard/exppoly.hpp"
#include "lienard/symmetry.hpp"

#include "gen.hpp"

using namespace lienard;

namespace {

CoefficientSet constants(Cx F1, Cx F2, Cx G) {
    CoefficientSet c;
    c.F1 = F1;
    c.F2 = F2;
    c.G = G;
    return c;
}

// the monomial each determining group multiplies in the full residual
ExpPoly group_monomial(const std::string& label) {
    if (label == "y'3") return ep_term(Cx{1.0}, {}, 0, 3);
    if (label == "y'2") return ep_term(Cx{1.0}, {}, 0, 2);
    if (label == "y'") return ep_yprime();
    if (label == "y2") return ep_term(Cx{1.0}, {}, 2, 0);
    if (label == "y") return ep_y();
    if (label == "y0") return ep_constant(Cx{1.0});
    return ep_term(Cx{1.0}, {}, 1, 1);  // yy'
}

VectorField2D random_field(Gen& g) {
    return {g.exppoly(2, 1, 0), g.exppoly(2, 1, 0)};
}

} // namespace

TEST_CASE("the equation right side as an expression") {
    const ExpPoly f = rhs_exppoly(constants(Cx{2.0}, Cx{3.0}, Cx{5.0}));
    REQUIRE(f.terms().size() == 3);
    CHECK(std::abs(ep_eval(f, 0.0, Cx{1.0}, Cx{1.0}) - Cx{-10.0}) < 1e-14);
}

TEST_CASE("symmetry condition vanishes on textbook symmetries") {
    // translations of the free particle
    CHECK(lin_symmetry_residual({ep_constant(Cx{1.0}), {}}, ExpPoly{}).empty());
    CHECK(lin_symmetry_residual({{}, ep_constant(Cx{1.0})}, ExpPoly{}).empty());

    // solution-generated symmetry e^{ix} d/dy of y'' = -y
    const ExpPoly f = rhs_exppoly(constants({}, {}, Cx{1.0}));
    const ExpPoly r = lin_symmetry_residual({{}, ep_exp_x(Cx{0.0, 1.0})}, f);
    CHECK(ep_is_zero(r).zero);
}

TEST_CASE("determining groups on hand-checked fields") {
    // xi = y against G = 1: the yy' group is 3G xi_y = 3
    const DeterminingSystem s1 =
        extract_determining_system({ep_y(), {}}, constants({}, {}, Cx{1.0}));
    CHECK(structurally_equal(s1.groups.at("yy'"), ep_constant(Cx{3.0})));

    // time translation of a constant-coefficient equation: everything vanishes
    const DeterminingSystem s2 = extract_determining_system(
        {ep_constant(Cx{1.0}), {}}, constants(Cx{0.4}, Cx{-0.7, 0.2}, Cx{1.1}));
    for (const char* label : kGroupLabels) CHECK(s2.groups.at(label).empty());
    CHECK(s2.extra.empty());

    // xi = A + B e^{F1 x} zeroes the y' group identically
    const Cx F1{0.3, -1.2};
    const DeterminingSystem s3 = extract_determining_system(
        {solve_xi(F1, Cx{2.0, 1.0}, Cx{-0.5}), {}}, constants(F1, Cx{1.0}, Cx{1.0}));
    CHECK(s3.groups.at("y'").empty());
}

TEST_CASE("groups plus extra reassemble the full residual") {
    Gen g(1212);
    for (int k = 0; k < 100; ++k) {
        const VectorField2D v = random_field(g);
        const CoefficientSet c =
            constants(g.complex_box(2.0), g.complex_box(2.0), g.complex_box(2.0));
        const DeterminingSystem sys = extract_determining_system(v, c);
        ExpPoly sum = sys.extra;
        for (const char* label : kGroupLabels)
            sum = ep_add(sum, ep_mul(sys.groups.at(label), group_monomial(label)));
        const ExpPoly full = lin_symmetry_residual(v, rhs_exppoly(c));
        CHECK(ep_is_zero(ep_sub(sum, full)).zero);
    }
}

TEST_CASE("solve_xi zeroes the y' group for random data") {
    Gen g(1313);
    for (int k = 0; k < 50; ++k) {
        const Cx F1 = g.complex_box(2.0);
        const VectorField2D v{solve_xi(F1, g.complex_box(2.0), g.complex_box(2.0)), {}};
        const DeterminingSystem sys = extract_determining_system(
            v, constants(F1, g.complex_box(2.0), g.complex_box(2.0)));
        CHECK(ep_is_zero(sys.groups.at("y'")).zero);
    }
}

TEST_CASE("characteristic roots") {
    const auto [ip, im] = char_roots({}, Cx{-1.0});
    CHECK(std::abs(ip - Cx{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(im - Cx{0.0, -1.0}) < 1e-15);

    // frozen oracle for the published coefficient values
    const Cx F1{0.0, 2.6258285774614389462};
    const Cx G{-0.63019885859074534709, 0.0};
    const auto [ap, am] = char_roots(F1, G);
    CHECK(std::abs(ap - Cx{0.0, 2.8471707171493969372}) < 1e-12);
    CHECK(std::abs(am - Cx{0.0, -0.22134213968795799095}) < 1e-12);
}

TEST_CASE("characteristic roots satisfy Vieta for random inputs") {
    Gen g(1414);
    for (int k = 0; k < 100; ++k) {
        const Cx F1 = g.complex_box(3.0), G = g.complex_box(3.0);
        const auto [ap, am] = char_roots(F1, G);
        CHECK(std::abs(ap + am - F1) < 1e-12);
        CHECK(std::abs(ap * am + G) < 1e-12);
    }
}

TEST_CASE("exponentials built on the roots solve the y0 equation") {
    Gen g(1515);
    for (int k = 0; k < 30; ++k) {
        const Cx F1 = g.complex_box(2.0), G = g.complex_box(2.0);
        const auto [ap, am] = char_roots(F1, G);
        const ExpPoly S = ep_add(ep_scale(ep_exp_x(-ap), g.complex_box(2.0)),
                                 ep_scale(ep_exp_x(-am), g.complex_box(2.0)));
        const DeterminingSystem sys =
            extract_determining_system({{}, S}, constants(F1, g.complex_box(2.0), G));
        CHECK(ep_is_zero(sys.groups.at("y0")).zero);
    }
}

TEST_CASE("published root formulas measured against the oracle") {
    const ExactSolutionBranch b = make_branch(solve_c(Branch::Upper)[0], Branch::Upper);
    const ClaimedAlphaCheck chk = claimed_alpha_check(b);

    CHECK(chk.sum_rule_residual < 1e-15);
    CHECK(chk.deviation_minus == doctest::Approx(0.30382357580432979829).epsilon(1e-9));
    CHECK(chk.deviation_plus == doctest::Approx(0.30382357580432979829).epsilon(1e-9));
    CHECK(chk.eq55_deviation == doctest::Approx(0.76712821420933873203).epsilon(1e-9));
    CHECK(std::abs(chk.claimed_minus - Cx{0.0, 1.0} * b.theta) < 1e-15);
    CHECK(std::abs(chk.theta_eq58 - b.theta) < 1e-12);
}

TEST_CASE("generator construction") {
    const auto [t1, t2] = make_generators({}, {}, {});
    CHECK(structurally_equal(t1.xi, ep_constant(Cx{1.0})));
    CHECK(structurally_equal(t1.eta, ep_constant(Cx{1.0})));
    CHECK(structurally_equal(t2.xi, t1.xi));

    const Cx F1{0.0, 2.6258285774614389462};
    const auto [ap, am] = char_roots(F1, Cx{-0.63019885859074534709});
    const auto [X1, X2] = make_generators(F1, ap, am);
    CHECK(structurally_equal(X1.xi, ep_constant(Cx{1.0})));
    CHECK(structurally_equal(X1.eta, ep_exp_x(-ap)));
    CHECK(structurally_equal(X2.xi, ep_exp_x(F1)));
    CHECK(structurally_equal(X2.eta, ep_exp_x(-am)));
}

TEST_CASE("bracket identities") {
    const VectorField2D dx{ep_constant(Cx{1.0}), {}};
    const VectorField2D dy{{}, ep_constant(Cx{1.0})};
    const VectorField2D flat = commutator(dx, dy);
    CHECK(flat.xi.empty());
    CHECK(flat.eta.empty());

    const Cx lam{0.0, 0.7};
    const VectorField2D shift{ep_exp_x(lam), {}};
    const VectorField2D r = commutator(dx, shift);
    CHECK(structurally_equal(r.xi, ep_scale(ep_exp_x(lam), lam)));
    CHECK(r.eta.empty());
}

TEST_CASE("bracket antisymmetry and Jacobi on random fields") {
    Gen g(1616);
    for (int k = 0; k < 30; ++k) {
        const VectorField2D a = random_field(g), b = random_field(g);
        const VectorField2D ab = commutator(a, b), ba = commutator(b, a);
        CHECK(ep_is_zero(ep_add(ab.xi, ba.xi)).zero);
        CHECK(ep_is_zero(ep_add(ab.eta, ba.eta)).zero);
    }
    for (int k = 0; k < 20; ++k) {
        // keep components y-free so nested brackets stay well inside the cap
        const VectorField2D a{ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5)),
                              ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5))};
        const VectorField2D b{ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5)),
                              ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5))};
        const VectorField2D c{ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5)),
                              ep_scale(ep_exp_x(g.rate()), g.complex_box(1.5))};
        const VectorField2D j1 = commutator(a, commutator(b, c));
        const VectorField2D j2 = commutator(b, commutator(c, a));
        const VectorField2D j3 = commutator(c, commutator(a, b));
        CHECK(ep_is_zero(ep_add(ep_add(j1.xi, j2.xi), j3.xi), 1e-12).zero);
        CHECK(ep_is_zero(ep_add(ep_add(j1.eta, j2.eta), j3.eta), 1e-12).zero);
    }
}

TEST_CASE("the published generators do not close") {
    const ExactSolutionBranch b = make_branch(solve_c(Branch::Upper)[0], Branch::Upper);
    const Cx F1 = b.coeffs.F1(0.0);
    const auto [ap, am] = char_roots(F1, b.coeffs.G(0.0));
    const auto [X1, X2] = make_generators(F1, ap, am);
    const VectorField2D k = commutator(X1, X2);

    REQUIRE(k.xi.terms().size() == 1);
    CHECK(std::abs(k.xi.terms()[0].coeff - F1) < 1e-14);
    CHECK(std::abs(k.xi.terms()[0].lambda - F1) < 1e-14);
    CHECK(std::abs(std::abs(F1) - 2.6258286) < 1e-6);
    CHECK(!ep_is_zero(k.xi).zero);
}

TEST_CASE("numeric invariance audit") {
    const InvarianceAudit free = invariance_audit({ep_constant(Cx{1.0}), {}},
                                                  CoefficientSet{});
    CHECK(free.pass);
    CHECK(free.max_abs == 0.0);

    const InvarianceAudit harmonic = invariance_audit(
        {{}, ep_exp_x(Cx{0.0, 1.0})}, constants({}, {}, Cx{1.0}));
    CHECK(harmonic.pass);

    const ExactSolutionBranch b = make_branch(solve_c(Branch::Upper)[0], Branch::Upper);
    const auto [ap, am] = char_roots(b.coeffs.F1(0.0), b.coeffs.G(0.0));
    const auto [X1, X2] = make_generators(b.coeffs.F1(0.0), ap, am);
    const InvarianceAudit broken = invariance_audit(X1, b.coeffs);
    CHECK(!broken.pass);
    CHECK(!broken.witness.empty());
    CHECK(broken.max_abs > 0.1);
}

TEST_CASE("a y-term in xi is incompatible with nonzero G") {
    const CoefficientSet c = constants(Cx{0.5}, Cx{1.0}, Cx{2.0});

    const DeterminingSystem linear = extract_determining_system(
        {ep_add(ep_constant(Cx{1.0}), ep_y()), {}}, c);
    CHECK(!ep_is_zero(linear.groups.at("yy'")).zero);  // 3G xi_y = 6

    const DeterminingSystem quadratic = extract_determining_system(
        {ep_term(Cx{1.0}, {}, 2, 0), {}}, c);
    CHECK(!ep_is_zero(quadratic.groups.at("y'3")).zero);  // xi_yy = 2
}
