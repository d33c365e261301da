#pragma once

#include <string>
#include <vector>

#include "lienard/types.hpp"

namespace lienard {

// Finite sums of coeff * e^{lambda*x} * y^p * y'^q. The basis is closed under
// +, *, d/dx, d/dy, d/dy', which is all the symmetry machinery needs.

inline constexpr int kMaxMonomialDegree = 8;
inline constexpr double kLambdaTol = 1e-12;  // absolute merge tolerance on rates
inline constexpr double kCoeffTol = 1e-12;   // relative drop threshold

struct Term {
    Cx coeff{};
    Cx lambda{};
    int p = 0;
    int q = 0;
};

class ExpPoly {
public:
    ExpPoly() = default;
    explicit ExpPoly(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Largest coefficient magnitude seen while this value was built, carried
    // through every operation. Zero tests compare against it so that residue
    // of a large cancellation is judged relative to what cancelled.
    double scale() const { return scale_; }
    void merge_scale(double s) { if (s > scale_) scale_ = s; }

private:
    void normalize();

    std::vector<Term> terms_;
    double scale_ = 0.0;
};

enum class Var { X, Y, YPrime };

struct ZeroWitness {
    bool zero = true;
    Term witness{};  // largest offending term when !zero
};

ExpPoly ep_constant(Cx c);
ExpPoly ep_term(Cx coeff, Cx lambda, int p, int q);
ExpPoly ep_y();
ExpPoly ep_yprime();
ExpPoly ep_exp_x(Cx lambda);

ExpPoly ep_add(const ExpPoly& a, const ExpPoly& b);
ExpPoly ep_sub(const ExpPoly& a, const ExpPoly& b);
ExpPoly ep_neg(const ExpPoly& a);
ExpPoly ep_mul(const ExpPoly& a, const ExpPoly& b);  // DegreeOverflow past cap
ExpPoly ep_scale(const ExpPoly& a, Cx c);
ExpPoly ep_diff(const ExpPoly& a, Var v);
Cx ep_eval(const ExpPoly& a, double x, Cx y = Cx{}, Cx yp = Cx{});

ZeroWitness ep_is_zero(const ExpPoly& a, double tol = 1e-12);

// Rendering is fully explicit ("(2+0i)·e^{(0+1i)x}·y^1·y'^0", terms joined by
// " + ", "0" when empty) and ep_parse is its strict inverse (ParseError).
std::string ep_render(const ExpPoly& a);
std::string render_term(const Term& t);
ExpPoly ep_parse(const std::string& s);

bool structurally_equal(const ExpPoly& a, const ExpPoly& b);

} // namespace lienard
