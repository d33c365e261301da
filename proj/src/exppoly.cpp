#include "lienard/exppoly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "lienard/errors.hpp"

namespace lienard {

namespace {

Cx ipow(Cx base, int n) {
    Cx r{1.0, 0.0};
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

bool term_before(const Term& u, const Term& v) {
    if (u.p != v.p) return u.p < v.p;
    if (u.q != v.q) return u.q < v.q;
    if (u.lambda.real() != v.lambda.real()) return u.lambda.real() < v.lambda.real();
    return u.lambda.imag() < v.lambda.imag();
}

} // namespace

ExpPoly::ExpPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
    normalize();
}

void ExpPoly::normalize() {
    for (const Term& t : terms_) {
        if (!is_finite(t.coeff) || !is_finite(t.lambda))
            throw Error("ExpPoly: non-finite term");
        if (t.p < 0 || t.q < 0)
            throw Error("ExpPoly: negative monomial degree");
        if (t.p > kMaxMonomialDegree || t.q > kMaxMonomialDegree)
            throw DegreeOverflow("ExpPoly: monomial degree beyond cap");
    }
    std::sort(terms_.begin(), terms_.end(), term_before);

    // Merge runs with equal (p, q) and rates within kLambdaTol of the run's
    // representative; the sort put mergeable rates adjacent.
    std::vector<Term> merged;
    for (const Term& t : terms_) {
        if (!merged.empty()) {
            Term& last = merged.back();
            if (last.p == t.p && last.q == t.q &&
                std::abs(t.lambda - last.lambda) <= kLambdaTol) {
                last.coeff += t.coeff;
                continue;
            }
        }
        merged.push_back(t);
    }

    double maxc = 0.0;
    for (const Term& t : merged) maxc = std::max(maxc, std::abs(t.coeff));
    terms_.clear();
    for (const Term& t : merged)
        if (std::abs(t.coeff) > kCoeffTol * maxc && std::abs(t.coeff) != 0.0)
            terms_.push_back(t);
    merge_scale(maxc);
}

ExpPoly ep_constant(Cx c) { return ExpPoly({Term{c, Cx{}, 0, 0}}); }
ExpPoly ep_term(Cx coeff, Cx lambda, int p, int q) {
    return ExpPoly({Term{coeff, lambda, p, q}});
}
ExpPoly ep_y() { return ep_term(Cx{1.0, 0.0}, Cx{}, 1, 0); }
ExpPoly ep_yprime() { return ep_term(Cx{1.0, 0.0}, Cx{}, 0, 1); }
ExpPoly ep_exp_x(Cx lambda) { return ep_term(Cx{1.0, 0.0}, lambda, 0, 0); }

ExpPoly ep_add(const ExpPoly& a, const ExpPoly& b) {
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    ExpPoly r(std::move(terms));
    r.merge_scale(a.scale());
    r.merge_scale(b.scale());
    return r;
}

ExpPoly ep_neg(const ExpPoly& a) {
    std::vector<Term> terms = a.terms();
    for (Term& t : terms) t.coeff = -t.coeff;
    ExpPoly r(std::move(terms));
    r.merge_scale(a.scale());
    return r;
}

ExpPoly ep_sub(const ExpPoly& a, const ExpPoly& b) { return ep_add(a, ep_neg(b)); }

ExpPoly ep_mul(const ExpPoly& a, const ExpPoly& b) {
    std::vector<Term> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const Term& u : a.terms())
        for (const Term& v : b.terms())
            terms.push_back(Term{u.coeff * v.coeff, u.lambda + v.lambda,
                                 u.p + v.p, u.q + v.q});
    ExpPoly r(std::move(terms));
    r.merge_scale(a.scale());
    r.merge_scale(b.scale());
    return r;
}

ExpPoly ep_scale(const ExpPoly& a, Cx c) {
    std::vector<Term> terms = a.terms();
    for (Term& t : terms) t.coeff *= c;
    ExpPoly r(std::move(terms));
    r.merge_scale(a.scale());
    return r;
}

ExpPoly ep_diff(const ExpPoly& a, Var v) {
    std::vector<Term> terms;
    for (Term t : a.terms()) {
        switch (v) {
        case Var::X:
            t.coeff *= t.lambda;
            break;
        case Var::Y:
            if (t.p == 0) continue;
            t.coeff *= static_cast<double>(t.p);
            t.p -= 1;
            break;
        case Var::YPrime:
            if (t.q == 0) continue;
            t.coeff *= static_cast<double>(t.q);
            t.q -= 1;
            break;
        }
        terms.push_back(t);
    }
    ExpPoly r(std::move(terms));
    r.merge_scale(a.scale());
    return r;
}

Cx ep_eval(const ExpPoly& a, double x, Cx y, Cx yp) {
    Cx acc{};
    for (const Term& t : a.terms())
        acc += t.coeff * std::exp(t.lambda * x) * ipow(y, t.p) * ipow(yp, t.q);
    return acc;
}

ZeroWitness ep_is_zero(const ExpPoly& a, double tol) {
    const double thresh = tol * (1.0 + a.scale());
    ZeroWitness w;
    double worst = 0.0;
    for (const Term& t : a.terms()) {
        const double m = std::abs(t.coeff);
        if (m > thresh && m > worst) {
            worst = m;
            w.zero = false;
            w.witness = t;
        }
    }
    return w;
}

namespace {

std::string fmt_double(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string fmt_cx(const Cx& z) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string s = fmt_double(z.real());
    s += std::signbit(im) ? '-' : '+';
    s += fmt_double(std::abs(im));
    s += 'i';
    return s;
}

// Parsing helpers: strict, position-driven.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void expect(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) != 0)
            throw ParseError("ep_parse: expected '" + lit + "' at offset " +
                             std::to_string(pos));
        pos += lit.size();
    }
    bool try_consume(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) != 0) return false;
        pos += lit.size();
        return true;
    }
    double number() {
        double v = 0.0;
        const char* begin = s.data() + pos;
        const char* end = s.data() + s.size();
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc{})
            throw ParseError("ep_parse: bad number at offset " + std::to_string(pos));
        pos += static_cast<std::size_t>(res.ptr - begin);
        return v;
    }
    int integer() {
        int v = 0;
        const char* begin = s.data() + pos;
        const char* end = s.data() + s.size();
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc{})
            throw ParseError("ep_parse: bad integer at offset " + std::to_string(pos));
        pos += static_cast<std::size_t>(res.ptr - begin);
        return v;
    }
    Cx complex_number() {
        const double re = number();
        double sign;
        if (try_consume("+")) sign = 1.0;
        else if (try_consume("-")) sign = -1.0;
        else throw ParseError("ep_parse: expected sign of imaginary part at offset " +
                              std::to_string(pos));
        const double im = number();
        expect("i");
        return Cx{re, sign * im};
    }
};

const std::string kDot = "·";

} // namespace

std::string render_term(const Term& t) {
    std::string s;
    s += '(';
    s += fmt_cx(t.coeff);
    s += ")" + kDot + "e^{(";
    s += fmt_cx(t.lambda);
    s += ")x}" + kDot + "y^";
    s += std::to_string(t.p);
    s += kDot + "y'^";
    s += std::to_string(t.q);
    return s;
}

std::string ep_render(const ExpPoly& a) {
    if (a.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        if (i) s += " + ";
        s += render_term(a.terms()[i]);
    }
    return s;
}

ExpPoly ep_parse(const std::string& s) {
    if (s == "0") return ExpPoly{};
    Cursor c{s};
    std::vector<Term> terms;
    for (;;) {
        Term t;
        c.expect("(");
        t.coeff = c.complex_number();
        c.expect(")" + kDot + "e^{(");
        t.lambda = c.complex_number();
        c.expect(")x}" + kDot + "y^");
        t.p = c.integer();
        c.expect(kDot + "y'^");
        t.q = c.integer();
        terms.push_back(t);
        if (c.pos == s.size()) break;
        c.expect(" + ");
    }
    return ExpPoly(std::move(terms));
}

bool structurally_equal(const ExpPoly& a, const ExpPoly& b) {
    if (a.terms().size() != b.terms().size()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const Term& u = a.terms()[i];
        const Term& v = b.terms()[i];
        if (u.coeff != v.coeff || u.lambda != v.lambda || u.p != v.p || u.q != v.q)
            return false;
    }
    return true;
}

} // namespace lienard
