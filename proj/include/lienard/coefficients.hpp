#pragma once

#include <functional>

#include "lienard/exppoly.hpp"
#include "lienard/types.hpp"

namespace lienard {

// A coefficient of the deformed equation: either a closed-form sum of
// exponentials in the independent variable (p = q = 0 terms only) or an
// opaque sampled callable. Symbolic ones keep exact structure for the
// symmetry machinery; both evaluate pointwise.
class Coefficient {
public:
    Coefficient() : Coefficient(Cx{}) {}
    Coefficient(Cx constant) : Coefficient(ep_constant(constant)) {}
    Coefficient(ExpPoly sym);
    Coefficient(std::function<Cx(double)> fn) : fn_(std::move(fn)) {
        if (!fn_) throw Error("Coefficient: empty callable");
    }

    Cx operator()(double t) const {
        return symbolic_ ? ep_eval(sym_, t) : fn_(t);
    }
    bool symbolic() const { return symbolic_; }
    const ExpPoly& sym() const {
        if (!symbolic_) throw Error("Coefficient: not symbolic");
        return sym_;
    }

private:
    bool symbolic_ = false;
    ExpPoly sym_;
    std::function<Cx(double)> fn_;
};

struct CoefficientSet {
    Coefficient F1;
    Coefficient F2;
    Coefficient G;
};

// Gauge triple (alpha, beta_tilde, theta), each with two derivatives
// available. alpha * theta' must stay away from zero wherever the transform
// is evaluated.
struct GaugeFunctions {
    SmoothFn alpha;
    SmoothFn beta_tilde;
    SmoothFn theta;
};

// alpha = 1, beta_tilde = 0, theta = t.
GaugeFunctions identity_gauge();

} // namespace lienard
