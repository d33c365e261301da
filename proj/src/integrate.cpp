#include "lienard/integrate.hpp"

#include <algorithm>
#include <cmath>

#include "lienard/errors.hpp"

namespace lienard {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
// Dense-output weights (Hairer-Norsett-Wanner continuous extension).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

using Vec = std::vector<Cx>;

void check_finite(const Vec& v) {
    for (const Cx& x : v)
        if (!is_finite(x)) throw NonFiniteState("integrate_ode: non-finite state");
}

double error_norm(const Vec& err, const Vec& y_old, const Vec& y_new,
                  double atol, double rtol) {
    double acc = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double sc = atol + rtol * std::max(std::abs(y_old[i]), std::abs(y_new[i]));
        const double r = std::abs(err[i]) / sc;
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

double initial_step(const OdeRhs& rhs, double t0, const Vec& y0, const Vec& f0,
                    double posneg, double hmax, double atol, double rtol) {
    const std::size_t n = y0.size();
    double dnf = 0.0, dny = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sc = atol + rtol * std::abs(y0[i]);
        dnf += std::norm(f0[i] / sc);
        dny += std::norm(y0[i] / sc);
    }
    double h0 = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;
    if (hmax > 0.0) h0 = std::min(h0, hmax);
    h0 *= posneg;

    Vec y1(n);
    for (std::size_t i = 0; i < n; ++i) y1[i] = y0[i] + h0 * f0[i];
    const Vec f1 = rhs(t0 + h0, y1);
    double der2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sc = atol + rtol * std::abs(y0[i]);
        der2 += std::norm((f1[i] - f0[i]) / sc);
    }
    der2 = std::sqrt(der2) / std::abs(h0);
    const double der12 = std::max(der2, std::sqrt(dnf));
    const double h1 = (der12 <= 1e-15)
                          ? std::max(1e-6, std::abs(h0) * 1e-3)
                          : std::pow(0.01 / der12, 0.2);
    double h = std::min(100.0 * std::abs(h0), h1);
    if (hmax > 0.0) h = std::min(h, hmax);
    return h * posneg;
}

} // namespace

Trajectory integrate_ode(const OdeRhs& rhs, const std::vector<Cx>& y0,
                         double t0, double t1, const StepperConfig& cfg,
                         const std::vector<double>& t_out) {
    if (y0.empty()) throw Error("integrate_ode: empty state");
    if (cfg.rtol <= 0.0 || cfg.atol <= 0.0 || cfg.max_steps == 0)
        throw Error("integrate_ode: invalid StepperConfig");
    if (t_out.size() < 2) throw Error("integrate_ode: need >= 2 output times");
    if (t0 == t1) throw Error("integrate_ode: degenerate span");
    const double posneg = t1 > t0 ? 1.0 : -1.0;
    const double span_slack = 1e-12 * (1.0 + std::abs(t1 - t0));
    for (std::size_t i = 0; i < t_out.size(); ++i) {
        if (i > 0 && !((t_out[i] - t_out[i - 1]) * posneg > 0.0))
            throw Error("integrate_ode: t_out must be strictly monotone toward t1");
        if ((t_out[i] - t0) * posneg < -span_slack ||
            (t_out[i] - t1) * posneg > span_slack)
            throw Error("integrate_ode: t_out outside t_span");
    }
    check_finite(y0);

    const std::size_t n = y0.size();
    Vec y = y0;
    Vec k1 = rhs(t0, y);
    if (k1.size() != n) throw Error("integrate_ode: rhs dimension mismatch");
    check_finite(k1);

    std::vector<double> out_t;
    std::vector<Cx> out_z, out_dz;
    out_t.reserve(t_out.size());
    out_z.reserve(t_out.size());
    out_dz.reserve(t_out.size());
    auto emit = [&](double t, const Vec& state, const Vec& deriv) {
        out_t.push_back(t);
        out_z.push_back(state[0]);
        out_dz.push_back(n >= 2 ? state[1] : deriv[0]);
    };

    std::size_t next_out = 0;
    if (t_out[0] == t0) {
        emit(t0, y, k1);
        next_out = 1;
    }

    double t = t0;
    double h = initial_step(rhs, t0, y, k1, posneg, cfg.max_step, cfg.atol, cfg.rtol);
    bool rejected = false;

    Vec k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), y_new(n), y_stage(n), err(n);
    Vec rc1(n), rc2(n), rc3(n), rc4(n), rc5(n);

    for (std::size_t steps = 0;; ++steps) {
        if (steps >= cfg.max_steps)
            throw StepLimitExceeded("integrate_ode: max_steps reached");
        if ((t + h - t1) * posneg > 0.0) h = t1 - t;

        for (std::size_t i = 0; i < n; ++i) y_stage[i] = y[i] + h * a21 * k1[i];
        k2 = rhs(t + c2 * h, y_stage);
        for (std::size_t i = 0; i < n; ++i)
            y_stage[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = rhs(t + c3 * h, y_stage);
        for (std::size_t i = 0; i < n; ++i)
            y_stage[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = rhs(t + c4 * h, y_stage);
        for (std::size_t i = 0; i < n; ++i)
            y_stage[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = rhs(t + c5 * h, y_stage);
        for (std::size_t i = 0; i < n; ++i)
            y_stage[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                     a64 * k4[i] + a65 * k5[i]);
        k6 = rhs(t + h, y_stage);
        for (std::size_t i = 0; i < n; ++i)
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                   b5 * k5[i] + b6 * k6[i]);
        k7 = rhs(t + h, y_new);
        check_finite(y_new);
        check_finite(k7);

        for (std::size_t i = 0; i < n; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                          e6 * k6[i] + e7 * k7[i]);
        const double errn = error_norm(err, y, y_new, cfg.atol, cfg.rtol);

        double fac = 0.9 * std::pow(std::max(errn, 1e-300), -0.2);
        fac = std::min(5.0, std::max(0.2, fac));
        if (rejected) fac = std::min(fac, 1.0);

        if (errn > 1.0) {
            rejected = true;
            h *= fac;
            continue;
        }

        const double t_new = t + h;
        // Continuous extension over [t, t_new], evaluated at pending t_out.
        for (std::size_t i = 0; i < n; ++i) {
            const Cx ydiff = y_new[i] - y[i];
            const Cx bspl = h * k1[i] - ydiff;
            rc1[i] = y[i];
            rc2[i] = ydiff;
            rc3[i] = bspl;
            rc4[i] = ydiff - h * k7[i] - bspl;
            rc5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                          d6 * k6[i] + d7 * k7[i]);
        }
        const bool last = t_new == t1;
        while (next_out < t_out.size() &&
               (t_out[next_out] - t_new) * posneg <= (last ? span_slack : 0.0)) {
            const double s = (t_out[next_out] - t) / h;
            const double s1 = 1.0 - s;
            Vec cont(n), contd(n);
            for (std::size_t i = 0; i < n; ++i)
                cont[i] = rc1[i] + s * (rc2[i] + s1 * (rc3[i] + s * (rc4[i] + s1 * rc5[i])));
            if (n < 2) contd = rhs(t_out[next_out], cont);
            emit(t_out[next_out], cont, contd);
            ++next_out;
        }

        if (last) break;
        t = t_new;
        y = y_new;
        k1 = k7;
        rejected = false;
        h *= fac;
        if (cfg.max_step > 0.0 && std::abs(h) > cfg.max_step)
            h = posneg * cfg.max_step;
    }

    if (next_out != t_out.size())
        throw Error("integrate_ode: internal output bookkeeping failure");
    if (posneg < 0.0) {
        std::reverse(out_t.begin(), out_t.end());
        std::reverse(out_z.begin(), out_z.end());
        std::reverse(out_dz.begin(), out_dz.end());
    }
    return Trajectory(std::move(out_t), std::move(out_z), std::move(out_dz));
}

OdeRhs oscillator_rhs(Cx eps) {
    return [eps](double, const std::vector<Cx>& y) -> std::vector<Cx> {
        const Cx z = y[0], dz = y[1];
        return {dz, eps * (1.0 - std::norm(z)) * dz - z};
    };
}

} // namespace lienard
