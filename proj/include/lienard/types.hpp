#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "lienard/errors.hpp"

namespace lienard {

using Cx = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Cx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Principal-branch square root. -0.0 imaginary parts are normalized to +0.0
/// first so that values on the negative real axis land on the +i side of the
/// cut regardless of how the zero was produced.
inline Cx psqrt(Cx z) {
    if (z.imag() == 0.0) z = Cx(z.real(), +0.0);
    return std::sqrt(z);
}

/// Principal-branch power with the same -0.0 normalization as psqrt.
inline Cx ppow(Cx z, double p) {
    if (z.imag() == 0.0) z = Cx(z.real(), +0.0);
    return std::pow(z, p);
}

/// Which symbol of a stacked ∓/± to take: Plus means the top one.
enum class Sign { Plus, Minus };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

/// Upper / lower row of the closed-form coefficient table (Eq 34 rows).
enum class Branch { Upper, Lower };

/// Controls for the adaptive ODE stepper.
struct StepperConfig {
    double rtol = 1e-10;
    double atol = 1e-12;
    double max_step = 0.0;      // 0 means no cap
    std::size_t max_steps = 1000000;
};

/// A scalar function of one real variable together with its first two
/// derivatives. Used for analytically-known gauge inputs.
struct SmoothFn {
    std::function<Cx(double)> value;
    std::function<Cx(double)> d1;
    std::function<Cx(double)> d2;
};

/// Dense solution of a second-order complex ODE: node values of (z, dz) plus
/// a piecewise cubic Hermite interpolant between nodes. Node data is exact
/// stepper output; interpolated values inherit its accuracy.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::vector<double> t, std::vector<Cx> z, std::vector<Cx> dz)
        : t_(std::move(t)), z_(std::move(z)), dz_(std::move(dz)) {
        if (t_.size() < 2 || t_.size() != z_.size() || t_.size() != dz_.size())
            throw Error("Trajectory: need >= 2 nodes with matching z, dz");
        check_increasing();
    }

    /// No stored derivatives: value() degrades to linear interpolation and
    /// derivative-based queries throw MissingDerivatives.
    Trajectory(std::vector<double> t, std::vector<Cx> z)
        : t_(std::move(t)), z_(std::move(z)) {
        if (t_.size() < 2 || t_.size() != z_.size())
            throw Error("Trajectory: need >= 2 nodes with matching z");
        check_increasing();
    }

    bool has_derivatives() const { return !dz_.empty(); }

    double t_begin() const { return t_.front(); }
    double t_end() const { return t_.back(); }
    std::size_t size() const { return t_.size(); }

    const std::vector<double>& times() const { return t_; }
    const std::vector<Cx>& values() const { return z_; }
    const std::vector<Cx>& derivatives() const { return dz_; }

    /// Position at time t (cubic Hermite between nodes; linear when no
    /// derivatives are stored).
    Cx value(double t) const {
        const auto [i, s, h] = locate(t);
        if (!has_derivatives())
            return (1.0 - s) * z_[i] + s * z_[i + 1];
        const double s2 = s * s, s3 = s2 * s;
        const double h00 = 2 * s3 - 3 * s2 + 1;
        const double h10 = s3 - 2 * s2 + s;
        const double h01 = -2 * s3 + 3 * s2;
        const double h11 = s3 - s2;
        return h00 * z_[i] + h10 * h * dz_[i] + h01 * z_[i + 1] + h11 * h * dz_[i + 1];
    }

    /// Velocity at time t (derivative of the Hermite cubic).
    Cx derivative(double t) const {
        require_derivatives();
        const auto [i, s, h] = locate(t);
        const double s2 = s * s;
        const double g00 = (6 * s2 - 6 * s) / h;
        const double g10 = 3 * s2 - 4 * s + 1;
        const double g01 = (-6 * s2 + 6 * s) / h;
        const double g11 = 3 * s2 - 2 * s;
        return g00 * z_[i] + g10 * dz_[i] + g01 * z_[i + 1] + g11 * dz_[i + 1];
    }

    /// Acceleration of the interpolant at time t. Piecewise linear in s, so
    /// only as accurate as the node spacing allows; good enough for gauges
    /// built from dense output.
    Cx second_derivative(double t) const {
        require_derivatives();
        const auto [i, s, h] = locate(t);
        const double k00 = (12 * s - 6) / (h * h);
        const double k10 = (6 * s - 4) / h;
        const double k01 = (-12 * s + 6) / (h * h);
        const double k11 = (6 * s - 2) / h;
        return k00 * z_[i] + k10 * dz_[i] + k01 * z_[i + 1] + k11 * dz_[i + 1];
    }

private:
    struct Segment {
        std::size_t i;
        double s;
        double h;
    };

    void check_increasing() const {
        for (std::size_t i = 1; i < t_.size(); ++i)
            if (!(t_[i] > t_[i - 1]))
                throw Error("Trajectory: times must be strictly increasing");
    }

    void require_derivatives() const {
        if (!has_derivatives())
            throw MissingDerivatives("Trajectory: no stored derivatives");
    }

    Segment locate(double t) const {
        if (t_.empty()) throw Error("Trajectory: empty");
        const double lo = t_.front(), hi = t_.back();
        const double slack = 1e-9 * (1.0 + std::abs(hi - lo));
        if (t < lo - slack || t > hi + slack)
            throw Error("Trajectory: t outside stored range");
        if (t <= lo) return {0, 0.0, t_[1] - t_[0]};
        if (t >= hi) {
            const std::size_t i = t_.size() - 2;
            return {i, 1.0, t_[i + 1] - t_[i]};
        }
        // binary search for the segment with t_[i] <= t < t_[i+1]
        std::size_t lo_i = 0, hi_i = t_.size() - 1;
        while (hi_i - lo_i > 1) {
            const std::size_t mid = (lo_i + hi_i) / 2;
            if (t_[mid] <= t) lo_i = mid; else hi_i = mid;
        }
        const double h = t_[lo_i + 1] - t_[lo_i];
        return {lo_i, (t - t_[lo_i]) / h, h};
    }

    std::vector<double> t_;
    std::vector<Cx> z_;
    std::vector<Cx> dz_;
};

} // namespace lienard
