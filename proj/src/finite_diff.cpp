#include "lienard/finite_diff.hpp"

#include <cmath>

#include "lienard/errors.hpp"

namespace lienard {

Cx fd_derivative(const std::function<Cx(double)>& f, double t, int order, double h) {
    if (h <= 0.0) h = 1e-4 * std::max(1.0, std::abs(t));
    const Cx fp2 = f(t + 2.0 * h);
    const Cx fp1 = f(t + h);
    const Cx fm1 = f(t - h);
    const Cx fm2 = f(t - 2.0 * h);
    if (order == 1)
        return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    if (order == 2) {
        const Cx f0 = f(t);
        return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    }
    throw Error("fd_derivative: order must be 1 or 2");
}

} // namespace lienard
