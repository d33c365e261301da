#include "lienard/roots.hpp"

#include <algorithm>
#include <cmath>

#include "lienard/errors.hpp"

namespace lienard {

namespace {

// Horner evaluation, ascending coefficients.
Cx eval_ascending(const std::vector<Cx>& a, const Cx& x) {
    Cx b = a.back();
    for (std::size_t j = a.size() - 1; j-- > 0;) b = x * b + a[j];
    return b;
}

// One Laguerre root of the ascending-coefficient polynomial a, degree m.
// Converges from almost any start; the frac[] kicks break limit cycles.
Cx laguerre(const std::vector<Cx>& a, Cx x) {
    static const double frac[] = {0.0, 0.5, 0.25, 0.75, 0.13, 0.38, 0.62, 0.88, 1.0};
    const int m = static_cast<int>(a.size()) - 1;
    const int restart = 10;
    for (int iter = 1; iter <= 80; ++iter) {
        Cx b = a[m];
        Cx d{}, f{};
        double err = std::abs(b);
        const double abx = std::abs(x);
        for (int j = m - 1; j >= 0; --j) {
            f = x * f + d;
            d = x * d + b;
            b = x * b + a[j];
            err = std::abs(b) + abx * err;
        }
        err *= 1e-15;
        if (std::abs(b) <= err) return x;
        const Cx g = d / b;
        const Cx g2 = g * g;
        const Cx h = g2 - 2.0 * (f / b);
        const Cx sq = std::sqrt(static_cast<double>(m - 1) *
                                (static_cast<double>(m) * h - g2));
        Cx gp = g + sq;
        const Cx gm = g - sq;
        if (std::abs(gp) < std::abs(gm)) gp = gm;
        const Cx dx = std::max(std::abs(gp), std::abs(gm)) > 0.0
                          ? static_cast<double>(m) / gp
                          : std::polar(1.0 + abx, static_cast<double>(iter));
        const Cx x1 = x - dx;
        if (x == x1) return x;
        if (iter % restart != 0)
            x = x1;
        else
            x -= frac[iter / restart] * dx;
    }
    throw Error("poly_roots: Laguerre iteration failed to converge");
}

std::vector<Cx> quadratic(const Cx& a, const Cx& b, const Cx& c) {
    Cx sq = std::sqrt(b * b - 4.0 * a * c);
    if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
    const Cx q = -0.5 * (b + sq);
    if (std::abs(q) == 0.0) return {Cx{}, -b / a};
    return {q / a, c / q};
}

} // namespace

std::vector<Cx> poly_roots(const std::vector<Cx>& coeffs, double tol) {
    if (coeffs.empty() || std::abs(coeffs[0]) == 0.0)
        throw Error("poly_roots: leading coefficient must be nonzero");
    const std::size_t degree = coeffs.size() - 1;
    if (degree > 4)
        throw DegreeUnsupported("poly_roots: degree > 4 is not supported");

    std::vector<Cx> roots;
    if (degree == 0) {
        return roots;
    } else if (degree == 1) {
        roots = {-coeffs[1] / coeffs[0]};
    } else if (degree == 2) {
        roots = quadratic(coeffs[0], coeffs[1], coeffs[2]);
    } else {
        // Ascending copy for Laguerre; deflate after each root, then polish
        // every root against the undeflated polynomial.
        std::vector<Cx> full(coeffs.rbegin(), coeffs.rend());
        std::vector<Cx> work = full;
        for (std::size_t k = degree; k >= 1; --k) {
            Cx x = laguerre(work, Cx{});
            if (std::abs(x.imag()) <= 2e-13 * std::abs(x.real()))
                x = Cx{x.real(), 0.0};
            roots.push_back(x);
            // Synthetic division by (t - x).
            Cx rem = work[k];
            for (std::size_t j = k; j-- > 0;) {
                const Cx tmp = work[j];
                work[j] = rem;
                rem = x * rem + tmp;
            }
            work.resize(k);
        }
        for (Cx& r : roots) r = laguerre(full, r);
    }

    std::sort(roots.begin(), roots.end(), [](const Cx& u, const Cx& v) {
        if (u.real() != v.real()) return u.real() < v.real();
        return u.imag() < v.imag();
    });
    // Conjugate pairs come back with real parts that differ in the last few
    // ulps, so the strict sort would order them by rounding noise. Cluster
    // nearly equal real parts and order each cluster by imaginary part.
    double remax = 0.0;
    for (const Cx& r : roots) remax = std::max(remax, std::abs(r.real()));
    const double snap = 1e-9 * (1.0 + remax);
    for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i + 1;
        while (j < roots.size() && roots[j].real() - roots[i].real() <= snap) ++j;
        std::sort(roots.begin() + i, roots.begin() + j,
                  [](const Cx& u, const Cx& v) { return u.imag() < v.imag(); });
        i = j;
    }

    double maxc = 0.0;
    for (const Cx& c : coeffs) maxc = std::max(maxc, std::abs(c));
    std::vector<Cx> full(coeffs.rbegin(), coeffs.rend());
    for (const Cx& r : roots)
        if (std::abs(eval_ascending(full, r)) > tol * maxc)
            throw Error("poly_roots: residual check failed on a computed root");
    return roots;
}

} // namespace lienard
