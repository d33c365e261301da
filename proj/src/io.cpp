#include "lienard/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace lienard {

std::string format_shortest(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(Cx z) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string s = format_shortest(z.real());
    s += std::signbit(im) ? '-' : '+';
    s += format_shortest(std::abs(im));
    s += 'i';
    return s;
}

} // namespace lienard
