#pragma once

#include <string>

#include "lienard/types.hpp"

namespace lienard {

// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double x);

// Fixed 17 significant digits (%.17g), for the CSV emitters that pin it.
std::string format_g17(double x);

// "RE+IMi" with both parts shortest round-trip, matching the ExpPoly
// rendering convention.
std::string format_complex(Cx z);

} // namespace lienard
