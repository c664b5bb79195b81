#pragma once

#include <string>

#include "clh/rational.hpp"

namespace clh {

/// Renders v as a fixed-point decimal with `digits` fractional digits,
/// rounding ties to even (banker's rounding).
std::string to_decimal_half_even(const Rat& v, unsigned digits);

}  // namespace clh
