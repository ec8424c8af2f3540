#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace arakelov {

/// Output-boundary real type, ~50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Working type of the numerical oracles; the extra digits absorb the
/// cancellation in the Glaisher limit.
using WideReal = boost::multiprecision::cpp_bin_float_100;

/// Largest precision (decimal places) numeric_value honours.
inline constexpr int kMaxOutputPrecision = 40;

/// Fixed-point rendering with `decimals` digits after the point
/// ("-0.1654211", "0.5000000"). Negative zero prints as "0.000...".
std::string format_decimal(const Real& x, int decimals);

/// Rounds to `decimals` places after the point, half away from zero.
Real round_to_decimals(const Real& x, int decimals);

}  // namespace arakelov
