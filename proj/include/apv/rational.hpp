#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apv {

// Every score, weight and margin in the library is an exact rational.
using Rational = mpq_class;

/// Renders `r` as an integer when its denominator is 1, otherwise as `p/q`.
std::string to_string(const Rational& r);

/// Parses `123`, `-4`, `3/8` or `0.125` into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace apv
