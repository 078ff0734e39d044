#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lagcut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Parse an exact rational literal.
 *
 * Accepts `p/q` (e.g. `-1/2`), plain integers, and finite decimals
 * (`-0.25`, `.5`). Decimals are converted exactly, so `-0.1` is -1/10.
 * Throws Error(Parse) on anything else, including a zero denominator.
 */
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Rendering of a multiple of pi: "p/q·π", "n·π", or "0".
std::string pi_multiple(const Rational& coefficient);

}  // namespace lagcut
