#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rledtw {

// All costs in the pipeline are exact rationals. Approximation guarantees
// are stated as exact inequalities, so no floating point is used anywhere
// in a value computation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses a decimal string such as "0.25", "1", or "3/4" into an exact
// rational. Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& text);

// Renders a rational as an integer string when the denominator is 1,
// otherwise as "p/q".
std::string rational_to_string(const Rational& value);

inline Rational rational_of(long long v) { return Rational(static_cast<long>(v)); }

// floor(num / den) for den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

}  // namespace rledtw
