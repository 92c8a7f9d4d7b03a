#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fpbm {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" with q > 0. Decimal or exponent forms are rejected.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace fpbm
