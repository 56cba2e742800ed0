// Exact rational coefficients, backed by GMP. Text forms are always exact
// ("a" or "a/b" with b > 0), never floating point.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace treegb {

using Rational = mpq_class;

// Parses "a" or "a/b" (optional leading sign on a; b > 0).
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Canonical exact form: "a" or "a/b" with positive denominator.
std::string format_rational(const Rational& value);

}  // namespace treegb
