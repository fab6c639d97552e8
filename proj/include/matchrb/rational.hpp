#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace matchrb {

/// Exact coefficient type. GMP keeps every value in lowest terms after
/// arithmetic; values built from strings go through parse_rational.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace matchrb
