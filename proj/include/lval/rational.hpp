#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lval {

/// Exact rational scalar. GMP keeps results canonical (gcd(num,den)=1,
/// den>0) as long as every operand is canonical, so all construction in
/// this library goes through rat() / parse_rational() below.
using Rational = mpq_class;

/// num/den as a canonical rational. den must be nonzero.
Rational rat(long num, long den = 1);

/// Parses "p" or "p/q" with an optional leading '-' and no whitespace.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders canonically as "p" or "p/q" (never "p/1").
std::string to_string(const Rational& q);

/// True when gcd(num,den)=1 and den>0.
bool is_canonical(const Rational& q);

}  // namespace lval
