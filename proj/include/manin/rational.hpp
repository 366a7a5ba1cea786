#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace manin {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace manin
