#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace curvecfg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form (reduced, positive denominator).
/// Throws CurveError(invalid_argument) when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

bool is_integer(const Rational& q);

/// "p/q", or "p" when the value is integral.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace curvecfg
