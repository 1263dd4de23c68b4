#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sbern {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-7", "1.3", "2.5e-3" exactly. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral).
std::string to_string(const Rational& r);

/// Nearest double, for display only.
double to_double(const Rational& r);

/// Six significant digits, used alongside the exact form in reports.
std::string to_display(const Rational& r);

/// Smallest double d >= sqrt(x); x >= 0.
double sqrt_upper(const Rational& x);

/// p / q in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational ratio(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Truncation toward zero at `digits` decimals, as a rational.
Rational truncate_decimal(const Rational& r, int digits);

}  // namespace sbern
