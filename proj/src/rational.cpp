#include "sbern/rational.hpp"

#include "sbern/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace sbern {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::ParseError, "not a rational number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer q(std::string(den), 10);
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    result = ratio(Integer(std::string(num), 10), q);
  } else {
    std::string_view mantissa = s, exponent;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      exponent = s.substr(e + 1);
      if (exponent.empty()) bad(text);
    }
    std::string_view int_part = mantissa, frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad(text);
    if (!int_part.empty() && !all_digits(int_part)) bad(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty()) bad(text);
    long exp10 = -static_cast<long>(frac_part.size());
    if (!exponent.empty()) {
      bool eneg = false;
      if (exponent.front() == '+' || exponent.front() == '-') {
        eneg = exponent.front() == '-';
        exponent.remove_prefix(1);
      }
      if (!all_digits(exponent) || exponent.size() > 6) bad(text);
      long e = std::stol(std::string(exponent));
      exp10 += eneg ? -e : e;
    }
    Integer mant(digits, 10);
    if (exp10 >= 0)
      result = Rational(mant * pow10(static_cast<unsigned long>(exp10)));
    else
      result = ratio(mant, pow10(static_cast<unsigned long>(-exp10)));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

std::string to_display(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(r));
  return buf;
}

double sqrt_upper(const Rational& x) {
  if (x <= 0) return 0.0;
  double d = std::sqrt(to_double(x));
  while (Rational(d) * Rational(d) < x) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

Rational truncate_decimal(const Rational& r, int digits) {
  Integer scale = pow10(static_cast<unsigned long>(digits));
  Integer scaled_num = r.get_num() * scale;
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
  Rational out(q, scale);
  out.canonicalize();
  return out;
}

}  // namespace sbern
