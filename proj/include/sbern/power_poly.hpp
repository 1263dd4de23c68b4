#pragma once

#include "sbern/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace sbern {

using Point = std::vector<Rational>;

/// Sparse n-variate polynomial sum_b a_b x^b in the power basis, exact
/// coefficients. Zero coefficients are never stored; the degree is the largest
/// total order among stored terms (0 for the zero polynomial).
class PowerPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit PowerPoly(int dimension);
  PowerPoly(int dimension, const Terms& terms);

  static PowerPoly constant(int dimension, const Rational& c);

  int dimension() const { return dimension_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of x^b (0 when absent).
  Rational coeff(const Exponents& b) const;

  /// Adds c to the coefficient of x^b.
  void add_term(const Exponents& b, const Rational& c);

  /// Throws DimensionMismatch when x has the wrong length.
  Rational eval(std::span<const Rational> x) const;

  PowerPoly operator-() const;

  friend bool operator==(const PowerPoly&, const PowerPoly&) = default;

 private:
  void recompute_degree();

  int dimension_;
  int degree_ = 0;
  Terms terms_;
};

}  // namespace sbern
