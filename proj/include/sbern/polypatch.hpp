#pragma once

// Bernstein coefficients of polynomials over simplices: conversion from the
// power form, degree elevation, range enclosure, second differences and
// de Casteljau splitting along an edge.

#include "sbern/geometry.hpp"
#include "sbern/indexing.hpp"
#include "sbern/parallel.hpp"
#include "sbern/power_poly.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace sbern {

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool subset_of(const Interval& other) const { return other.lo <= lo && hi <= other.hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Max of endpoint distances between two intervals.
Rational interval_distance(const Interval& a, const Interval& b);

class BernsteinPatch {
 public:
  /// coeffs must be aligned with enumerate_indices(degree, n); throws DegreeMismatch otherwise.
  BernsteinPatch(Simplex simplex, int degree, std::vector<Rational> coeffs);

  const Simplex& simplex() const { return simplex_; }
  int degree() const { return degree_; }
  int dimension() const { return simplex_.dimension(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const IndexSet& indices() const { return *indices_; }

  const Rational& operator[](std::size_t pos) const { return coeffs_[pos]; }
  const Rational& at(const MultiIndex& alpha) const { return coeffs_[indices_->rank(alpha)]; }
  /// b_{k e_i}, equal to p(v_i).
  const Rational& vertex_coeff(int i) const { return coeffs_[indices_->vertex_position(i)]; }

  BernsteinPatch operator-() const;

  friend bool operator==(const BernsteinPatch& a, const BernsteinPatch& b) {
    return a.degree_ == b.degree_ && a.simplex_ == b.simplex_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Simplex simplex_;
  int degree_;
  std::shared_ptr<const IndexSet> indices_;
  std::vector<Rational> coeffs_;
};

/// Coefficients over the standard simplex from the power form,
/// b_(a_hat, a_0) = sum_{b_hat <= a_hat} C(a_hat, b_hat) / C(k, b_hat) * a_b_hat.
/// Throws DegreeTooLow if k < deg p.
BernsteinPatch to_bernstein_standard(const PowerPoly& p, int k, Exec exec = Exec::parallel);

/// Coefficients over an arbitrary simplex (affine pull-back, then the standard conversion).
BernsteinPatch to_bernstein(const PowerPoly& p, int k, const Simplex& simplex,
                            Exec exec = Exec::parallel);

/// Power form of the patch in the standard-simplex parameter t of its simplex,
/// i.e. the inverse of to_bernstein_standard.
PowerPoly to_power_standard(const BernsteinPatch& b);

/// b_beta(k+1) = 1/(k+1) sum_i beta_i b_{beta - e_i}(k).
BernsteinPatch elevate(const BernsteinPatch& b, Exec exec = Exec::parallel);

/// Number of elevate() calls made by this process (instrumentation).
unsigned long long elevate_call_count();

/// Exact degree reduction to `degree`; throws DegreeTooLow when the
/// represented polynomial has a larger degree.
BernsteinPatch reduce_degree(const BernsteinPatch& b, int degree);

/// [min b_alpha, max b_alpha]; contains p(|V|).
Interval enclosure(const BernsteinPatch& b);

struct SecondDifference {
  MultiIndex gamma;
  int i;
  int j;
  Rational value;
};

struct SecondDifferences {
  std::vector<SecondDifference> entries;
  Rational sup_norm;
};

/// All second differences for |gamma| = k - 2, 0 <= i < j <= n, with e_{-1} := e_n.
/// Throws DegreeTooLow if k < 2.
SecondDifferences second_differences(const BernsteinPatch& b);

/// Sup norm of the second differences, 0 for degree < 2.
Rational second_difference_norm(const BernsteinPatch& b);

/// T / (k - 1) with T = n(n+2) l(l-1)/24 ||grad^2 p||, the grid-point
/// deviation bound for the degree-k patch b of a polynomial of degree l.
/// The second differences are those of the degree-l form of the same
/// polynomial. Throws DegreeTooLow if k <= l.
Rational discretization_bound(const BernsteinPatch& b, int l);

/// Coefficients over the two halves from bisect_edge(simplex, i, j), by
/// de Casteljau at parameter 1/2 along every (i, j) coefficient line.
std::pair<BernsteinPatch, BernsteinPatch> split_patch(const BernsteinPatch& b, int i, int j);

/// split_round applied to the patch; children align with split_round(simplex).
std::vector<BernsteinPatch> split_round_patch(const BernsteinPatch& b);

}  // namespace sbern
