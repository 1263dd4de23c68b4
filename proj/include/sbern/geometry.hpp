#pragma once

// Simplices in exact rational coordinates and the longest-edge bisection
// scheme used for subdivision.

#include "sbern/indexing.hpp"
#include "sbern/power_poly.hpp"

#include <utility>
#include <vector>

namespace sbern {

class Simplex {
 public:
  /// Throws DimensionMismatch unless there are n + 1 points of length n (n >= 1),
  /// DegenerateSimplex unless the edge vectors v_i - v_0 are independent.
  explicit Simplex(std::vector<Point> vertices);

  /// [e_0, e_1, ..., e_n] with e_0 the origin.
  static Simplex standard(int n);
  /// The 1-simplex [a], [b]; requires a < b.
  static Simplex interval(const Rational& a, const Rational& b);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  /// Signed n! * volume: det[v_1 - v_0, ..., v_n - v_0].
  Rational signed_volume_factor() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  /// Lexicographic on vertex coordinates; the deterministic tie-break.
  friend bool operator<(const Simplex& a, const Simplex& b) { return a.vertices_ < b.vertices_; }

 private:
  std::vector<Point> vertices_;
};

/// lambda_0, ..., lambda_n with sum lambda_i = 1 and sum lambda_i v_i = x.
std::vector<Rational> barycentric(const Simplex& simplex, std::span<const Rational> x);

/// sum_i lambda_i v_i.
Point from_barycentric(const Simplex& simplex, std::span<const Rational> lambda);

/// (alpha_0 v_0 + ... + alpha_n v_n) / k. Throws DegreeMismatch if |alpha| != k or k < 1.
Point grid_point(const MultiIndex& alpha, int k, const Simplex& simplex);

/// Largest squared vertex distance.
Rational diameter_sq(const Simplex& simplex);
/// Upper bound on the diameter, rounded outward.
double diameter_upper(const Simplex& simplex);

/// p composed with t -> v_0 + sum_i t_i (v_i - v_0), a polynomial on the standard simplex.
PowerPoly affine_pullback(const Simplex& simplex, const PowerPoly& p);

/// Bisects edge (i, j) at its midpoint m. Returns (V with v_j -> m, V with v_i -> m):
/// the first child keeps v_i, the second keeps v_j. Throws BadEdge unless 0 <= i < j <= n.
std::pair<Simplex, Simplex> bisect_edge(const Simplex& simplex, int i, int j);

/// The longest edge, ties broken by the lexicographically lowest (i, j).
std::pair<int, int> longest_edge(const Simplex& simplex);

/// One round: n(n+1)/2 levels of longest-edge bisection applied breadth-first to
/// every piece, giving 2^(n(n+1)/2) children in a fixed order.
std::vector<Simplex> split_round(const Simplex& simplex);

/// Subdivision bookkeeping shared by the certification and minimization loops.
///
/// Depth is a mesh level: a leaf at depth s has squared diameter at most
/// reference_sq * shrink^(2s), where reference_sq is the squared diameter of
/// the standard simplex of the same dimension. Each step refines an unfinished
/// leaf by at least one round and then by further rounds until the level is met.
struct SubdivisionPlan {
  int dimension = 1;
  /// Nominal per-round shrink factor of longest-edge bisection.
  Rational shrink_factor{1, 2};

  int round_length() const { return dimension * (dimension + 1) / 2; }
  Rational reference_sq() const;
  Rational target_sq(int depth) const;
};

}  // namespace sbern
