#pragma once

// Rational Bernstein form f = p / q: coefficient ratios, their enclosure,
// sharpness and the convergence constants zeta, omega and omega'.

#include "sbern/polypatch.hpp"

#include <optional>
#include <vector>

namespace sbern {

class RationalPatch {
 public:
  const BernsteinPatch& num() const { return num_; }
  const BernsteinPatch& den() const { return den_; }
  const std::vector<Rational>& ratios() const { return ratios_; }
  const Simplex& simplex() const { return num_.simplex(); }
  int degree() const { return num_.degree(); }
  int dimension() const { return num_.dimension(); }
  const IndexSet& indices() const { return num_.indices(); }
  const Rational& vertex_ratio(int i) const {
    return ratios_[num_.indices().vertex_position(i)];
  }

  friend bool operator==(const RationalPatch&, const RationalPatch&) = default;

 private:
  friend RationalPatch make_rational(BernsteinPatch num, BernsteinPatch den);
  RationalPatch(BernsteinPatch num, BernsteinPatch den, std::vector<Rational> ratios)
      : num_(std::move(num)), den_(std::move(den)), ratios_(std::move(ratios)) {}

  BernsteinPatch num_;
  BernsteinPatch den_;
  std::vector<Rational> ratios_;
};

/// b_alpha(f) = b_alpha(p) / b_alpha(q). Throws DegreeMismatch, SimplexMismatch,
/// or DenominatorNotPositive listing every index with b_alpha(q) <= 0.
RationalPatch make_rational(BernsteinPatch num, BernsteinPatch den);

/// Patch of p / q over V at degree k (both converted directly at degree k).
RationalPatch to_rational(const PowerPoly& p, const PowerPoly& q, int k, const Simplex& simplex,
                          Exec exec = Exec::parallel);

/// max(deg p, deg q).
int rational_degree(const PowerPoly& p, const PowerPoly& q);

/// p(x) / q(x); throws NotPositive if q(x) == 0.
Rational eval_rational(const PowerPoly& p, const PowerPoly& q, std::span<const Rational> x);

/// [m^(k), M^(k)].
Interval enclosure_rational(const RationalPatch& f);

RationalPatch elevate_rational(const RationalPatch& f, Exec exec = Exec::parallel);

/// De Casteljau split of numerator and denominator along edge (i, j).
std::pair<RationalPatch, RationalPatch> split_rational(const RationalPatch& f, int i, int j);
std::vector<RationalPatch> split_round_rational(const RationalPatch& f);

/// Children of f after one subdivision step towards `depth`: at least one
/// round, then further rounds on any child whose squared diameter still
/// exceeds plan.target_sq(depth). Order is deterministic.
std::vector<RationalPatch> refine_to_level(const RationalPatch& f, const SubdivisionPlan& plan,
                                           int depth);

struct Sharpness {
  bool min_sharp = false;
  bool max_sharp = false;
  /// Lowest vertex i with b_{k e_i} equal to the min (resp. max) ratio.
  std::optional<int> min_vertex;
  std::optional<int> max_vertex;
};

/// An enclosure endpoint is the exact extremum iff it is attained at a vertex index.
Sharpness sharpness(const RationalPatch& f);

struct ConvergenceConstants {
  int dimension = 1;
  /// l = max(deg p, deg q).
  int degree = 0;
  /// Working degree k used in omega'.
  int working_degree = 0;
  Rational zeta;
  Rational omega;
  Rational omega_prime;
  Rational min_den;
  Rational num_sd_norm;
  Rational den_sd_norm;
};

/// Constants of the pair pulled back to the standard simplex, at degree l.
/// omega' carries the factor k = working_degree. Throws DenominatorNotPositive.
ConvergenceConstants constants(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                               int working_degree);

}  // namespace sbern
