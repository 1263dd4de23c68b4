#pragma once

// Branch-and-bound minimization of p / q over a simplex at the fixed degree l,
// driving the gap between the coefficient lower bound m and the function-value
// upper bound delta below epsilon.

#include "sbern/certify.hpp"
#include "sbern/ratpatch.hpp"

#include <functional>
#include <optional>

namespace sbern {

struct LocalBounds {
  /// Min ratio.
  Rational m;
  /// min{ f(grid point of argmin), vertex ratios }: a function value.
  Rational delta;
  /// Point achieving delta.
  Point witness;
  /// Canonical position of the first index attaining m.
  std::size_t argmin = 0;
};

/// Requires the rational functions' power forms to evaluate f at the grid point.
LocalBounds local_bounds(const RationalPatch& f, const PowerPoly& p, const PowerPoly& q);

struct WorkItem {
  RationalPatch patch;
  Rational local_m;
  int depth = 0;
};

enum class Strategy { BestFirst, Uniform };
enum class MinimizeStatus { Converged, BudgetExhausted };

struct MinimizationResult {
  Rational lower;
  Rational upper;
  Point witness;
  Rational epsilon;
  /// Deepest subdivision level (mesh level) reached.
  int rounds = 0;
  /// Active leaves at exit.
  std::size_t leaves = 0;
  /// Number of leaves refined.
  std::size_t refinements = 0;
  MinimizeStatus status = MinimizeStatus::Converged;

  Rational gap() const { return upper - lower; }
};

struct MinimizeOptions {
  Rational epsilon{1, 1000};
  /// Maximum depth (mesh levels).
  int budget = 30;
  Strategy strategy = Strategy::BestFirst;
  Exec exec = Exec::parallel;
  /// Called with (m, delta) after the initial bounds and after every refinement.
  std::function<void(const Rational&, const Rational&)> on_iteration;
};

/// Throws NonPositiveEpsilon, DenominatorNotPositive. Budget exhaustion is
/// reported through status with the partial bounds.
MinimizationResult minimize(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                            const MinimizeOptions& options);

/// Smallest N >= 0 with C^(2N) * 2 omega' < epsilon.
int apriori_steps(const ConvergenceConstants& c, const Rational& epsilon, const Rational& shrink);

/// The lower bound m as a claim; throws NotPositive if m <= 0.
ClaimedMinimum validated_lower_bound(const MinimizationResult& result);

}  // namespace sbern
