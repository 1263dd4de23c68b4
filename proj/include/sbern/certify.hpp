#pragma once

// Certificates of positivity for f = p / q over a simplex: the Cert predicate,
// sharpness, degree elevation (global), subdivision at fixed degree (local),
// a-priori degree/depth bounds and negativity by sign flip.

#include "sbern/ratpatch.hpp"

#include <optional>
#include <string>

namespace sbern {

enum class Verdict { Certified, Refuted, Inconclusive };
enum class CertMode { Sharpness, GlobalElevation, LocalSubdivision };

const char* to_string(Verdict v);
const char* to_string(CertMode m);

/// A strictly positive lower bound on a minimum (f_min or p_min).
class ClaimedMinimum {
 public:
  /// Throws NonPositiveClaim unless value > 0.
  explicit ClaimedMinimum(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

enum class WitnessKind { Vertex, GridPoint, Coefficient };

struct Witness {
  WitnessKind kind = WitnessKind::Vertex;
  /// Point in the coordinates of the input simplex.
  Point point;
  /// Exact value of f there (f itself also in negative mode); for
  /// Coefficient witnesses the rational Bernstein coefficient of f.
  Rational value;
  /// Position in canonical index order of the coefficient involved, if any.
  std::optional<std::size_t> index;
};

struct AprioriBounds {
  std::optional<Rational> d1;
  std::optional<Rational> d2;
  std::optional<int> degree_bound;
  std::optional<int> depth_bound;
};

struct CertificateReport {
  Verdict verdict = Verdict::Inconclusive;
  CertMode mode = CertMode::Sharpness;
  /// True when the report certifies negativity of f (positivity of -f).
  bool negated = false;
  int degree_used = 0;
  int depth_used = 0;
  std::optional<Witness> witness;
  std::optional<AprioriBounds> apriori;
  /// Certified subsimplices (local mode); 1 in the other modes when certified.
  std::size_t leaves = 0;
  double elapsed_seconds = 0.0;
};

/// All ratios >= 0 and every vertex ratio > 0.
bool cert_predicate(const RationalPatch& f);

CertificateReport certify_sharpness(const RationalPatch& f);

/// Elevates from degree l up to k_max. Throws DenominatorNotPositive at degree l,
/// InvalidArgument if k_max < l.
CertificateReport certify_global(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                                 int k_max, Exec exec = Exec::parallel);

/// Smallest integer k > omega / f_min + 1 with k >= l.
int apriori_degree_omega(const ConvergenceConstants& c, const ClaimedMinimum& f_min);

/// Smallest integer k > l(l-1)/2 * max|b_alpha(p, l)| / p_min with k >= l; l when l <= 1.
/// num_patch is the numerator at its degree l over the standard simplex.
int apriori_degree_pr(const BernsteinPatch& num_patch, const ClaimedMinimum& p_min);

struct CombinedDegreeBound {
  Rational d1;
  Rational d2;
  int degree;
};

/// D1 = omega / f_min + 1, D2 as in apriori_degree_pr, degree = smallest integer > max(D1, D2)
/// (and >= l).
CombinedDegreeBound apriori_degree_combined(const ConvergenceConstants& c,
                                            const ClaimedMinimum& f_min,
                                            const BernsteinPatch& num_patch,
                                            const ClaimedMinimum& p_min);

/// Smallest N >= 0 with C^(2N) * 2 omega' < f_min. Throws InvalidArgument unless 0 < C < 1.
int apriori_depth(const ConvergenceConstants& c, const ClaimedMinimum& f_min,
                  const Rational& shrink);

/// Breadth-first subdivision at the fixed degree l, up to depth n_max.
CertificateReport certify_local(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                                int n_max, Exec exec = Exec::parallel);

struct NegativeParams {
  CertMode mode = CertMode::GlobalElevation;
  /// Degree for sharpness mode (l if unset).
  std::optional<int> degree;
  int k_max = 20;
  int n_max = 8;
};

/// Runs the chosen positivity mode on -p / q; Certified means f < 0 on V.
CertificateReport certify_negative(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                                   const NegativeParams& params, Exec exec = Exec::parallel);

}  // namespace sbern
