#include "sbern/certify.hpp"

#include "sbern/errors.hpp"

#include <algorithm>
#include <chrono>

namespace sbern {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int floor_plus_one(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return static_cast<int>(q.get_si()) + 1;
}

std::optional<Witness> vertex_refutation(const RationalPatch& f) {
  for (int i = 0; i <= f.dimension(); ++i)
    if (f.vertex_ratio(i) <= 0)
      return Witness{WitnessKind::Vertex, f.simplex().vertex(i), f.vertex_ratio(i),
                     f.indices().vertex_position(i)};
  return std::nullopt;
}

std::size_t argmin_position(const RationalPatch& f) {
  const auto& r = f.ratios();
  return static_cast<std::size_t>(std::min_element(r.begin(), r.end()) - r.begin());
}

// f evaluated at the grid point of the smallest coefficient; a refutation if <= 0.
std::optional<Witness> grid_refutation(const RationalPatch& f, const PowerPoly& p,
                                       const PowerPoly& q) {
  if (f.degree() < 1) return std::nullopt;
  const std::size_t pos = argmin_position(f);
  Point x = grid_point(f.indices()[pos], f.degree(), f.simplex());
  Rational value = eval_rational(p, q, x);
  if (value <= 0) return Witness{WitnessKind::GridPoint, std::move(x), std::move(value), pos};
  return std::nullopt;
}

enum class LeafState { Certified, Refuted, Open };

struct LeafOutcome {
  LeafState state = LeafState::Open;
  std::optional<Witness> witness;
};

LeafOutcome examine(const RationalPatch& f, const PowerPoly& p, const PowerPoly& q) {
  if (auto w = vertex_refutation(f)) return {LeafState::Refuted, std::move(w)};
  if (cert_predicate(f)) return {LeafState::Certified, std::nullopt};
  if (auto w = grid_refutation(f, p, q)) return {LeafState::Refuted, std::move(w)};
  return {};
}

void flip_witness(CertificateReport& r) {
  if (r.witness) r.witness->value = -r.witness->value;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(CertMode m) {
  switch (m) {
    case CertMode::Sharpness: return "sharpness";
    case CertMode::GlobalElevation: return "global";
    case CertMode::LocalSubdivision: return "local";
  }
  return "?";
}

ClaimedMinimum::ClaimedMinimum(Rational value) : value_(std::move(value)) {
  if (value_ <= 0)
    throw Error(ErrorKind::NonPositiveClaim, "claimed minimum " + to_string(value_) + " is not > 0");
}

bool cert_predicate(const RationalPatch& f) {
  for (const auto& r : f.ratios())
    if (r < 0) return false;
  for (int i = 0; i <= f.dimension(); ++i)
    if (f.vertex_ratio(i) <= 0) return false;
  return true;
}

CertificateReport certify_sharpness(const RationalPatch& f) {
  const auto start = Clock::now();
  CertificateReport r;
  r.mode = CertMode::Sharpness;
  r.degree_used = f.degree();
  if (auto w = vertex_refutation(f)) {
    r.verdict = Verdict::Refuted;
    r.witness = std::move(w);
  } else if (auto s = sharpness(f); s.min_sharp) {
    // The minimum coefficient is a vertex value, hence the exact minimum, and > 0.
    r.verdict = Verdict::Certified;
    r.leaves = 1;
    const int i = *s.min_vertex;
    r.witness = Witness{WitnessKind::Vertex, f.simplex().vertex(i), f.vertex_ratio(i),
                        f.indices().vertex_position(i)};
  } else {
    r.verdict = Verdict::Inconclusive;
    const std::size_t pos = argmin_position(f);
    r.witness = Witness{WitnessKind::Coefficient,
                        f.degree() >= 1 ? grid_point(f.indices()[pos], f.degree(), f.simplex())
                                        : f.simplex().vertex(0),
                        f.ratios()[pos], pos};
  }
  r.elapsed_seconds = seconds_since(start);
  return r;
}

CertificateReport certify_global(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                                 int k_max, Exec exec) {
  const auto start = Clock::now();
  const int l = rational_degree(p, q);
  if (k_max < l)
    throw Error(ErrorKind::InvalidArgument,
                "k_max = " + std::to_string(k_max) + " is below the degree l = " + std::to_string(l));
  CertificateReport r;
  r.mode = CertMode::GlobalElevation;
  RationalPatch f = to_rational(p, q, l, simplex, exec);
  for (int k = l;; ++k) {
    r.degree_used = k;
    LeafOutcome out = examine(f, p, q);
    if (out.state == LeafState::Refuted) {
      r.verdict = Verdict::Refuted;
      r.witness = std::move(out.witness);
      break;
    }
    if (out.state == LeafState::Certified) {
      r.verdict = Verdict::Certified;
      r.leaves = 1;
      break;
    }
    if (k == k_max) {
      r.verdict = Verdict::Inconclusive;
      const std::size_t pos = argmin_position(f);
      r.witness = Witness{WitnessKind::Coefficient,
                          k >= 1 ? grid_point(f.indices()[pos], k, simplex) : simplex.vertex(0),
                          f.ratios()[pos], pos};
      break;
    }
    f = elevate_rational(f, exec);
  }
  r.elapsed_seconds = seconds_since(start);
  return r;
}

int apriori_degree_omega(const ConvergenceConstants& c, const ClaimedMinimum& f_min) {
  const Rational bound = c.omega / f_min.value() + 1;
  return std::max(floor_plus_one(bound), c.degree);
}

namespace {
Rational pr_bound(const BernsteinPatch& num_patch, const ClaimedMinimum& p_min) {
  const int l = num_patch.degree();
  if (l <= 1) return 0;
  Rational largest = 0;
  for (const auto& b : num_patch.coeffs()) largest = std::max(largest, abs(b));
  return ratio(l * (l - 1), 2) * largest / p_min.value();
}
}  // namespace

int apriori_degree_pr(const BernsteinPatch& num_patch, const ClaimedMinimum& p_min) {
  const int l = num_patch.degree();
  if (l <= 1) return l;
  return std::max(floor_plus_one(pr_bound(num_patch, p_min)), l);
}

CombinedDegreeBound apriori_degree_combined(const ConvergenceConstants& c,
                                            const ClaimedMinimum& f_min,
                                            const BernsteinPatch& num_patch,
                                            const ClaimedMinimum& p_min) {
  CombinedDegreeBound out;
  out.d1 = c.omega / f_min.value() + 1;
  out.d2 = pr_bound(num_patch, p_min);
  out.degree = std::max(floor_plus_one(std::max(out.d1, out.d2)), c.degree);
  return out;
}

int apriori_depth(const ConvergenceConstants& c, const ClaimedMinimum& f_min,
                  const Rational& shrink) {
  if (!(shrink > 0 && shrink < 1))
    throw Error(ErrorKind::InvalidArgument, "shrink factor must lie in (0, 1)");
  const Rational factor = shrink * shrink;
  Rational lhs = 2 * c.omega_prime;
  int n = 0;
  while (!(lhs < f_min.value())) {
    lhs *= factor;
    ++n;
  }
  return n;
}

CertificateReport certify_local(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                                int n_max, Exec exec) {
  const auto start = Clock::now();
  const int l = rational_degree(p, q);
  CertificateReport r;
  r.mode = CertMode::LocalSubdivision;
  r.degree_used = l;
  const SubdivisionPlan plan{simplex.dimension()};

  RationalPatch root = to_rational(p, q, l, simplex, exec);
  LeafOutcome first = examine(root, p, q);
  if (first.state != LeafState::Open) {
    r.verdict = first.state == LeafState::Certified ? Verdict::Certified : Verdict::Refuted;
    r.witness = std::move(first.witness);
    r.leaves = first.state == LeafState::Certified ? 1 : 0;
    r.elapsed_seconds = seconds_since(start);
    return r;
  }

  std::vector<RationalPatch> frontier{std::move(root)};
  std::size_t certified = 0;
  r.verdict = Verdict::Inconclusive;
  for (int depth = 1; depth <= n_max; ++depth) {
    r.depth_used = depth;
    const auto count = static_cast<std::ptrdiff_t>(frontier.size());
    std::vector<std::vector<RationalPatch>> children(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel && count > 1)
    for (std::ptrdiff_t c = 0; c < count; ++c)
      children[static_cast<std::size_t>(c)] =
          refine_to_level(frontier[static_cast<std::size_t>(c)], plan, depth);

    std::vector<RationalPatch> level;
    for (auto& group : children)
      for (auto& child : group) level.push_back(std::move(child));

    const auto level_count = static_cast<std::ptrdiff_t>(level.size());
    std::vector<LeafOutcome> outcomes(level.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel && level_count > 1)
    for (std::ptrdiff_t c = 0; c < level_count; ++c)
      outcomes[static_cast<std::size_t>(c)] = examine(level[static_cast<std::size_t>(c)], p, q);

    // Refutation wins; the first refuting leaf in canonical order is the witness.
    frontier.clear();
    for (std::size_t c = 0; c < level.size(); ++c) {
      if (outcomes[c].state == LeafState::Refuted) {
        r.verdict = Verdict::Refuted;
        r.witness = std::move(outcomes[c].witness);
        r.leaves = certified;
        r.elapsed_seconds = seconds_since(start);
        return r;
      }
    }
    for (std::size_t c = 0; c < level.size(); ++c) {
      if (outcomes[c].state == LeafState::Certified)
        ++certified;
      else
        frontier.push_back(std::move(level[c]));
    }
    if (frontier.empty()) {
      r.verdict = Verdict::Certified;
      break;
    }
  }
  r.leaves = certified;
  if (r.verdict == Verdict::Inconclusive && !frontier.empty()) {
    const RationalPatch& worst = frontier.front();
    const std::size_t pos = argmin_position(worst);
    r.witness = Witness{WitnessKind::Coefficient, grid_point(worst.indices()[pos], l, worst.simplex()),
                        worst.ratios()[pos], pos};
  }
  r.elapsed_seconds = seconds_since(start);
  return r;
}

CertificateReport certify_negative(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                                   const NegativeParams& params, Exec exec) {
  const PowerPoly neg = -p;
  CertificateReport r;
  switch (params.mode) {
    case CertMode::Sharpness:
      r = certify_sharpness(to_rational(neg, q, params.degree.value_or(rational_degree(p, q)), simplex, exec));
      break;
    case CertMode::GlobalElevation:
      r = certify_global(neg, q, simplex, params.k_max, exec);
      break;
    case CertMode::LocalSubdivision:
      r = certify_local(neg, q, simplex, params.n_max, exec);
      break;
  }
  r.negated = true;
  flip_witness(r);
  return r;
}

}  // namespace sbern
