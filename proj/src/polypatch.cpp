#include "sbern/polypatch.hpp"

#include "sbern/errors.hpp"

#include <algorithm>
#include <atomic>

namespace sbern {

namespace {

// Below this many coefficients the OpenMP region costs more than it saves.
constexpr std::size_t kParallelThreshold = 64;

std::atomic<unsigned long long> g_elevate_calls{0};

bool use_parallel(Exec exec, std::size_t work) {
  return exec == Exec::parallel && work >= kParallelThreshold;
}

struct PreparedTerm {
  std::vector<int> hat;
  Rational scaled;  // a_b / C(k, b)
};

std::vector<Rational> standard_coeffs(const PowerPoly& p, int k, Exec exec) {
  if (k < p.degree())
    throw Error(ErrorKind::DegreeTooLow,
                "degree " + std::to_string(k) + " below polynomial degree " + std::to_string(p.degree()));
  const int n = p.dimension();
  const auto set = enumerate_indices(k, n);
  std::vector<PreparedTerm> terms;
  terms.reserve(p.terms().size());
  for (const auto& [b, a] : p.terms()) terms.push_back({b, a / Rational(binom_graded(k, b))});

  std::vector<Rational> coeffs(set->size());
  const auto count = static_cast<std::ptrdiff_t>(set->size());
#pragma omp parallel for schedule(dynamic, 16) if (use_parallel(exec, set->size()))
  for (std::ptrdiff_t pos = 0; pos < count; ++pos) {
    const auto hat = (*set)[static_cast<std::size_t>(pos)].hat();
    Rational sum = 0;
    for (const auto& t : terms) {
      bool below = true;
      for (std::size_t r = 0; r < hat.size() && below; ++r) below = t.hat[r] <= hat[r];
      if (!below) continue;
      Integer weight = 1;
      for (std::size_t r = 0; r < hat.size(); ++r) weight *= binomial(hat[r], t.hat[r]);
      sum += Rational(weight) * t.scaled;
    }
    coeffs[static_cast<std::size_t>(pos)] = std::move(sum);
  }
  return coeffs;
}

}  // namespace

Rational interval_distance(const Interval& a, const Interval& b) {
  return std::max(abs(a.lo - b.lo), abs(a.hi - b.hi));
}

BernsteinPatch::BernsteinPatch(Simplex simplex, int degree, std::vector<Rational> coeffs)
    : simplex_(std::move(simplex)), degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::DegreeMismatch, "negative degree");
  indices_ = enumerate_indices(degree, simplex_.dimension());
  if (coeffs.size() != indices_->size())
    throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(indices_->size()) +
                                               " coefficients, got " + std::to_string(coeffs.size()));
  coeffs_ = std::move(coeffs);
}

BernsteinPatch BernsteinPatch::operator-() const {
  std::vector<Rational> neg(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) neg[i] = -coeffs_[i];
  return BernsteinPatch(simplex_, degree_, std::move(neg));
}

BernsteinPatch to_bernstein_standard(const PowerPoly& p, int k, Exec exec) {
  return BernsteinPatch(Simplex::standard(p.dimension()), k, standard_coeffs(p, k, exec));
}

BernsteinPatch to_bernstein(const PowerPoly& p, int k, const Simplex& simplex, Exec exec) {
  return BernsteinPatch(simplex, k, standard_coeffs(affine_pullback(simplex, p), k, exec));
}

PowerPoly to_power_standard(const BernsteinPatch& b) {
  const int k = b.degree();
  const int n = b.dimension();
  const auto& set = b.indices();
  // Lower-triangular in the componentwise order; graded order visits every
  // b_hat < a_hat before a_hat.
  std::vector<Rational> a(set.size());
  std::vector<Rational> inv_graded(set.size());
  for (std::size_t pos = 0; pos < set.size(); ++pos)
    inv_graded[pos] = Rational(1) / Rational(binom_graded(k, set[pos].hat()));
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    const auto hat = set[pos].hat();
    Rational rest = b[pos];
    for (std::size_t prev = 0; prev < pos; ++prev) {
      if (a[prev] == 0) continue;
      const auto bh = set[prev].hat();
      bool below = true;
      for (std::size_t r = 0; r < hat.size() && below; ++r) below = bh[r] <= hat[r];
      if (!below) continue;
      rest -= Rational(binom_multi(hat, bh)) * inv_graded[prev] * a[prev];
    }
    a[pos] = rest / inv_graded[pos];
  }
  PowerPoly out(n);
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    const auto hat = set[pos].hat();
    out.add_term(std::vector<int>(hat.begin(), hat.end()), a[pos]);
  }
  return out;
}

BernsteinPatch elevate(const BernsteinPatch& b, Exec exec) {
  g_elevate_calls.fetch_add(1, std::memory_order_relaxed);
  const int k = b.degree();
  const int n = b.dimension();
  const auto up = enumerate_indices(k + 1, n);
  const auto& down = b.indices();
  std::vector<Rational> coeffs(up->size());
  const auto count = static_cast<std::ptrdiff_t>(up->size());
#pragma omp parallel for schedule(dynamic, 16) if (use_parallel(exec, up->size()))
  for (std::ptrdiff_t pos = 0; pos < count; ++pos) {
    const auto beta = (*up)[static_cast<std::size_t>(pos)].entries();
    std::vector<int> work(beta.begin(), beta.end());
    Rational sum = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i] == 0) continue;
      --work[i];
      sum += beta[i] * b[down.rank(work)];
      ++work[i];
    }
    sum /= k + 1;
    coeffs[static_cast<std::size_t>(pos)] = std::move(sum);
  }
  return BernsteinPatch(b.simplex(), k + 1, std::move(coeffs));
}

unsigned long long elevate_call_count() { return g_elevate_calls.load(); }

BernsteinPatch reduce_degree(const BernsteinPatch& b, int degree) {
  PowerPoly power = to_power_standard(b);
  if (power.degree() > degree)
    throw Error(ErrorKind::DegreeTooLow, "patch represents a polynomial of degree " +
                                             std::to_string(power.degree()) + " > " +
                                             std::to_string(degree));
  return BernsteinPatch(b.simplex(), degree, standard_coeffs(power, degree, Exec::serial));
}

Interval enclosure(const BernsteinPatch& b) {
  auto [lo, hi] = std::minmax_element(b.coeffs().begin(), b.coeffs().end());
  return {*lo, *hi};
}

SecondDifferences second_differences(const BernsteinPatch& b) {
  const int k = b.degree();
  if (k < 2) throw Error(ErrorKind::DegreeTooLow, "second differences need degree >= 2");
  const int n = b.dimension();
  const auto gammas = enumerate_indices(k - 2, n);
  const auto& set = b.indices();
  auto wrap = [n](int i) { return i < 0 ? n : i; };

  SecondDifferences out;
  std::vector<int> idx(static_cast<std::size_t>(n) + 1);
  auto at = [&](const MultiIndex& g, int u, int v) -> const Rational& {
    std::copy(g.entries().begin(), g.entries().end(), idx.begin());
    ++idx[static_cast<std::size_t>(u)];
    ++idx[static_cast<std::size_t>(v)];
    return b[set.rank(idx)];
  };
  for (const auto& g : *gammas)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Rational value = at(g, i, wrap(j - 1)) + at(g, wrap(i - 1), j) -
                         at(g, wrap(i - 1), wrap(j - 1)) - at(g, i, j);
        if (abs(value) > out.sup_norm) out.sup_norm = abs(value);
        out.entries.push_back({g, i, j, std::move(value)});
      }
  return out;
}

Rational second_difference_norm(const BernsteinPatch& b) {
  return b.degree() < 2 ? Rational(0) : second_differences(b).sup_norm;
}

Rational discretization_bound(const BernsteinPatch& b, int l) {
  const int k = b.degree();
  if (k <= l)
    throw Error(ErrorKind::DegreeTooLow,
                "bound needs k > l (k = " + std::to_string(k) + ", l = " + std::to_string(l) + ")");
  if (l < 2) return 0;
  const int n = b.dimension();
  Rational sd = second_difference_norm(reduce_degree(b, l));
  Rational t = ratio(n * (n + 2) * l * (l - 1), 24) * sd;
  return t / (k - 1);
}

std::pair<BernsteinPatch, BernsteinPatch> split_patch(const BernsteinPatch& b, int i, int j) {
  auto [keep_i, keep_j] = bisect_edge(b.simplex(), i, j);
  const auto& set = b.indices();
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  std::vector<Rational> left(set.size()), right(set.size());

  std::vector<Rational> line;
  std::vector<int> idx;
  for (const auto& alpha : set) {
    if (alpha[uj] != 0) continue;
    // One coefficient line per alpha with alpha_j = 0: the gamma + s e_i + (c - s) e_j.
    const int c = alpha[ui];
    idx.assign(alpha.entries().begin(), alpha.entries().end());
    auto position = [&](int s) {
      idx[ui] = s;
      idx[uj] = c - s;
      return set.rank(idx);
    };
    line.resize(static_cast<std::size_t>(c) + 1);
    for (int s = 0; s <= c; ++s) line[static_cast<std::size_t>(s)] = b[position(s)];
    // In-place triangle: after round r, line[s] holds the level-r value d_s.
    right[position(0)] = line[0];
    left[position(c)] = line[static_cast<std::size_t>(c)];
    for (int r = 1; r <= c; ++r) {
      for (int s = 0; s + r <= c; ++s)
        line[static_cast<std::size_t>(s)] =
            (line[static_cast<std::size_t>(s)] + line[static_cast<std::size_t>(s) + 1]) / 2;
      right[position(r)] = line[0];
      left[position(c - r)] = line[static_cast<std::size_t>(c - r)];
    }
  }
  return {BernsteinPatch(std::move(keep_i), b.degree(), std::move(left)),
          BernsteinPatch(std::move(keep_j), b.degree(), std::move(right))};
}

std::vector<BernsteinPatch> split_round_patch(const BernsteinPatch& b) {
  std::vector<BernsteinPatch> level{b};
  const int n = b.dimension();
  for (int step = 0; step < n * (n + 1) / 2; ++step) {
    std::vector<BernsteinPatch> next;
    next.reserve(level.size() * 2);
    for (const auto& patch : level) {
      auto [i, j] = longest_edge(patch.simplex());
      auto [a, c] = split_patch(patch, i, j);
      next.push_back(std::move(a));
      next.push_back(std::move(c));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace sbern
