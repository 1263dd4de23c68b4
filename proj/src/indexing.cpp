#include "sbern/indexing.hpp"

#include "sbern/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace sbern {

namespace {

// Counting binomial for index bookkeeping; the arguments stay small.
std::size_t count_binom(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::size_t result = 1;
  for (int i = 1; i <= r; ++i) result = result * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
  return result;
}

void append_grade(int remaining, int pos, std::vector<int>& hat, int k,
                  std::vector<MultiIndex>& out) {
  const int n = static_cast<int>(hat.size());
  if (pos == n - 1) {
    hat[static_cast<std::size_t>(pos)] = remaining;
    std::vector<int> full(static_cast<std::size_t>(n) + 1);
    full[0] = k - std::accumulate(hat.begin(), hat.end(), 0);
    std::copy(hat.begin(), hat.end(), full.begin() + 1);
    out.emplace_back(std::move(full));
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    hat[static_cast<std::size_t>(pos)] = v;
    append_grade(remaining - v, pos + 1, hat, k, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "multi-index entries must be nonnegative");
    order_ += e;
  }
}

MultiIndex MultiIndex::vertex(int k, int n, int i) {
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  e[static_cast<std::size_t>(i)] = k;
  return MultiIndex(std::move(e));
}

bool MultiIndex::is_vertex() const {
  int nonzero = 0;
  for (int e : entries_) nonzero += e != 0;
  return nonzero <= 1;
}

Integer binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Integer binom_multi(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "binom_multi arguments differ in length");
  Integer out = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i] || b[i] < 0)
      throw Error(ErrorKind::ComponentExceeds,
                  "component " + std::to_string(i) + ": " + std::to_string(b[i]) + " > " +
                      std::to_string(a[i]));
    out *= binomial(a[i], b[i]);
  }
  return out;
}

Integer binom_graded(int k, std::span<const int> b) {
  int total = 0;
  for (int v : b) total += v;
  if (total > k)
    throw Error(ErrorKind::OrderExceedsDegree,
                "|b| = " + std::to_string(total) + " exceeds k = " + std::to_string(k));
  // Product of nested binomials: C(k, b_1) C(k - b_1, b_2) ...
  Integer out = 1;
  int rest = k;
  for (int v : b) {
    out *= binomial(rest, v);
    rest -= v;
  }
  return out;
}

std::size_t index_count(int k, int n) { return count_binom(k + n, n); }

IndexSet::IndexSet(int degree, int dimension) : degree_(degree), dimension_(dimension) {
  if (degree < 0 || dimension < 1)
    throw Error(ErrorKind::InvalidArgument, "index set needs k >= 0 and n >= 1");
  indices_.reserve(index_count(degree, dimension));
  std::vector<int> hat(static_cast<std::size_t>(dimension));
  for (int g = 0; g <= degree; ++g) append_grade(g, 0, hat, degree, indices_);
}

std::size_t IndexSet::rank(std::span<const int> alpha) const {
  const int n = dimension_;
  int grade = 0;
  for (int t = 1; t <= n; ++t) grade += alpha[static_cast<std::size_t>(t)];
  std::size_t pos = grade == 0 ? 0 : count_binom(grade - 1 + n, n);
  int remaining = grade;
  for (int t = 1; t < n; ++t) {
    const int parts_after = n - t;
    const int a = alpha[static_cast<std::size_t>(t)];
    for (int v = a + 1; v <= remaining; ++v)
      pos += count_binom(remaining - v + parts_after - 1, parts_after - 1);
    remaining -= a;
  }
  return pos;
}

std::size_t IndexSet::vertex_position(int i) const {
  std::vector<int> e(static_cast<std::size_t>(dimension_) + 1, 0);
  e[static_cast<std::size_t>(i)] = degree_;
  return rank(e);
}

std::shared_ptr<const IndexSet> enumerate_indices(int k, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const IndexSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{k, n}];
  if (!slot) slot = std::make_shared<const IndexSet>(k, n);
  return slot;
}

}  // namespace sbern
