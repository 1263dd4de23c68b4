#pragma once

// Multi-indices alpha = (alpha_0, ..., alpha_n) with |alpha| = k and the
// canonical ordering every coefficient array in this library follows.
//
// Canonical order: ascending in the grade |alpha_hat| = alpha_1 + ... + alpha_n,
// and within one grade lexicographically descending on (alpha_1, ..., alpha_n).
// alpha_0 = k - |alpha_hat| is implicit. For n = 1 this lists (k,0), (k-1,1), ...,
// (0,k), i.e. the univariate Bernstein order from the left endpoint.

#include "sbern/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace sbern {

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  /// k * e_i in n + 1 entries.
  static MultiIndex vertex(int k, int n, int i);

  int operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  int order() const { return order_; }
  std::span<const int> entries() const { return entries_; }
  /// (alpha_1, ..., alpha_n): the entry 0 dropped.
  std::span<const int> hat() const { return std::span<const int>(entries_).subspan(1); }

  bool is_vertex() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

/// prod_i C(a_i, b_i). Throws ComponentExceeds if some b_i > a_i.
Integer binom_multi(std::span<const int> a, std::span<const int> b);

/// k! / (b_1! ... b_n! (k - |b|)!). Throws OrderExceedsDegree if |b| > k.
Integer binom_graded(int k, std::span<const int> b);

/// Exact binomial C(n, r) (0 outside 0 <= r <= n).
Integer binomial(int n, int r);

/// Number of multi-indices with |alpha| = k over n + 1 entries, C(k + n, n).
std::size_t index_count(int k, int n);

class IndexSet {
 public:
  IndexSet(int degree, int dimension);

  int degree() const { return degree_; }
  int dimension() const { return dimension_; }
  std::size_t size() const { return indices_.size(); }
  const MultiIndex& operator[](std::size_t pos) const { return indices_[pos]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  /// Position of alpha (length n + 1, |alpha| = k) in canonical order.
  std::size_t rank(std::span<const int> alpha) const;
  std::size_t rank(const MultiIndex& alpha) const { return rank(alpha.entries()); }
  /// Position of k * e_i.
  std::size_t vertex_position(int i) const;

 private:
  int degree_;
  int dimension_;
  std::vector<MultiIndex> indices_;
};

/// All |alpha| = k over n + 1 entries in canonical order. Cached and shared.
std::shared_ptr<const IndexSet> enumerate_indices(int k, int n);

}  // namespace sbern
