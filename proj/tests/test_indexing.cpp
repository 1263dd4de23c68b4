#include "sbern/errors.hpp"
#include "sbern/indexing.hpp"

#include <doctest.h>

#include <set>

using namespace sbern;

namespace {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<int> v(std::initializer_list<int> x) { return x; }

}  // namespace

TEST_CASE("binom_multi is the product of componentwise binomials") {
  CHECK(binom_multi(v({2, 0}), v({1, 0})) == 2);
  CHECK(binom_multi(v({3, 2}), v({0, 0})) == 1);
  CHECK(binom_multi(v({4, 3}), v({2, 1})) == 18);
  CHECK_THROWS_AS(binom_multi(v({1, 2}), v({2, 0})), Error);
  try {
    binom_multi(v({1, 2}), v({2, 0}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ComponentExceeds);
  }
}

TEST_CASE("binom_graded is the multinomial with the implicit entry") {
  CHECK(binom_graded(2, v({1})) == 2);
  CHECK(binom_graded(3, v({0})) == 1);
  CHECK(binom_graded(4, v({2, 1})) == 12);
  try {
    binom_graded(2, v({2, 1}));
    FAIL("expected OrderExceedsDegree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderExceedsDegree);
  }
}

TEST_CASE("binom_graded agrees with factorials and with nested binomials") {
  for (int k = 0; k <= 12; ++k)
    for (int n = 1; n <= 3; ++n)
      for (int g = 0; g <= k; ++g) {
        // Every b in n entries with |b| = g appears as some full index of grade g in n - 1 dimensions.
        std::vector<std::vector<int>> bs;
        if (n == 1)
          bs.push_back({g});
        else
          for (const auto& a : *enumerate_indices(g, n - 1)) bs.emplace_back(a.entries().begin(), a.entries().end());
        for (const auto& b : bs) {
          Integer brute = factorial(k) / factorial(k - g);
          for (int x : b) brute /= factorial(x);
          REQUIRE(binom_graded(k, b) == brute);
          Integer nested = 1;
          int left = k;
          for (int x : b) {
            nested *= binomial(left, x);
            left -= x;
          }
          REQUIRE(binom_graded(k, b) == nested);
        }
      }
}

TEST_CASE("huge binomials stay exact") {
  CHECK(binomial(100, 50) == Integer("100891344545564193334812497256"));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
}

TEST_CASE("enumerate_indices lists the canonical order") {
  auto s = enumerate_indices(2, 1);
  REQUIRE(s->size() == 3);
  CHECK((*s)[0] == MultiIndex{2, 0});
  CHECK((*s)[1] == MultiIndex{1, 1});
  CHECK((*s)[2] == MultiIndex{0, 2});

  auto z = enumerate_indices(0, 3);
  REQUIRE(z->size() == 1);
  CHECK((*z)[0] == MultiIndex{0, 0, 0, 0});

  auto t = enumerate_indices(2, 2);
  REQUIRE(t->size() == 6);
  // Grade 0, then grade 1 descending on (a1, a2), then grade 2.
  std::vector<MultiIndex> expected{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK((*t)[i] == expected[i]);
}

TEST_CASE("index counts, ranks and vertex positions") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 8; ++k) {
      auto s = enumerate_indices(k, n);
      REQUIRE(s->size() == index_count(k, n));
      REQUIRE(Integer(static_cast<unsigned long>(s->size())) == binomial(k + n, n));
      std::set<std::vector<int>> seen;
      for (std::size_t pos = 0; pos < s->size(); ++pos) {
        const MultiIndex& a = (*s)[pos];
        REQUIRE(a.order() == k);
        REQUIRE(a.size() == static_cast<std::size_t>(n + 1));
        REQUIRE(s->rank(a) == pos);
        seen.insert(std::vector<int>(a.entries().begin(), a.entries().end()));
      }
      REQUIRE(seen.size() == s->size());
      for (int i = 0; i <= n; ++i) {
        const MultiIndex& vi = (*s)[s->vertex_position(i)];
        REQUIRE(vi == MultiIndex::vertex(k, n, i));
        if (k > 0) REQUIRE(vi.is_vertex());
      }
    }
}

TEST_CASE("enumeration is cached and stable") {
  auto a = enumerate_indices(5, 3);
  auto b = enumerate_indices(5, 3);
  CHECK(a.get() == b.get());
  IndexSet fresh(5, 3);
  REQUIRE(fresh.size() == a->size());
  for (std::size_t i = 0; i < fresh.size(); ++i) CHECK(fresh[i] == (*a)[i]);
}

TEST_CASE("multi-index invariants") {
  CHECK_THROWS_AS(MultiIndex({1, -1}), Error);
  MultiIndex a{3, 1, 2};
  CHECK(a.order() == 6);
  CHECK(a.hat().size() == 2);
  CHECK(a.hat()[0] == 1);
  CHECK_FALSE(a.is_vertex());
  CHECK(MultiIndex::vertex(4, 2, 1) == MultiIndex{0, 4, 0});
}
