#include "sbern/errors.hpp"
#include "sbern/ratpatch.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sbern;
using sbern::testing::R;
using sbern::testing::univariate;

namespace {

using Coeffs = std::vector<Rational>;

}  // namespace

TEST_CASE("make_rational ratios") {
  const Simplex V = Simplex::interval(R(-1), R(1));
  const RationalPatch f = make_rational(BernsteinPatch(V, 2, {R(13), R(-6), R(3)}),
                                        BernsteinPatch(V, 2, {R(10), R(6), R(6)}));
  CHECK(f.ratios() == Coeffs{R(13, 10), R(-1), R(1, 2)});

  const Simplex U = Simplex::interval(R(0), R(1));
  const RationalPatch g = make_rational(BernsteinPatch(U, 2, {R(1), R(-1, 2), R(3)}),
                                        BernsteinPatch(U, 2, {R(1), R(1), R(2)}));
  CHECK(g.ratios() == Coeffs{R(1), R(-1, 2), R(3, 2)});

  const BernsteinPatch same(U, 2, {R(2), R(5), R(7)});
  const RationalPatch one = make_rational(same, same);
  for (const auto& r : one.ratios()) CHECK(r == 1);

  for (std::size_t a = 0; a < f.ratios().size(); ++a) CHECK(f.ratios()[a] * f.den()[a] == f.num()[a]);
}

TEST_CASE("make_rational errors") {
  const Simplex V = Simplex::interval(R(-1), R(1));
  const BernsteinPatch num(V, 2, {R(1), R(2), R(3)});
  try {
    make_rational(num, BernsteinPatch(V, 2, {R(1), R(0), R(-2)}));
    FAIL("expected DenominatorNotPositive");
  } catch (const DenominatorNotPositive& e) {
    CHECK(e.kind() == ErrorKind::DenominatorNotPositive);
    CHECK(e.indices() == std::vector<std::size_t>{1, 2});
  }
  try {
    make_rational(num, BernsteinPatch(V, 1, {R(1), R(1)}));
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
  try {
    make_rational(num, BernsteinPatch(Simplex::interval(R(0), R(1)), 2, {R(1), R(1), R(1)}));
    FAIL("expected SimplexMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SimplexMismatch);
  }
}

TEST_CASE("positive q with a non-positive Bernstein coefficient is rejected, not misjudged") {
  // q = 4x^2 - 4x + 2 > 0 on [0, 1], but b_1(q, 2) = 0.
  const PowerPoly q = univariate({R(2), R(-4), R(4)});
  CHECK_THROWS_AS(to_rational(univariate({R(1)}), q, 2, Simplex::interval(R(0), R(1))), DenominatorNotPositive);
  // Elevation cures it.
  const RationalPatch f = to_rational(univariate({R(1)}), q, 3, Simplex::interval(R(0), R(1)));
  CHECK(f.degree() == 3);
}

TEST_CASE("enclosure_rational") {
  const testing::NearZeroExample e1;
  CHECK(enclosure_rational(to_rational(e1.p, e1.q, 2, e1.V)) == Interval{R(-1), R(13, 10)});
  const RationalPatch c = to_rational(PowerPoly::constant(2, R(3)), PowerPoly::constant(2, R(2)), 0, Simplex::standard(2));
  CHECK(enclosure_rational(c) == Interval{R(3, 2), R(3, 2)});
  const testing::ElevationExample e2;
  CHECK(enclosure_rational(to_rational(e2.p, e2.q, 3, e2.V)) == Interval{R(0), R(3, 2)});
}

TEST_CASE("elevate_rational") {
  const testing::ElevationExample e2;
  const RationalPatch f2 = to_rational(e2.p, e2.q, 2, e2.V);
  CHECK(f2.ratios() == Coeffs{R(1), R(-1, 2), R(3, 2)});
  const RationalPatch f3 = elevate_rational(f2);
  CHECK(f3.ratios() == Coeffs{R(1), R(0), R(1, 2), R(3, 2)});
  CHECK(f3 == to_rational(e2.p, e2.q, 3, e2.V));

  const RationalPatch c = to_rational(PowerPoly::constant(1, R(3)), PowerPoly::constant(1, R(2)), 0, e2.V);
  const RationalPatch ce = elevate_rational(c);
  for (const auto& r : ce.ratios()) CHECK(r == R(3, 2));

  const testing::NearZeroExample e1;
  RationalPatch f = to_rational(e1.p, e1.q, 2, e1.V);
  for (int s = 0; s < 5; ++s) {
    RationalPatch g = elevate_rational(f);
    CHECK(enclosure_rational(g).subset_of(enclosure_rational(f)));
    f = std::move(g);
  }
}

TEST_CASE("sharpness") {
  const testing::NearZeroExample e1;
  const RationalPatch f = to_rational(e1.p, e1.q, 2, e1.V);
  const Sharpness s = sharpness(f);
  CHECK(s.max_sharp);
  REQUIRE(s.max_vertex);
  CHECK(*s.max_vertex == 0);
  CHECK(eval_rational(e1.p, e1.q, Point{R(-1)}) == R(13, 10));
  CHECK_FALSE(s.min_sharp);
  CHECK_FALSE(s.min_vertex);

  const RationalPatch c = to_rational(PowerPoly::constant(1, R(3)), PowerPoly::constant(1, R(2)), 2, e1.V);
  CHECK(sharpness(c).min_sharp);
  CHECK(sharpness(c).max_sharp);
}

TEST_CASE("sharp endpoints are function values, and the enclosure is sound") {
  testing::Rng rng(20);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform_int(rng, 1, 2);
    const auto c = testing::random_rational_case(rng, n, testing::uniform_int(rng, 1, 3));
    const RationalPatch f = to_rational(c.p, c.q, c.l, c.V);
    const Interval e = enclosure_rational(f);
    const Sharpness s = sharpness(f);
    if (s.max_sharp) REQUIRE(e.hi == eval_rational(c.p, c.q, c.V.vertex(*s.max_vertex)));
    if (s.min_sharp) REQUIRE(e.lo == eval_rational(c.p, c.q, c.V.vertex(*s.min_vertex)));
    for (int i = 0; i <= n; ++i) REQUIRE(f.vertex_ratio(i) == eval_rational(c.p, c.q, c.V.vertex(i)));
    for (int k = 0; k < 100; ++k) REQUIRE(e.contains(eval_rational(c.p, c.q, testing::random_point(rng, c.V))));
  }
}

TEST_CASE("dense rational grid inside the enclosure") {
  const testing::NearZeroExample e1;
  const Interval e = enclosure_rational(to_rational(e1.p, e1.q, 2, e1.V));
  for (int s = 0; s <= 10000; ++s) REQUIRE(e.contains(eval_rational(e1.p, e1.q, Point{R(-1) + R(2 * s, 10000)})));

  const PowerPoly p(2, {{{2, 0}, R(1)}, {{1, 1}, R(-3)}, {{0, 1}, R(1)}});
  const PowerPoly q(2, {{{0, 0}, R(3)}, {{1, 0}, R(1)}});
  const Interval t = enclosure_rational(to_rational(p, q, 2, Simplex::standard(2)));
  for (int a = 0; a <= 44; ++a)
    for (int b = 0; a + b <= 44; ++b) REQUIRE(t.contains(eval_rational(p, q, Point{R(a, 44), R(b, 44)})));
}

TEST_CASE("split_rational matches recomputation") {
  const testing::NearZeroExample e1;
  const RationalPatch f = to_rational(e1.p, e1.q, 2, e1.V);
  auto [a, b] = split_rational(f, 0, 1);
  CHECK(a == to_rational(e1.p, e1.q, 2, Simplex::interval(R(-1), R(0))));
  CHECK(b == to_rational(e1.p, e1.q, 2, Simplex::interval(R(0), R(1))));
  CHECK(a.ratios() == Coeffs{R(13, 10), R(7, 16), R(1, 7)});
}

TEST_CASE("refine_to_level reaches mesh levels") {
  const testing::NearZeroExample e1;
  const RationalPatch f = to_rational(e1.p, e1.q, 2, e1.V);
  const SubdivisionPlan plan{1};
  const auto level1 = refine_to_level(f, plan, 1);
  REQUIRE(level1.size() == 4);
  CHECK(level1[0].simplex() == Simplex::interval(R(-1), R(-1, 2)));
  CHECK(level1[3].simplex() == Simplex::interval(R(1, 2), R(1)));
  const auto level2 = refine_to_level(level1[2], plan, 2);
  REQUIRE(level2.size() == 2);
  CHECK(level2[0].simplex() == Simplex::interval(R(0), R(1, 4)));
  CHECK(level2[1].simplex() == Simplex::interval(R(1, 4), R(1, 2)));

  // A small simplex is still split at least once.
  const RationalPatch tiny = to_rational(e1.p, e1.q, 2, Simplex::interval(R(0), R(1, 100)));
  CHECK(refine_to_level(tiny, plan, 1).size() == 2);

  const RationalPatch tri = to_rational(PowerPoly::constant(2, R(1)), PowerPoly::constant(2, R(1)), 0, Simplex::standard(2));
  const SubdivisionPlan plan2{2};
  for (int d = 1; d <= 2; ++d) {
    std::vector<RationalPatch> leaves{tri};
    for (int s = 1; s <= d; ++s) {
      std::vector<RationalPatch> next;
      for (const auto& x : leaves)
        for (auto& y : refine_to_level(x, plan2, s)) next.push_back(std::move(y));
      leaves = std::move(next);
    }
    for (const auto& x : leaves) CHECK(diameter_sq(x.simplex()) <= plan2.target_sq(d));
  }
}

TEST_CASE("convergence constants of the first worked example") {
  const testing::NearZeroExample e1;
  const ConvergenceConstants c = constants(e1.p, e1.q, e1.V, 2);
  CHECK(c.degree == 2);
  CHECK(c.zeta == R(13, 10));
  CHECK(c.num_sd_norm == 28);
  CHECK(c.den_sd_norm == 4);
  CHECK(c.min_den == 6);
  CHECK(c.omega == R(1 * 3 * 2 * 1, 24 * 6) * (28 + R(13, 10) * 4));
  CHECK(c.omega == R(83, 60));
  CHECK(c.omega_prime == R(2 * 1 * 2 * 9 * 4, 576 * 6) * (28 + R(13, 10) * 4));
  CHECK(constants(e1.p, e1.q, e1.V, 4).omega_prime == 2 * c.omega_prime);
}

TEST_CASE("linear pairs have zero omega") {
  const PowerPoly p = univariate({R(1), R(2)});
  const PowerPoly q = univariate({R(3), R(1)});
  const ConvergenceConstants c = constants(p, q, Simplex::interval(R(0), R(2)), 1);
  CHECK(c.omega == 0);
  CHECK(c.omega_prime == 0);
  CHECK(c.zeta == R(1, 1));
  CHECK(c.min_den > 0);
}

TEST_CASE("constants reject a non-positive denominator patch") {
  CHECK_THROWS_AS(constants(univariate({R(1)}), univariate({R(-1)}), Simplex::standard(1), 1), DenominatorNotPositive);
}

TEST_CASE("eval_rational rejects a zero denominator") {
  try {
    eval_rational(univariate({R(1)}), univariate({R(0), R(1)}), Point{R(0)});
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPositive);
  }
}
