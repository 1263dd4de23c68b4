#pragma once

// Shared fixtures: the worked examples, seeded random corpora and an exact
// sampling oracle for extrema of univariate rational functions.

#include "sbern/certify.hpp"
#include "sbern/errors.hpp"
#include "sbern/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace sbern::testing {

inline Rational R(long p, long q = 1) { return ratio(p, q); }

/// Univariate polynomial from ascending coefficients c_0, c_1, ...
inline PowerPoly univariate(const std::vector<Rational>& c) {
  PowerPoly p(1);
  for (std::size_t e = 0; e < c.size(); ++e) p.add_term({static_cast<int>(e)}, c[e]);
  return p;
}

/// (7x^2 - 5x + 1) / (x^2 - 2x + 7) over [-1, 1].
struct NearZeroExample {
  PowerPoly p = univariate({R(1), R(-5), R(7)});
  PowerPoly q = univariate({R(7), R(-2), R(1)});
  Simplex V = Simplex::interval(R(-1), R(1));
};

/// (5x^2 - 3x + 1) / (x^2 + 1) over [0, 1].
struct ElevationExample {
  PowerPoly p = univariate({R(1), R(-3), R(5)});
  PowerPoly q = univariate({R(1), R(0), R(1)});
  Simplex V = Simplex::interval(R(0), R(1));
};

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, int num_range = 9, int max_den = 4) {
  return ratio(uniform_int(rng, -num_range, num_range), uniform_int(rng, 1, max_den));
}

/// Random polynomial of exact total degree l in n variables.
inline PowerPoly random_poly(Rng& rng, int n, int l) {
  PowerPoly p(n);
  for (int g = 0; g <= l; ++g)
    for (const auto& alpha : *enumerate_indices(g, n)) {
      if (std::uniform_real_distribution<>(0, 1)(rng) < 0.6) {
        auto hat = alpha.hat();
        p.add_term(std::vector<int>(hat.begin(), hat.end()), random_rational(rng));
      }
    }
  // Force the top degree.
  std::vector<int> top(static_cast<std::size_t>(n), 0);
  top[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))] = l;
  const Rational lead(uniform_int(rng, 1, 9) * (uniform_int(rng, 0, 1) ? 1 : -1));
  p.add_term(top, lead - p.coeff(top));
  return p;
}

/// Random nondegenerate simplex with small rational vertices.
inline Simplex random_simplex(Rng& rng, int n) {
  for (;;) {
    std::vector<Point> v(static_cast<std::size_t>(n + 1));
    for (auto& x : v)
      for (int c = 0; c < n; ++c) x.push_back(ratio(uniform_int(rng, -6, 6), uniform_int(rng, 1, 2)));
    if (n == 1) {
      if (v[0][0] == v[1][0]) continue;
      if (v[1][0] < v[0][0]) std::swap(v[0], v[1]);
    }
    try {
      return Simplex(std::move(v));
    } catch (const Error&) {
    }
  }
}

/// Point of the simplex with random positive barycentric weights (interior).
inline Point random_point(Rng& rng, const Simplex& V) {
  std::vector<Rational> w;
  Rational total = 0;
  for (int i = 0; i <= V.dimension(); ++i) {
    w.emplace_back(uniform_int(rng, 1, 1000));
    total += w.back();
  }
  for (auto& x : w) x /= total;
  return from_barycentric(V, w);
}

/// Random denominator shifted so that its degree-l Bernstein coefficients over V are positive.
inline PowerPoly positive_denominator(Rng& rng, int n, int l, const Simplex& V) {
  PowerPoly q = random_poly(rng, n, std::max(l - uniform_int(rng, 0, 1), 0));
  const BernsteinPatch b = to_bernstein(q, l, V, Exec::serial);
  const Interval e = enclosure(b);
  q.add_term(std::vector<int>(static_cast<std::size_t>(n), 0), -e.lo + ratio(uniform_int(rng, 1, 8), uniform_int(rng, 1, 3)));
  return q;
}

struct RationalCase {
  PowerPoly p{1};
  PowerPoly q{1};
  Simplex V = Simplex::standard(1);
  int l = 0;
};

/// Random p / q of degree l over a random n-simplex with positive denominator patch.
inline RationalCase random_rational_case(Rng& rng, int n, int l) {
  RationalCase c;
  c.V = random_simplex(rng, n);
  c.p = random_poly(rng, n, l);
  c.q = positive_denominator(rng, n, l, c.V);
  c.l = rational_degree(c.p, c.q);
  return c;
}

/// The univariate corpus: 20 rationals of degree 2..4 over integer intervals of width 1..3.
inline std::vector<RationalCase> univariate_corpus(std::uint64_t seed = 11) {
  Rng rng(seed);
  std::vector<RationalCase> out;
  while (out.size() < 20) {
    const int l = uniform_int(rng, 2, 4);
    const int a = uniform_int(rng, -3, 2);
    RationalCase c;
    c.V = Simplex::interval(R(a), R(a + uniform_int(rng, 1, 3)));
    c.p = random_poly(rng, 1, l);
    c.q = positive_denominator(rng, 1, l, c.V);
    c.l = rational_degree(c.p, c.q);
    out.push_back(std::move(c));
  }
  return out;
}

/// A positive variant: numerator and denominator with positive values on V,
/// arranged so that p is positive but has negative Bernstein coefficients at degree l.
inline RationalCase positive_case(Rng& rng) {
  for (;;) {
    RationalCase c;
    const int a = uniform_int(rng, -2, 1);
    c.V = Simplex::interval(R(a), R(a + uniform_int(rng, 1, 2)));
    const int l = uniform_int(rng, 2, 4);
    // p = (x - r)^2 * s(x) + eps, with s > 0 on V, has a small positive minimum.
    const Rational r = ratio(uniform_int(rng, 4 * a + 1, 4 * a + 3), 4);
    PowerPoly sq = univariate({r * r, -2 * r, R(1)});
    PowerPoly p = sq;
    if (l >= 3) {
      // Multiply by (x + shift) with shift making it positive on V.
      const Rational shift = Rational(-a + uniform_int(rng, 1, 3));
      PowerPoly lin = univariate({shift, R(1)});
      PowerPoly prod(1);
      for (const auto& [e1, c1] : p.terms())
        for (const auto& [e2, c2] : lin.terms()) prod.add_term({e1[0] + e2[0]}, c1 * c2);
      p = prod;
    }
    if (l == 4) p.add_term({4}, ratio(1, uniform_int(rng, 2, 8)));
    p.add_term({0}, ratio(uniform_int(rng, 1, 6), uniform_int(rng, 8, 40)));
    c.p = p;
    c.q = positive_denominator(rng, 1, p.degree(), c.V);
    c.l = rational_degree(c.p, c.q);
    const RationalPatch f = to_rational(c.p, c.q, c.l, c.V, Exec::serial);
    if (!cert_predicate(f)) return c;
  }
}

/// Exact values at the best of a fine sample plus a local refinement of it.
/// The returned (lo, hi) are attained function values, so lo >= true min and
/// hi <= true max.
inline std::pair<Rational, Rational> sampled_extrema(const PowerPoly& p, const PowerPoly& q,
                                                     const Rational& a, const Rational& b,
                                                     int samples = 4096) {
  auto fd = [&](double x) {
    double num = 0, den = 0;
    for (const auto& [e, c] : p.terms()) num += to_double(c) * std::pow(x, e[0]);
    for (const auto& [e, c] : q.terms()) den += to_double(c) * std::pow(x, e[0]);
    return num / den;
  };
  const double ad = to_double(a), bd = to_double(b);
  auto refine = [&](double x, double sign) {
    double lo = std::max(ad, x - (bd - ad) / samples), hi = std::min(bd, x + (bd - ad) / samples);
    for (int it = 0; it < 100; ++it) {
      double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (sign * fd(m1) < sign * fd(m2)) hi = m2; else lo = m1;
    }
    return (lo + hi) / 2;
  };
  double best_lo = ad, best_hi = ad;
  for (int s = 0; s <= samples; ++s) {
    double x = ad + (bd - ad) * s / samples;
    if (fd(x) < fd(best_lo)) best_lo = x;
    if (fd(x) > fd(best_hi)) best_hi = x;
  }
  auto exact_at = [&](double x) {
    Rational xr(x);
    if (xr < a) xr = a;
    if (xr > b) xr = b;
    Point pt{xr};
    return eval_rational(p, q, pt);
  };
  Rational lo = std::min(exact_at(best_lo), exact_at(refine(best_lo, 1)));
  Rational hi = std::max(exact_at(best_hi), exact_at(refine(best_hi, -1)));
  for (const Rational& e : {a, b}) {
    Point pt{e};
    Rational v = eval_rational(p, q, pt);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

inline const Rational& lo_of(const Simplex& V) { return V.vertex(0)[0]; }
inline const Rational& hi_of(const Simplex& V) { return V.vertex(1)[0]; }

}  // namespace sbern::testing
