#include "sbern/ratpatch.hpp"

#include "sbern/errors.hpp"

#include <algorithm>

namespace sbern {

namespace {

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) out += ", ";
    out += "(";
    const auto& v = s.vertices()[i];
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (r) out += ", ";
      out += to_string(v[r]);
    }
    out += ")";
  }
  return out + "]";
}

}  // namespace

RationalPatch make_rational(BernsteinPatch num, BernsteinPatch den) {
  if (num.degree() != den.degree())
    throw Error(ErrorKind::DegreeMismatch, "numerator degree " + std::to_string(num.degree()) +
                                               " != denominator degree " + std::to_string(den.degree()));
  if (!(num.simplex() == den.simplex()))
    throw Error(ErrorKind::SimplexMismatch, "numerator and denominator patches differ in simplex");
  std::vector<std::size_t> bad;
  for (std::size_t pos = 0; pos < den.coeffs().size(); ++pos)
    if (den[pos] <= 0) bad.push_back(pos);
  if (!bad.empty()) throw DenominatorNotPositive(std::move(bad), describe(den.simplex()));
  std::vector<Rational> ratios(num.coeffs().size());
  for (std::size_t pos = 0; pos < ratios.size(); ++pos) ratios[pos] = num[pos] / den[pos];
  return RationalPatch(std::move(num), std::move(den), std::move(ratios));
}

RationalPatch to_rational(const PowerPoly& p, const PowerPoly& q, int k, const Simplex& simplex,
                          Exec exec) {
  return make_rational(to_bernstein(p, k, simplex, exec), to_bernstein(q, k, simplex, exec));
}

int rational_degree(const PowerPoly& p, const PowerPoly& q) {
  if (p.dimension() != q.dimension())
    throw Error(ErrorKind::DimensionMismatch, "numerator and denominator dimensions differ");
  return std::max(p.degree(), q.degree());
}

Rational eval_rational(const PowerPoly& p, const PowerPoly& q, std::span<const Rational> x) {
  Rational den = q.eval(x);
  if (den == 0) throw Error(ErrorKind::NotPositive, "denominator vanishes at evaluation point");
  return p.eval(x) / den;
}

Interval enclosure_rational(const RationalPatch& f) {
  auto [lo, hi] = std::minmax_element(f.ratios().begin(), f.ratios().end());
  return {*lo, *hi};
}

RationalPatch elevate_rational(const RationalPatch& f, Exec exec) {
  return make_rational(elevate(f.num(), exec), elevate(f.den(), exec));
}

std::pair<RationalPatch, RationalPatch> split_rational(const RationalPatch& f, int i, int j) {
  auto [na, nb] = split_patch(f.num(), i, j);
  auto [da, db] = split_patch(f.den(), i, j);
  return {make_rational(std::move(na), std::move(da)), make_rational(std::move(nb), std::move(db))};
}

std::vector<RationalPatch> split_round_rational(const RationalPatch& f) {
  auto nums = split_round_patch(f.num());
  auto dens = split_round_patch(f.den());
  std::vector<RationalPatch> out;
  out.reserve(nums.size());
  for (std::size_t c = 0; c < nums.size(); ++c) out.push_back(make_rational(std::move(nums[c]), std::move(dens[c])));
  return out;
}

Sharpness sharpness(const RationalPatch& f) {
  const Interval range = enclosure_rational(f);
  Sharpness s;
  for (int i = 0; i <= f.dimension(); ++i) {
    const Rational& v = f.vertex_ratio(i);
    if (!s.min_vertex && v == range.lo) s.min_vertex = i;
    if (!s.max_vertex && v == range.hi) s.max_vertex = i;
  }
  s.min_sharp = s.min_vertex.has_value();
  s.max_sharp = s.max_vertex.has_value();
  return s;
}

ConvergenceConstants constants(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                               int working_degree) {
  const int l = rational_degree(p, q);
  const int n = simplex.dimension();
  BernsteinPatch bp = to_bernstein_standard(affine_pullback(simplex, p), l);
  BernsteinPatch bq = to_bernstein_standard(affine_pullback(simplex, q), l);
  RationalPatch f = make_rational(bp, bq);
  const Interval range = enclosure_rational(f);

  ConvergenceConstants c;
  c.dimension = n;
  c.degree = l;
  c.working_degree = working_degree;
  c.zeta = std::max(abs(range.lo), abs(range.hi));
  c.min_den = *std::min_element(bq.coeffs().begin(), bq.coeffs().end());
  c.num_sd_norm = second_difference_norm(bp);
  c.den_sd_norm = second_difference_norm(bq);
  const Rational spread = c.num_sd_norm + c.zeta * c.den_sd_norm;
  c.omega = Rational(n * (n + 2) * l * (l - 1)) / (24 * c.min_den) * spread;
  c.omega_prime = Rational(working_degree * n * n * (n + 1) * (n + 2) * (n + 2) * (n + 3)) /
                  (576 * c.min_den) * spread;
  return c;
}

}  // namespace sbern

namespace sbern {

std::vector<RationalPatch> refine_to_level(const RationalPatch& f, const SubdivisionPlan& plan,
                                           int depth) {
  const Rational target = plan.target_sq(depth);
  std::vector<RationalPatch> out;
  std::vector<RationalPatch> pending = split_round_rational(f);
  // Depth-first so that children of one piece stay contiguous.
  std::vector<std::vector<RationalPatch>> stack;
  std::reverse(pending.begin(), pending.end());
  stack.push_back(std::move(pending));
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.empty()) {
      stack.pop_back();
      continue;
    }
    RationalPatch piece = std::move(top.back());
    top.pop_back();
    if (diameter_sq(piece.simplex()) <= target) {
      out.push_back(std::move(piece));
    } else {
      auto more = split_round_rational(piece);
      std::reverse(more.begin(), more.end());
      stack.push_back(std::move(more));
    }
  }
  return out;
}

}  // namespace sbern
