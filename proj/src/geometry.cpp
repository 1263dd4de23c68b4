#include "sbern/geometry.hpp"

#include "sbern/errors.hpp"

#include <map>

namespace sbern {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Columns v_i - v_0.
Matrix edge_matrix(const std::vector<Point>& v) {
  const std::size_t n = v.size() - 1;
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = v[c + 1][r] - v[0][r];
  return m;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

// Solves m y = rhs; m is known to be nonsingular.
std::vector<Rational> solve(Matrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (m[pivot][c] == 0) ++pivot;
    std::swap(m[pivot], m[c]);
    std::swap(rhs[pivot], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
      rhs[r] -= factor * rhs[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) rhs[c] /= m[c][c];
  return rhs;
}

Rational dist_sq(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

using SparsePoly = std::map<std::vector<int>, Rational>;

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw Error(ErrorKind::DimensionMismatch, "a simplex needs n + 1 >= 2 vertices");
  const std::size_t n = vertices_.size() - 1;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].size() != n)
      throw Error(ErrorKind::DimensionMismatch, "vertex " + std::to_string(i) + " has " +
                                                    std::to_string(vertices_[i].size()) +
                                                    " coordinates, expected " + std::to_string(n));
  if (determinant(edge_matrix(vertices_)) == 0)
    throw Error(ErrorKind::DegenerateSimplex, "vertices are affinely dependent");
}

Simplex Simplex::standard(int n) {
  std::vector<Point> v(static_cast<std::size_t>(n) + 1, Point(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = 1;
  return Simplex(std::move(v));
}

Simplex Simplex::interval(const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(ErrorKind::DegenerateSimplex, "interval needs a < b");
  return Simplex({Point{a}, Point{b}});
}

Rational Simplex::signed_volume_factor() const { return determinant(edge_matrix(vertices_)); }

std::vector<Rational> barycentric(const Simplex& simplex, std::span<const Rational> x) {
  const auto& v = simplex.vertices();
  const std::size_t n = v.size() - 1;
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "point dimension does not match simplex");
  std::vector<Rational> rhs(n);
  for (std::size_t r = 0; r < n; ++r) rhs[r] = x[r] - v[0][r];
  std::vector<Rational> tail = solve(edge_matrix(v), std::move(rhs));
  std::vector<Rational> lambda(n + 1);
  lambda[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    lambda[i + 1] = tail[i];
    lambda[0] -= tail[i];
  }
  return lambda;
}

Point from_barycentric(const Simplex& simplex, std::span<const Rational> lambda) {
  const auto& v = simplex.vertices();
  if (lambda.size() != v.size())
    throw Error(ErrorKind::DimensionMismatch, "barycentric coordinate count does not match simplex");
  Point x(v.size() - 1, Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t r = 0; r < x.size(); ++r) x[r] += lambda[i] * v[i][r];
  return x;
}

Point grid_point(const MultiIndex& alpha, int k, const Simplex& simplex) {
  if (k < 1 || alpha.order() != k ||
      alpha.size() != static_cast<std::size_t>(simplex.dimension()) + 1)
    throw Error(ErrorKind::DegreeMismatch, "grid point needs |alpha| = k >= 1 and n + 1 entries");
  const auto& v = simplex.vertices();
  Point x(v.size() - 1, Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (alpha[i] == 0) continue;
    for (std::size_t r = 0; r < x.size(); ++r) x[r] += alpha[i] * v[i][r];
  }
  for (auto& c : x) c /= k;
  return x;
}

Rational diameter_sq(const Simplex& simplex) {
  const auto& v = simplex.vertices();
  Rational best = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, dist_sq(v[i], v[j]));
  return best;
}

double diameter_upper(const Simplex& simplex) { return sqrt_upper(diameter_sq(simplex)); }

PowerPoly affine_pullback(const Simplex& simplex, const PowerPoly& p) {
  const int n = simplex.dimension();
  if (p.dimension() != n)
    throw Error(ErrorKind::DimensionMismatch, "polynomial and simplex dimensions differ");
  const auto& v = simplex.vertices();
  const std::size_t un = static_cast<std::size_t>(n);

  // x_r(t) = v0_r + sum_i t_i (v_i - v0)_r
  std::vector<SparsePoly> coord(un);
  for (std::size_t r = 0; r < un; ++r) {
    std::vector<int> zero(un, 0);
    if (v[0][r] != 0) coord[r][zero] = v[0][r];
    for (std::size_t i = 1; i <= un; ++i) {
      Rational d = v[i][r] - v[0][r];
      if (d == 0) continue;
      std::vector<int> e(un, 0);
      e[i - 1] = 1;
      coord[r][e] = d;
    }
  }
  std::vector<std::vector<SparsePoly>> powers(un);
  for (std::size_t r = 0; r < un; ++r) powers[r].push_back(SparsePoly{{std::vector<int>(un, 0), Rational(1)}});

  SparsePoly acc;
  for (const auto& [b, c] : p.terms()) {
    SparsePoly term{{std::vector<int>(un, 0), c}};
    for (std::size_t r = 0; r < un; ++r) {
      auto& pw = powers[r];
      while (static_cast<int>(pw.size()) <= b[r]) pw.push_back(multiply(pw.back(), coord[r]));
      if (b[r] > 0) term = multiply(term, pw[static_cast<std::size_t>(b[r])]);
    }
    for (const auto& [e, ce] : term) acc[e] += ce;
  }
  PowerPoly out(n);
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

std::pair<Simplex, Simplex> bisect_edge(const Simplex& simplex, int i, int j) {
  const int n = simplex.dimension();
  if (i < 0 || j > n || i >= j)
    throw Error(ErrorKind::BadEdge, "edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") invalid for n = " + std::to_string(n));
  const auto& v = simplex.vertices();
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  Point mid(v[ui].size());
  for (std::size_t r = 0; r < mid.size(); ++r) mid[r] = (v[ui][r] + v[uj][r]) / 2;
  std::vector<Point> keep_i = v, keep_j = v;
  keep_i[uj] = mid;
  keep_j[ui] = mid;
  return {Simplex(std::move(keep_i)), Simplex(std::move(keep_j))};
}

std::pair<int, int> longest_edge(const Simplex& simplex) {
  const auto& v = simplex.vertices();
  std::pair<int, int> best{0, 1};
  Rational best_len = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Rational d = dist_sq(v[i], v[j]);
      if (d > best_len) {
        best_len = d;
        best = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  return best;
}

std::vector<Simplex> split_round(const Simplex& simplex) {
  std::vector<Simplex> level{simplex};
  const int n = simplex.dimension();
  for (int step = 0; step < n * (n + 1) / 2; ++step) {
    std::vector<Simplex> next;
    next.reserve(level.size() * 2);
    for (const auto& s : level) {
      auto [i, j] = longest_edge(s);
      auto [a, b] = bisect_edge(s, i, j);
      next.push_back(std::move(a));
      next.push_back(std::move(b));
    }
    level = std::move(next);
  }
  return level;
}

Rational SubdivisionPlan::reference_sq() const { return dimension == 1 ? Rational(1) : Rational(2); }

Rational SubdivisionPlan::target_sq(int depth) const {
  Rational t = reference_sq();
  for (int s = 0; s < depth; ++s) t *= shrink_factor * shrink_factor;
  return t;
}

}  // namespace sbern
