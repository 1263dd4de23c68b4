#include "sbern/power_poly.hpp"

#include "sbern/errors.hpp"

namespace sbern {

PowerPoly::PowerPoly(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw Error(ErrorKind::InvalidArgument, "polynomial dimension must be >= 1");
}

PowerPoly::PowerPoly(int dimension, const Terms& terms) : PowerPoly(dimension) {
  for (const auto& [b, c] : terms) add_term(b, c);
}

PowerPoly PowerPoly::constant(int dimension, const Rational& c) {
  PowerPoly p(dimension);
  p.add_term(Exponents(static_cast<std::size_t>(dimension), 0), c);
  return p;
}

Rational PowerPoly::coeff(const Exponents& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PowerPoly::add_term(const Exponents& b, const Rational& c) {
  if (static_cast<int>(b.size()) != dimension_)
    throw Error(ErrorKind::DimensionMismatch, "exponent vector has " + std::to_string(b.size()) +
                                                  " entries, expected " + std::to_string(dimension_));
  for (int e : b)
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  recompute_degree();
}

void PowerPoly::recompute_degree() {
  degree_ = 0;
  for (const auto& [b, c] : terms_) {
    int order = 0;
    for (int e : b) order += e;
    degree_ = std::max(degree_, order);
  }
}

Rational PowerPoly::eval(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dimension_)
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                  " coordinates, expected " + std::to_string(dimension_));
  // Power tables per coordinate.
  std::vector<std::vector<Rational>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) powers[i].push_back(1);
  Rational sum = 0;
  for (const auto& [b, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= b[i]) pw.push_back(pw.back() * x[i]);
      term *= pw[static_cast<std::size_t>(b[i])];
    }
    sum += term;
  }
  return sum;
}

PowerPoly PowerPoly::operator-() const {
  PowerPoly out(dimension_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  out.degree_ = degree_;
  return out;
}

}  // namespace sbern
