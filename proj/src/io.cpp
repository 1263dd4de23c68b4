#include "sbern/io.hpp"

#include "sbern/errors.hpp"

namespace sbern::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

Point point_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  Point x;
  for (std::size_t i = 0; i < j.size(); ++i)
    x.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return x;
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& path) {
  return point_from_json(j, path);
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

json witness_to_json(const Witness& w) {
  const char* kind = w.kind == WitnessKind::Vertex      ? "vertex"
                     : w.kind == WitnessKind::GridPoint ? "grid_point"
                                                        : "coefficient";
  json out = {{"kind", kind},
              {"point", to_json(w.point)},
              {"value", to_json(w.value)},
              {"value_float", to_double(w.value)}};
  if (w.index) out["index"] = *w.index;
  return out;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_number_float()) fail(path, "floating-point literal; write rationals as strings such as \"13/10\"");
  fail(path, "expected a rational string");
}

json to_json(const Point& x) {
  json out = json::array();
  for (const auto& c : x) out.push_back(to_json(c));
  return out;
}

json to_json(const Simplex& s) {
  json vertices = json::array();
  for (const auto& v : s.vertices()) vertices.push_back(to_json(v));
  return {{"vertices", vertices}};
}

Simplex simplex_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with \"vertices\" or \"interval\"");
  try {
    if (j.contains("interval")) {
      const json& iv = j["interval"];
      if (!iv.is_array() || iv.size() != 2) fail(path + ".interval", "expected [a, b]");
      Rational a = rational_from_json(iv[0], path + ".interval[0]");
      Rational b = rational_from_json(iv[1], path + ".interval[1]");
      if (!(a < b)) fail(path + ".interval", "needs a < b");
      return Simplex::interval(a, b);
    }
    const json& vs = field(j, "vertices", path);
    if (!vs.is_array()) fail(path + ".vertices", "expected an array of points");
    std::vector<Point> points;
    for (std::size_t i = 0; i < vs.size(); ++i)
      points.push_back(point_from_json(vs[i], path + ".vertices[" + std::to_string(i) + "]"));
    return Simplex(std::move(points));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(path, e.what());
  }
}

json to_json(const PowerPoly& p) {
  json terms = json::array();
  for (const auto& [b, c] : p.terms()) terms.push_back({{"exponents", b}, {"coeff", to_json(c)}});
  return {{"dimension", p.dimension()}, {"terms", terms}};
}

PowerPoly power_poly_from_json(const json& j, const std::string& path) {
  const int n = int_from_json(field(j, "dimension", path), path + ".dimension");
  if (n < 1) fail(path + ".dimension", "must be >= 1");
  PowerPoly p(n);
  const json& terms = field(j, "terms", path);
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = path + ".terms[" + std::to_string(t) + "]";
    const json& ex = field(terms[t], "exponents", tp);
    if (!ex.is_array() || static_cast<int>(ex.size()) != n)
      fail(tp + ".exponents", "expected " + std::to_string(n) + " integers");
    std::vector<int> e;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      int v = int_from_json(ex[i], tp + ".exponents[" + std::to_string(i) + "]");
      if (v < 0) fail(tp + ".exponents", "negative exponent");
      e.push_back(v);
    }
    p.add_term(e, rational_from_json(field(terms[t], "coeff", tp), tp + ".coeff"));
  }
  return p;
}

json to_json(const BernsteinPatch& b) {
  return {{"simplex", to_json(b.simplex())}, {"degree", b.degree()}, {"coeffs", rationals_to_json(b.coeffs())}};
}

BernsteinPatch patch_from_json(const json& j, const std::string& path) {
  Simplex s = simplex_from_json(field(j, "simplex", path), path + ".simplex");
  const int k = int_from_json(field(j, "degree", path), path + ".degree");
  auto coeffs = rationals_from_json(field(j, "coeffs", path), path + ".coeffs");
  try {
    return BernsteinPatch(std::move(s), k, std::move(coeffs));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json to_json(const RationalPatch& f) {
  return {{"simplex", to_json(f.simplex())},
          {"degree", f.degree()},
          {"num", rationals_to_json(f.num().coeffs())},
          {"den", rationals_to_json(f.den().coeffs())},
          {"ratios", rationals_to_json(f.ratios())}};
}

RationalPatch rational_patch_from_json(const json& j, const std::string& path) {
  Simplex s = simplex_from_json(field(j, "simplex", path), path + ".simplex");
  const int k = int_from_json(field(j, "degree", path), path + ".degree");
  auto num = rationals_from_json(field(j, "num", path), path + ".num");
  auto den = rationals_from_json(field(j, "den", path), path + ".den");
  RationalPatch f = [&] {
    try {
      return make_rational(BernsteinPatch(s, k, std::move(num)), BernsteinPatch(s, k, std::move(den)));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }();
  if (j.contains("ratios") && rationals_from_json(j["ratios"], path + ".ratios") != f.ratios())
    fail(path + ".ratios", "inconsistent with num / den");
  return f;
}

json to_json(const ConvergenceConstants& c) {
  return {{"dimension", c.dimension},
          {"degree", c.degree},
          {"working_degree", c.working_degree},
          {"zeta", to_json(c.zeta)},
          {"omega", to_json(c.omega)},
          {"omega_prime", to_json(c.omega_prime)},
          {"min_den", to_json(c.min_den)},
          {"num_sd_norm", to_json(c.num_sd_norm)},
          {"den_sd_norm", to_json(c.den_sd_norm)}};
}

json to_json(const CertificateReport& r) {
  json out = {{"verdict", to_string(r.verdict)},
              {"mode", to_string(r.mode)},
              {"negated", r.negated},
              {"degree", r.degree_used},
              {"depth", r.depth_used},
              {"leaves", r.leaves},
              {"wall_clock_seconds", r.elapsed_seconds}};
  out["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  if (r.apriori) {
    json a = json::object();
    if (r.apriori->d1) a["D1"] = to_json(*r.apriori->d1);
    if (r.apriori->d2) a["D2"] = to_json(*r.apriori->d2);
    if (r.apriori->degree_bound) a["degree_bound"] = *r.apriori->degree_bound;
    if (r.apriori->depth_bound) a["depth_bound"] = *r.apriori->depth_bound;
    out["apriori"] = a;
  } else {
    out["apriori"] = nullptr;
  }
  return out;
}

json to_json(const MinimizationResult& r) {
  return {{"m", to_json(r.lower)},
          {"m_float", to_double(r.lower)},
          {"delta", to_json(r.upper)},
          {"delta_float", to_double(r.upper)},
          {"gap", to_json(r.gap())},
          {"gap_float", to_double(r.gap())},
          {"epsilon", to_json(r.epsilon)},
          {"witness", to_json(r.witness)},
          {"rounds", r.rounds},
          {"leaves", r.leaves},
          {"refinements", r.refinements},
          {"status", r.status == MinimizeStatus::Converged ? "converged" : "budget_exhausted"}};
}

ProblemSpec problem_from_json(const json& j) {
  if (!j.is_object()) fail("$", "expected a JSON object");
  ProblemSpec spec;
  spec.numerator = power_poly_from_json(field(j, "numerator", "$"), "numerator");
  const int n = spec.numerator.dimension();
  spec.denominator = j.contains("denominator") ? power_poly_from_json(j["denominator"], "denominator")
                                               : PowerPoly::constant(n, 1);
  if (spec.denominator.dimension() != n)
    fail("denominator.dimension", "differs from numerator dimension " + std::to_string(n));
  spec.domain = j.contains("domain") ? simplex_from_json(j["domain"], "domain") : Simplex::standard(n);
  if (spec.domain.dimension() != n)
    fail("domain", "dimension " + std::to_string(spec.domain.dimension()) +
                       " differs from numerator dimension " + std::to_string(n));
  auto opt_int = [&](const char* name, std::optional<int>& out) {
    if (j.contains(name)) out = int_from_json(j[name], name);
  };
  auto opt_rat = [&](const char* name, std::optional<Rational>& out) {
    if (j.contains(name)) out = rational_from_json(j[name], name);
  };
  opt_int("degree", spec.degree);
  opt_int("kmax", spec.k_max);
  opt_int("nmax", spec.n_max);
  opt_int("budget", spec.budget);
  opt_rat("eps", spec.epsilon);
  opt_rat("C", spec.shrink);
  opt_rat("fmin", spec.f_min);
  opt_rat("pmin", spec.p_min);
  return spec;
}

ProblemSpec parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return problem_from_json(j);
}

}  // namespace sbern::io
