#include "cli.hpp"

#include "sbern/certify.hpp"
#include "sbern/errors.hpp"
#include "sbern/io.hpp"
#include "sbern/optimize.hpp"
#include "sbern/parallel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sbern::cli {

namespace {

using io::json;

struct Options {
  std::string spec_path = "-";
  std::optional<int> degree;
  std::optional<int> k_max;
  std::optional<int> n_max;
  std::optional<int> budget;
  std::optional<std::string> eps;
  std::optional<std::string> shrink;
  std::optional<std::string> f_min;
  std::optional<std::string> p_min;
  std::string mode = "global";
  std::string via = "global";
  std::string strategy = "best";
  int threads = 0;
  bool json_out = false;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

io::ProblemSpec load(const Options& o, std::istream& in) {
  if (o.spec_path == "-") return io::parse_problem(read_all(in));
  std::ifstream file(o.spec_path);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open " + o.spec_path);
  return io::parse_problem(read_all(file));
}

std::optional<Rational> rational_option(const std::optional<std::string>& text,
                                        const std::optional<Rational>& fallback) {
  if (text) return parse_rational(*text);
  return fallback;
}

std::string exact_and_float(const Rational& r) {
  std::string e = to_string(r), d = to_display(r);
  return e == d ? e : e + " (" + d + ")";
}

std::string point_text(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + to_string(x[i]);
  return s + ")";
}

std::string list_text(const std::vector<Rational>& v, bool as_float) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + (as_float ? to_display(v[i]) : to_string(v[i]));
  return s;
}

std::string sharp_text(bool sharp, const std::optional<int>& vertex) {
  return sharp ? "sharp (vertex " + std::to_string(*vertex) + ")" : "not sharp";
}

int cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const io::ProblemSpec spec = load(o, in);
  const int l = rational_degree(spec.numerator, spec.denominator);
  const int k = o.degree.value_or(spec.degree.value_or(l));
  if (k < l) throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(k) + " is below l = " + std::to_string(l));
  const RationalPatch f = to_rational(spec.numerator, spec.denominator, k, spec.domain);
  const Interval range = enclosure_rational(f);
  const Sharpness sh = sharpness(f);
  std::optional<ConvergenceConstants> c;
  std::string constants_note;
  try {
    c = constants(spec.numerator, spec.denominator, spec.domain, k);
  } catch (const DenominatorNotPositive& e) {
    constants_note = e.what();
  }

  if (o.json_out) {
    json j = {{"patch", io::to_json(f)},
              {"enclosure", {io::to_json(range.lo), io::to_json(range.hi)}},
              {"enclosure_float", {to_double(range.lo), to_double(range.hi)}},
              {"min_sharp", sh.min_sharp},
              {"max_sharp", sh.max_sharp}};
    j["constants"] = c ? io::to_json(*c) : json(nullptr);
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  out << "degree " << k << " (l = " << l << "), dimension " << f.dimension() << "\n";
  out << "coefficients: " << list_text(f.ratios(), false) << "\n";
  out << "            ~ " << list_text(f.ratios(), true) << "\n";
  out << "enclosure: [" << to_string(range.lo) << ", " << to_string(range.hi) << "] ~ ["
      << to_display(range.lo) << ", " << to_display(range.hi) << "]\n";
  out << "min " << sharp_text(sh.min_sharp, sh.min_vertex) << ", max " << sharp_text(sh.max_sharp, sh.max_vertex)
      << "\n";
  if (c) {
    out << "zeta = " << exact_and_float(c->zeta) << "\n";
    out << "omega = " << exact_and_float(c->omega) << "\n";
    out << "omega' = " << exact_and_float(c->omega_prime) << " (k = " << c->working_degree << ")\n";
  } else {
    out << "constants unavailable: " << constants_note << "\n";
  }
  return kSuccess;
}

std::optional<AprioriBounds> apriori_for(const io::ProblemSpec& spec, CertMode mode,
                                         const std::optional<Rational>& f_min,
                                         const std::optional<Rational>& p_min, const Rational& shrink) {
  if (!f_min && !p_min) return std::nullopt;
  const int l = rational_degree(spec.numerator, spec.denominator);
  const ConvergenceConstants c = constants(spec.numerator, spec.denominator, spec.domain, l);
  AprioriBounds a;
  if (mode == CertMode::LocalSubdivision) {
    if (f_min) a.depth_bound = apriori_depth(c, ClaimedMinimum(*f_min), shrink);
    return a;
  }
  const BernsteinPatch num_l =
      to_bernstein_standard(affine_pullback(spec.domain, spec.numerator), l);
  if (f_min && p_min) {
    CombinedDegreeBound b = apriori_degree_combined(c, ClaimedMinimum(*f_min), num_l, ClaimedMinimum(*p_min));
    a.d1 = b.d1;
    a.d2 = b.d2;
    a.degree_bound = b.degree;
  } else if (f_min) {
    a.degree_bound = apriori_degree_omega(c, ClaimedMinimum(*f_min));
  } else {
    a.degree_bound = apriori_degree_pr(num_l, ClaimedMinimum(*p_min));
  }
  return a;
}

CertMode parse_mode(const std::string& name) {
  if (name == "sharpness") return CertMode::Sharpness;
  if (name == "global") return CertMode::GlobalElevation;
  return CertMode::LocalSubdivision;
}

int cmd_certify(const Options& o, std::istream& in, std::ostream& out) {
  const io::ProblemSpec spec = load(o, in);
  const auto& [p, q, V] = std::tie(spec.numerator, spec.denominator, spec.domain);
  const int l = rational_degree(p, q);
  const int k = o.degree.value_or(spec.degree.value_or(l));
  const int k_max = o.k_max.value_or(spec.k_max.value_or(20));
  const int n_max = o.n_max.value_or(spec.n_max.value_or(8));
  const Rational shrink = rational_option(o.shrink, spec.shrink).value_or(Rational(1, 2));
  if (!(0 < shrink && shrink < 1)) throw Error(ErrorKind::InvalidArgument, "C must lie in (0, 1)");
  const auto f_min = rational_option(o.f_min, spec.f_min);
  const auto p_min = rational_option(o.p_min, spec.p_min);

  const bool negative = o.mode == "negative";
  const CertMode mode = parse_mode(negative ? o.via : o.mode);
  const auto start = std::chrono::steady_clock::now();
  CertificateReport r;
  if (negative) {
    NegativeParams np{mode, k, k_max, n_max};
    r = certify_negative(p, q, V, np);
  } else if (mode == CertMode::Sharpness) {
    r = certify_sharpness(to_rational(p, q, k, V));
  } else if (mode == CertMode::GlobalElevation) {
    r = certify_global(p, q, V, k_max);
  } else {
    r = certify_local(p, q, V, n_max);
  }
  if (!negative) r.apriori = apriori_for(spec, mode, f_min, p_min, shrink);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.json_out) {
    out << io::to_json(r).dump(2) << "\n";
  } else {
    const std::string what = r.negated ? "negativity" : "positivity";
    switch (r.verdict) {
      case Verdict::Certified:
        out << what << " certified";
        if (r.mode == CertMode::LocalSubdivision)
          out << " at depth " << r.depth_used << ", " << r.leaves << " leaves";
        else
          out << " at k=" << r.degree_used;
        out << " (" << to_string(r.mode) << ")\n";
        break;
      case Verdict::Refuted:
        out << what << " refuted (" << to_string(r.mode) << ")\n";
        break;
      case Verdict::Inconclusive:
        out << "inconclusive (" << to_string(r.mode) << ", k=" << r.degree_used << ", depth " << r.depth_used
            << ")\n";
        break;
    }
    if (r.witness) {
      const Witness& w = *r.witness;
      const char* kind = w.kind == WitnessKind::Vertex ? "vertex" : w.kind == WitnessKind::GridPoint ? "grid point" : "coefficient";
      out << "witness: " << kind << " " << point_text(w.point) << ", f = " << exact_and_float(w.value) << "\n";
    }
    if (r.apriori) {
      if (r.apriori->d1) out << "D1 = " << exact_and_float(*r.apriori->d1) << "\n";
      if (r.apriori->d2) out << "D2 = " << exact_and_float(*r.apriori->d2) << "\n";
      if (r.apriori->degree_bound) out << "a-priori degree bound: " << *r.apriori->degree_bound << "\n";
      if (r.apriori->depth_bound) out << "a-priori depth bound: " << *r.apriori->depth_bound << "\n";
    }
  }
  switch (r.verdict) {
    case Verdict::Certified: return kSuccess;
    case Verdict::Refuted: return kRefuted;
    default: return kInconclusive;
  }
}

int cmd_minimize(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const io::ProblemSpec spec = load(o, in);
  MinimizeOptions mo;
  const auto eps = rational_option(o.eps, spec.epsilon);
  if (eps) mo.epsilon = *eps;
  if (mo.epsilon <= 0) {
    err << "sbern: --eps must be > 0, got " << to_string(mo.epsilon) << "\n";
    return kUsage;
  }
  mo.budget = o.budget.value_or(spec.budget.value_or(mo.budget));
  mo.strategy = o.strategy == "uniform" ? Strategy::Uniform : Strategy::BestFirst;
  const Rational shrink = rational_option(o.shrink, spec.shrink).value_or(Rational(1, 2));
  if (!(0 < shrink && shrink < 1)) throw Error(ErrorKind::InvalidArgument, "C must lie in (0, 1)");

  const MinimizationResult r = minimize(spec.numerator, spec.denominator, spec.domain, mo);
  const int l = rational_degree(spec.numerator, spec.denominator);
  const int steps = apriori_steps(constants(spec.numerator, spec.denominator, spec.domain, l), mo.epsilon, shrink);
  if (o.json_out) {
    json j = io::to_json(r);
    j["apriori_steps"] = steps;
    out << j.dump(2) << "\n";
  } else {
    out << "m = " << exact_and_float(r.lower) << "\n";
    out << "delta = " << exact_and_float(r.upper) << "\n";
    out << "gap = " << to_display(r.gap()) << " (eps = " << exact_and_float(r.epsilon) << ")\n";
    out << "witness: " << point_text(r.witness) << "\n";
    out << "rounds: " << r.rounds << " (a-priori bound " << steps << "), leaves " << r.leaves
        << ", refinements " << r.refinements << "\n";
    out << (r.status == MinimizeStatus::Converged ? "converged" : "budget exhausted") << "\n";
  }
  return r.status == MinimizeStatus::Converged ? kSuccess : kInconclusive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds, certificates and minima of rational functions over simplices", "sbern"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "Problem JSON file ('-' or absent: stdin)");
    sub->add_flag("--json", o.json_out, "Machine-readable output");
    sub->add_option("--threads", o.threads, "Cap on worker threads")->check(CLI::NonNegativeNumber);
    sub->add_option("--C", o.shrink, "Shrinking factor for a-priori bounds (default 1/2)");
  };
  CLI::App* bounds = app.add_subcommand("bounds", "Bernstein enclosure, sharpness and constants");
  common(bounds);
  bounds->add_option("--degree", o.degree, "Bernstein degree k (default l)");

  CLI::App* certify = app.add_subcommand("certify", "Certificate of positivity");
  common(certify);
  certify->add_option("--mode", o.mode, "sharpness | global | local | negative")
      ->check(CLI::IsMember({"sharpness", "global", "local", "negative"}));
  certify->add_option("--via", o.via, "Positivity mode used by negative mode")
      ->check(CLI::IsMember({"sharpness", "global", "local"}));
  certify->add_option("--degree", o.degree, "Degree for sharpness mode (default l)");
  certify->add_option("--kmax", o.k_max, "Largest degree for global mode");
  certify->add_option("--nmax", o.n_max, "Largest depth for local mode");
  certify->add_option("--fmin", o.f_min, "Claimed lower bound on min f, for a-priori bounds");
  certify->add_option("--pmin", o.p_min, "Claimed lower bound on min p, for a-priori bounds");

  CLI::App* minimize_cmd = app.add_subcommand("minimize", "Guaranteed bounds on the minimum");
  common(minimize_cmd);
  minimize_cmd->add_option("--eps", o.eps, "Target gap (default 1/1000)");
  minimize_cmd->add_option("--budget", o.budget, "Largest subdivision depth");
  minimize_cmd->add_option("--strategy", o.strategy, "best | uniform")->check(CLI::IsMember({"best", "uniform"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (o.threads > 0) set_threads(o.threads);
    if (bounds->parsed()) return cmd_bounds(o, in, out);
    if (certify->parsed()) return cmd_certify(o, in, out);
    return cmd_minimize(o, in, out, err);
  } catch (const Error& e) {
    err << "sbern: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "sbern: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace sbern::cli
