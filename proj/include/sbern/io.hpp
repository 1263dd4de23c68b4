#pragma once

// JSON forms of the library's values. Rationals travel as strings ("13/10",
// "1.3" and "-2" all parse exactly; output is always canonical "p/q").
// Parse failures throw Error(ParseError) naming the offending field path.

#include "sbern/certify.hpp"
#include "sbern/optimize.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace sbern::io {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& path);

json to_json(const Point& x);
json to_json(const Simplex& s);
/// {"vertices": [[...], ...]} or the sugar {"interval": [a, b]}.
Simplex simplex_from_json(const json& j, const std::string& path);

json to_json(const PowerPoly& p);
PowerPoly power_poly_from_json(const json& j, const std::string& path);

json to_json(const BernsteinPatch& b);
BernsteinPatch patch_from_json(const json& j, const std::string& path);

json to_json(const RationalPatch& f);
RationalPatch rational_patch_from_json(const json& j, const std::string& path);

json to_json(const ConvergenceConstants& c);
json to_json(const CertificateReport& r);
json to_json(const MinimizationResult& r);

/// One problem per file: numerator, optional denominator (default 1), domain,
/// and optional parameters overridable from the command line.
struct ProblemSpec {
  PowerPoly numerator{1};
  PowerPoly denominator{1};
  Simplex domain = Simplex::standard(1);
  std::optional<int> degree;
  std::optional<int> k_max;
  std::optional<int> n_max;
  std::optional<Rational> epsilon;
  std::optional<Rational> shrink;
  std::optional<Rational> f_min;
  std::optional<Rational> p_min;
  std::optional<int> budget;
};

ProblemSpec problem_from_json(const json& j);
/// Parses text; syntax errors carry line/column.
ProblemSpec parse_problem(const std::string& text);

}  // namespace sbern::io
