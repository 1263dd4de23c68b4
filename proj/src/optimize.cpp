#include "sbern/optimize.hpp"

#include "sbern/errors.hpp"

#include <algorithm>
#include <set>

namespace sbern {

namespace {

struct ByLowerBound {
  bool operator()(const WorkItem& a, const WorkItem& b) const {
    if (a.local_m != b.local_m) return a.local_m < b.local_m;
    return a.patch.simplex() < b.patch.simplex();
  }
};

struct Incumbent {
  Rational delta;
  Point witness;

  void offer(const LocalBounds& b) {
    if (b.delta < delta) {
      delta = b.delta;
      witness = b.witness;
    }
  }
};

std::vector<LocalBounds> bounds_of(const std::vector<RationalPatch>& patches, const PowerPoly& p,
                                   const PowerPoly& q, Exec exec) {
  std::vector<LocalBounds> out(patches.size());
  const auto count = static_cast<std::ptrdiff_t>(patches.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel && count > 1)
  for (std::ptrdiff_t c = 0; c < count; ++c)
    out[static_cast<std::size_t>(c)] = local_bounds(patches[static_cast<std::size_t>(c)], p, q);
  return out;
}

MinimizationResult finish(MinimizationResult r, const Rational& m, const Incumbent& best,
                          std::size_t leaves, MinimizeStatus status) {
  r.lower = m;
  r.upper = best.delta;
  r.witness = best.witness;
  r.leaves = leaves;
  r.status = status;
  return r;
}

}  // namespace

LocalBounds local_bounds(const RationalPatch& f, const PowerPoly& p, const PowerPoly& q) {
  LocalBounds out;
  const auto& r = f.ratios();
  out.argmin = static_cast<std::size_t>(std::min_element(r.begin(), r.end()) - r.begin());
  out.m = r[out.argmin];
  if (f.degree() >= 1) {
    out.witness = grid_point(f.indices()[out.argmin], f.degree(), f.simplex());
    out.delta = eval_rational(p, q, out.witness);
  } else {
    out.witness = f.simplex().vertex(0);
    out.delta = f.vertex_ratio(0);
  }
  for (int i = 0; i <= f.dimension(); ++i)
    if (f.vertex_ratio(i) < out.delta) {
      out.delta = f.vertex_ratio(i);
      out.witness = f.simplex().vertex(i);
    }
  return out;
}

MinimizationResult minimize(const PowerPoly& p, const PowerPoly& q, const Simplex& simplex,
                            const MinimizeOptions& options) {
  if (options.epsilon <= 0)
    throw Error(ErrorKind::NonPositiveEpsilon, "epsilon must be > 0, got " + to_string(options.epsilon));
  const int l = rational_degree(p, q);
  const SubdivisionPlan plan{simplex.dimension()};
  const Exec exec = options.exec;
  auto notify = [&](const Rational& m, const Rational& d) {
    if (options.on_iteration) options.on_iteration(m, d);
  };

  MinimizationResult result;
  result.epsilon = options.epsilon;

  RationalPatch root = to_rational(p, q, l, simplex, exec);
  const LocalBounds root_bounds = local_bounds(root, p, q);
  Incumbent best{root_bounds.delta, root_bounds.witness};

  if (options.strategy == Strategy::Uniform) {
    std::vector<RationalPatch> leaves{std::move(root)};
    Rational m = root_bounds.m;
    for (int depth = 0;; ++depth) {
      notify(m, best.delta);
      if (best.delta - m < options.epsilon)
        return finish(result, m, best, leaves.size(), MinimizeStatus::Converged);
      if (depth >= options.budget)
        return finish(result, m, best, leaves.size(), MinimizeStatus::BudgetExhausted);

      std::vector<std::vector<RationalPatch>> children(leaves.size());
      const auto count = static_cast<std::ptrdiff_t>(leaves.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel && count > 1)
      for (std::ptrdiff_t c = 0; c < count; ++c)
        children[static_cast<std::size_t>(c)] =
            refine_to_level(leaves[static_cast<std::size_t>(c)], plan, depth + 1);
      result.refinements += leaves.size();
      leaves.clear();
      for (auto& group : children)
        for (auto& child : group) leaves.push_back(std::move(child));
      result.rounds = depth + 1;

      const auto bounds = bounds_of(leaves, p, q, exec);
      m = bounds.front().m;
      for (const auto& b : bounds) {
        best.offer(b);
        m = std::min(m, b.m);
      }
    }
  }

  std::set<WorkItem, ByLowerBound> active;
  active.insert(WorkItem{std::move(root), root_bounds.m, 0});
  auto current_m = [&] {
    return active.empty() ? best.delta : std::min(best.delta, active.begin()->local_m);
  };
  for (;;) {
    // A leaf whose lower bound reaches delta cannot hold anything below delta.
    while (!active.empty() && std::prev(active.end())->local_m >= best.delta)
      active.erase(std::prev(active.end()));
    const Rational m = current_m();
    notify(m, best.delta);
    if (best.delta - m < options.epsilon)
      return finish(result, m, best, active.size(), MinimizeStatus::Converged);
    if (active.begin()->depth >= options.budget)
      return finish(result, m, best, active.size(), MinimizeStatus::BudgetExhausted);

    WorkItem item = std::move(active.extract(active.begin()).value());
    std::vector<RationalPatch> children = refine_to_level(item.patch, plan, item.depth + 1);
    ++result.refinements;
    result.rounds = std::max(result.rounds, item.depth + 1);
    const auto bounds = bounds_of(children, p, q, exec);
    for (const auto& b : bounds) best.offer(b);
    for (std::size_t c = 0; c < children.size(); ++c)
      if (bounds[c].m < best.delta)
        active.insert(WorkItem{std::move(children[c]), bounds[c].m, item.depth + 1});
  }
}

int apriori_steps(const ConvergenceConstants& c, const Rational& epsilon, const Rational& shrink) {
  if (epsilon <= 0)
    throw Error(ErrorKind::NonPositiveEpsilon, "epsilon must be > 0, got " + to_string(epsilon));
  if (!(shrink > 0 && shrink < 1))
    throw Error(ErrorKind::InvalidArgument, "shrink factor must lie in (0, 1)");
  const Rational factor = shrink * shrink;
  Rational lhs = 2 * c.omega_prime;
  int n = 0;
  while (!(lhs < epsilon)) {
    lhs *= factor;
    ++n;
  }
  return n;
}

ClaimedMinimum validated_lower_bound(const MinimizationResult& result) {
  if (result.lower <= 0)
    throw Error(ErrorKind::NotPositive, "lower bound " + to_string(result.lower) + " is not > 0");
  return ClaimedMinimum(result.lower);
}

}  // namespace sbern
