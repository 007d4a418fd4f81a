#include "probing/nonadaptive.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "probing/adaptive.hpp"
#include "probing/fmax.hpp"
#include "probing/outcomes.hpp"

namespace probing {

namespace {

void check_sizes(const SetFunction& f, const GroundSet& g, const char* what) {
  if (f.n() != g.size())
    throw PreconditionError(std::string(what) + ": objective and ground set sizes differ");
}

void check_plan(const ProbePlan& plan, int n, const char* what) {
  Subset seen;
  for (int e : plan.order) {
    if (e < 0 || e >= n) throw PreconditionError(std::string(what) + ": element out of range");
    if (seen.contains(e)) throw PreconditionError(std::string(what) + ": repeated element");
    seen = seen.with(e);
  }
}

}  // namespace

double plan_value(const ProbePlan& plan, const SetFunction& f, const GroundSet& g) {
  check_sizes(f, g, "plan_value");
  check_plan(plan, g.size(), "plan_value");
  FmaxCache cache(f);
  double total = 0.0;
  for_each_outcome(plan.set(), g, [&](Subset r, double pr) { total += pr * cache.value(r); });
  return total;
}

double plan_value_surrogate(const ProbePlan& plan, const SetFunction& f, const GroundSet& g) {
  check_sizes(f, g, "plan_value_surrogate");
  check_plan(plan, g.size(), "plan_value_surrogate");
  std::vector<double> halved(g.probs());
  for (double& p : halved) p *= 0.5;
  const GroundSet thinned(halved);
  double total = 0.0;
  for_each_outcome(plan.set(), thinned, [&](Subset r, double pr) { total += pr * f.eval(r); });
  return total;
}

OptNonadaptiveResult opt_nonadaptive(const SetFunction& f, const GroundSet& g,
                                     const ConstraintAutomaton& c, PlanValueMode mode) {
  check_sizes(f, g, "opt_nonadaptive");
  if (c.n() != g.size())
    throw PreconditionError("opt_nonadaptive: constraint and ground set sizes differ");
  const auto candidates = mode == PlanValueMode::exact ? enumerate_maximal_feasible(c)
                                                       : enumerate_feasible_sets(c);
  OptNonadaptiveResult best;
  bool have = false;
  for (const auto& fs : candidates) {
    const ProbePlan plan{fs.order};
    const double v = mode == PlanValueMode::exact ? plan_value(plan, f, g)
                                                  : plan_value_surrogate(plan, f, g);
    if (!have || v > best.value) {
      best = {v, plan};
      have = true;
    }
  }
  if (!have) best.value = f.eval(Subset::none());
  return best;
}

double natural_nonadaptive(const StrategyTree& t, const SetFunction& f, const GroundSet& g) {
  return alg_value(t, f, g);
}

GreedyResult greedy_nonadaptive(const SetFunction& f, const GroundSet& g,
                                const ConstraintAutomaton& c) {
  check_sizes(f, g, "greedy_nonadaptive");
  if (f.fn_class() != FnClass::monotone_submodular)
    throw PreconditionError("greedy_nonadaptive: objective must be monotone submodular");
  if (c.kind() != ConstraintKind::cardinality && c.kind() != ConstraintKind::partition_matroid)
    throw PreconditionError(
        "greedy_nonadaptive: constraint must be cardinality or partition matroid");

  GreedyResult result;
  CState state = c.initial();
  Subset chosen;
  double current = 0.0;
  while (true) {
    const auto cand = feasible_next(c, state, chosen);
    if (cand.empty()) break;
    int best_e = -1;
    double best_v = current;
    for (int e : cand) {
      ProbePlan trial{chosen.with(e).to_vector()};
      const double v = plan_value(trial, f, g);
      if (best_e < 0 || v > best_v) {
        best_v = v;
        best_e = e;
      }
    }
    chosen = chosen.with(best_e);
    result.plan.order.push_back(best_e);
    state = *c.step(state, best_e);
    current = best_v;
  }
  result.value = current;
  return result;
}

double xos_lambda_analysis(int width) {
  if (width < 1) throw PreconditionError("xos_lambda_analysis: width must be positive");
  return 1e3 * std::log((double)width);
}

double xos_lambda_desk(int width) {
  if (width < 1) throw PreconditionError("xos_lambda_desk: width must be positive");
  return std::max(2.0 * std::log((double)width), std::log(2.0));
}

XosAlg1Result xos_algorithm1(const XosFunction& f, const GroundSet& g,
                             const ConstraintAutomaton& c, double lambda) {
  check_sizes(f, g, "xos_algorithm1");
  if (c.n() != g.size())
    throw PreconditionError("xos_algorithm1: constraint and ground set sizes differ");
  if (!(lambda > 0.0)) throw PreconditionError("xos_algorithm1: lambda must be positive");

  const int n = g.size();
  const int width = f.width();

  // m = max_e p_e * max_i a_i(e), the best single-element expectation.
  double m = 0.0;
  for (int e = 0; e < n; ++e) m = std::max(m, g.p(e) * f.max_coef(e));

  struct Candidate {
    OracleResult oracle;
    double score;
  };
  std::vector<Candidate> candidates;
  int calls = 0;

  // One oracle call per linear row on the expected weights c_i(e) = p_e * a_i(e).
  for (int i = 0; i < width; ++i) {
    std::vector<double> w(n);
    for (int e = 0; e < n; ++e) w[e] = g.p(e) * f.coef(i, e);
    auto r = linear_oracle(c, w);
    ++calls;
    const double score = r.value;
    candidates.push_back({std::move(r), score});
  }

  // Threshold buckets theta_j = 2^j * m / lambda for j = 0 .. 1 + ceil(log2 n):
  // weight p_e for elements whose best coefficient clears theta_j, score
  // theta_j * min(total expected count, 1).
  const int log_n = n <= 1 ? 0 : (int)std::bit_width(std::uint32_t(n - 1));
  for (int j = 0; j <= 1 + log_n; ++j) {
    const double theta = std::ldexp(m, j) / lambda;
    std::vector<double> w(n, 0.0);
    for (int e = 0; e < n; ++e)
      if (f.max_coef(e) >= theta) w[e] = g.p(e);
    auto r = linear_oracle(c, w);
    ++calls;
    const double score = theta * std::min(r.value, 1.0);
    candidates.push_back({std::move(r), score});
  }

  // First maximizer in candidate order (rows first, then buckets).
  std::size_t winner = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].score > candidates[winner].score) winner = i;

  XosAlg1Result result;
  result.plan.order = candidates[winner].oracle.order;
  result.surrogate_value = candidates[winner].score;
  result.oracle_calls = calls;
  result.value = plan_value(result.plan, f, g);
  return result;
}

}  // namespace probing
