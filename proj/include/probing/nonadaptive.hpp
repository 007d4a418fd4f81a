#pragma once

#include <optional>
#include <vector>

#include "probing/constraint.hpp"
#include "probing/ground_set.hpp"
#include "probing/oracle.hpp"
#include "probing/set_function.hpp"
#include "probing/strategy_tree.hpp"

namespace probing {

// A fixed probe sequence, committed before any outcome is seen.
struct ProbePlan {
  std::vector<int> order;
  Subset set() const {
    Subset s;
    for (int e : order) s = s.with(e);
    return s;
  }
};

// Exact E[f^max(A intersect plan)] over independent activations of the
// plan's elements. Monotone in the plan set for every f.
double plan_value(const ProbePlan& plan, const SetFunction& f, const GroundSet& g);

// Half-sampling surrogate: E[f(A intersect plan intersect R)] with R an
// independent 1/2-thinning, i.e. f evaluated on a p/2 activation. Within a
// factor 4 of plan_value for non-negative submodular f; not monotone in
// the plan, so optimizing it scans every feasible set.
double plan_value_surrogate(const ProbePlan& plan, const SetFunction& f, const GroundSet& g);

enum class PlanValueMode { exact, surrogate };

struct OptNonadaptiveResult {
  double value = 0.0;
  ProbePlan plan;
};

// Best feasible plan. Exact mode scans maximal feasible sets (sufficient
// because plan_value is monotone in the plan set); surrogate mode scans
// every feasible set.
OptNonadaptiveResult opt_nonadaptive(const SetFunction& f, const GroundSet& g,
                                     const ConstraintAutomaton& c,
                                     PlanValueMode mode = PlanValueMode::exact);

// The natural non-adaptive strategy extracted from a tree: sample a leaf
// by the tree's own path measure and probe its path. Same quantity as
// alg_value; re-exported under the name the comparison tables use.
double natural_nonadaptive(const StrategyTree& t, const SetFunction& f, const GroundSet& g);

struct GreedyResult {
  double value = 0.0;
  ProbePlan plan;
};

// Greedy plan construction for monotone submodular objectives under
// cardinality or partition constraints: repeatedly add the feasible element
// with the largest plan_value gain (ties to the lowest index).
GreedyResult greedy_nonadaptive(const SetFunction& f, const GroundSet& g,
                                const ConstraintAutomaton& c);

struct XosAlg1Result {
  double value = 0.0;  // true plan_value of the winning candidate
  ProbePlan plan;
  int oracle_calls = 0;
  double surrogate_value = 0.0;  // the v(.) score the winner was chosen by
};

// Threshold-bucketed oracle algorithm for XOS objectives: one oracle call
// per linear row on expected weights p_e * a_i(e), plus one per power-of-two
// threshold bucket on the large-coefficient indicator weights, returning
// the candidate with the best surrogate score. Exactly
// width + ceil(log2 n) + 2 oracle calls.
XosAlg1Result xos_algorithm1(const XosFunction& f, const GroundSet& g,
                             const ConstraintAutomaton& c, double lambda);

// The scale parameter used in the analysis (10^3 ln W) and the desk preset
// (2 ln W, clamped to ln 2 so width-1 instances stay well-defined).
double xos_lambda_analysis(int width);
double xos_lambda_desk(int width);

}  // namespace probing
