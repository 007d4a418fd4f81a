#pragma once

#include <cstdint>

#include "probing/constraint.hpp"
#include "probing/fmax.hpp"
#include "probing/ground_set.hpp"
#include "probing/set_function.hpp"
#include "probing/strategy_tree.hpp"

namespace probing {

// The adaptive DP handles at most this many elements (memo over
// (state, probed, active) triples grows like 3^n).
inline constexpr int kMaxAdaptiveN = 14;

// Expected value of running the tree: walk from the root, branch on each
// probe's outcome, collect f^max of the active set at the leaf.
double adap_value(const StrategyTree& t, const SetFunction& f, const GroundSet& g);

// Online variant: each probed element that comes up active is kept
// independently with probability keep_prob, and the leaf scores f of the
// kept set (not f^max). keep_prob = 1 with monotone f recovers adap_value.
double adap_online_value(const StrategyTree& t, const SetFunction& f, const GroundSet& g,
                         double keep_prob = 0.5);

// Value of the non-adaptive mimic: draw a leaf from the tree's own path
// measure, then probe that leaf's path elements with fresh independent
// activations and collect f^max of what comes up.
double alg_value(const StrategyTree& t, const SetFunction& f, const GroundSet& g);

struct OptAdaptiveOptions {
  std::size_t state_budget = std::size_t{1} << 23;
};

struct OptAdaptiveResult {
  double value = 0.0;
  StrategyTree tree;
  std::size_t states_explored = 0;
};

// Exact optimal adaptive strategy by memoized DP over (constraint state,
// probed set, active set) with an explicit stop action. Ties prefer
// stopping, then the lowest element index. The returned tree re-evaluates
// to exactly the DP value.
OptAdaptiveResult opt_adaptive(const GroundSet& g, const SetFunction& f,
                               const ConstraintAutomaton& c, OptAdaptiveOptions opts = {});

// Random valid tree: recursive descent picking a uniform feasible element,
// stopping early at random, spending at most max_nodes internal nodes.
// Deterministic in the seed; max_nodes = 0 gives a single leaf.
StrategyTree random_tree(const ConstraintAutomaton& c, std::uint64_t seed, int max_nodes);

}  // namespace probing
