#pragma once

#include <vector>

#include "probing/constraint.hpp"

namespace probing {

// Exhaustive feasible-set enumeration is capped at this ground size.
inline constexpr int kMaxFeasibleEnumN = 14;

// Elements not yet probed that the automaton accepts from state s,
// ascending index order.
std::vector<int> feasible_next(const ConstraintAutomaton& c, CState s, Subset probed);

struct FeasibleSet {
  Subset set;
  // A probe order under which the automaton accepts the set.
  std::vector<int> order;
};

// Every distinct feasible probe set, each with one witnessing order
// (first found in ascending-element DFS). Sorted by lexicographic subset
// order. n <= 14; expansion_limit bounds the DFS for order-sensitive
// families whose state space can blow up.
std::vector<FeasibleSet> enumerate_feasible_sets(const ConstraintAutomaton& c,
                                                 std::size_t expansion_limit = 1u << 24);

// The feasible sets not strictly contained in another feasible set. Every
// feasible set is a subset of some emitted set.
std::vector<FeasibleSet> enumerate_maximal_feasible(const ConstraintAutomaton& c,
                                                    std::size_t expansion_limit = 1u << 24);

struct OracleResult {
  Subset set;
  std::vector<int> order;
  double value = 0.0;
};

// max_{feasible S} sum_{e in S} w_e for non-negative weights. Structured
// families use their canonical selections (cardinality: stable top-k by
// (weight desc, index asc); partition matroid: the same per part); the rest
// scan all feasible sets with lexicographic tie-breaking.
OracleResult linear_oracle(const ConstraintAutomaton& c, const std::vector<double>& w);

}  // namespace probing
