#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "probing/instance.hpp"
#include "probing/strategy_tree.hpp"

namespace probing {

// Geometric-decay inequality behind the stem analysis: for a_i in [0,1],
// b_i = 1 - a_i,
//   sum_i a_i (prod_{j<i} b_j)^2  >=  1/2 sum_i a_i prod_{j<i} b_j.
struct StemInequalityResult {
  double lhs = 0.0;
  double rhs = 0.0;  // already includes the factor 1/2
  bool holds = true;
};
StemInequalityResult stem_inequality(const std::vector<double>& a, double tol = 1e-12);

// Stem mass lemma: walk down a stem of elements with exit probabilities
// p_i and values f_i; I is the first active element (or none). Fresh
// independent re-activation R of the first-I elements satisfies
//   E[max_{e_j in R} f(e_j)] >= 1/2 E[f(e_I)].
// Both sides are computed twice: by the level-set closed forms evaluated
// as finite sums over sorted distinct values, and by brute-force
// enumeration over (I, R).
struct StemmassResult {
  double lhs_closed = 0.0;
  double lhs_brute = 0.0;
  double exit_mass_closed = 0.0;
  double exit_mass_brute = 0.0;
  bool holds = true;  // lhs >= exit_mass / 2 - tol
};
StemmassResult stemmass_check(const std::vector<double>& probs, const std::vector<double>& values,
                              double tol = 1e-12);

// Sampling lemma for non-negative submodular h with arbitrary h(base):
// a random set S containing each non-base element independently with
// probability at most p satisfies E[h(S | base)] >= (1 - p) h(base).
struct BfnsResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};
BfnsResult bfns_check(const SetFunction& h, Subset base, const std::vector<double>& inclusion_probs,
                      double tol = 1e-9);

// Finite distribution as (value, probability) atoms.
using Atoms = std::vector<std::pair<double, double>>;

// Decoupling fact: for independent non-negative X, Y, Z and an independent
// copy X' of X,  E[max(X+Y, X+Z)] <= E[max(X+Y, X'+Z)].
struct FactResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};
FactResult disjointify_fact_check(const Atoms& x, const Atoms& y, const Atoms& z,
                                  double tol = 1e-12);

// Monte-Carlo check of the per-row concentration claim: sample leaves of
// the tree by its own path measure and count how often the realized row
// value a_i(A_leaf) deviates from the path mean mu_i(P_leaf) by more than
// 0.1 * opt. Deterministic in the seed (fixed block decomposition).
// Reported, never asserted: the claimed 1/W^2 rate needs the truncation
// step that is out of scope here.
struct ConcentrationResult {
  std::vector<double> exceed_freq;  // one entry per XOS row
  int samples = 0;
  double threshold = 0.0;
};
ConcentrationResult concentration_experiment(const Instance& inst, const StrategyTree& t,
                                             int samples, std::uint64_t seed, double opt);

// One row of the adaptive-vs-non-adaptive comparison table.
struct GapReport {
  std::string family;
  int n = 0;
  double adap_opt = 0.0;
  double nonadap_opt = 0.0;
  double natural_nonadaptive = 0.0;
  std::optional<double> greedy;
  std::optional<double> xos_alg1;
  std::optional<int> xos_oracle_calls;
  double gap_ratio = 1.0;  // adap_opt / nonadap_opt, 1 when both are zero
  // 3 for monotone submodular, 40 for submodular, absent otherwise.
  std::optional<double> bound_divisor;
  bool bound_ok = true;
  std::vector<std::string> violations;
  std::uint64_t seed = 0;
  std::size_t dp_states = 0;
  double wall_ms = 0.0;
};

// Runs the exact solvers plus the applicable heuristics on one instance and
// checks the class-conditional factor bounds. lambda <= 0 picks the desk
// preset for the XOS algorithm.
GapReport gap_report(const Instance& inst, double lambda = -1.0);

// Named randomized property suites (the same checks the acceptance gate
// runs, with configurable volume). count <= 0 uses the suite default.
struct SuiteResult {
  std::string suite;
  bool passed = true;
  int checked = 0;
  std::string witness;  // first failure description
};
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count = 0);
std::vector<std::string> suite_names();

}  // namespace probing
