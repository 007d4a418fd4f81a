#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "probing/adaptive.hpp"
#include "probing/constraint.hpp"
#include "probing/ground_set.hpp"
#include "probing/nonadaptive.hpp"
#include "probing/set_function.hpp"
#include "probing/verify.hpp"

namespace probing {

struct InstanceMeta {
  std::string family;
  std::uint64_t seed = 0;
  // Generator parameters, recorded for reproducibility.
  std::vector<std::pair<std::string, double>> params;
};

// One stochastic-probing problem: ground set with activation probabilities,
// objective, and a prefix-closed probing constraint.
struct Instance {
  GroundSet ground;
  SetFunctionPtr objective;
  ConstraintPtr constraint;
  InstanceMeta meta;

  int n() const { return ground.size(); }
};

// Consistency checks every instance must pass (sizes agree, objective
// non-negative where exhaustively checkable) plus a class-tag audit at
// small n. Throws PreconditionError on structural mismatch; returns the
// audit result otherwise.
VerifyResult audit_instance(const Instance& inst);

// Partition lower-bound family: k parts of part_size elements, partition
// rank objective with unit caps, cardinality budget. Paper preset:
// part_size = k^2, p = 1/k, budget = k^2 (gap trend e/(e-1)).
Instance gen_partition_lb(int k, int part_size, double p, int budget);
Instance gen_partition_lb(int k);

enum class XosTreeVariant { path_witness, cardinality };

// Tree lower-bound family: ground set = edges of a complete k-ary tree of
// the given depth, p_e = 1/k, XOS objective with one indicator row per
// root-leaf path, and either the path-witness constraint on the same tree
// or a cardinality budget of k^2 probes.
Instance gen_xos_tree_lb(int k, int depth, XosTreeVariant variant);

// All-types family: k types with `copies` elements each, probability p,
// all-types objective, cardinality budget. Paper preset: copies = k,
// p = 1/2, budget = 4k (gap grows like (16/15)^k).
Instance gen_alltypes_lb(int k, int copies, double p, int budget);
Instance gen_alltypes_lb(int k);

// Random desk-scale instances, deterministic in the seed. budget < 0 picks
// the default cardinality budget max(1, n/2).
Instance gen_random_coverage(int n, std::uint64_t seed, int budget = -1);
Instance gen_random_cut(int n, std::uint64_t seed, int budget = -1);
Instance gen_random_xos(int n, int width, std::uint64_t seed, int budget = -1);

// Instance-level conveniences.
inline OptAdaptiveResult opt_adaptive(const Instance& inst, OptAdaptiveOptions opts = {}) {
  return opt_adaptive(inst.ground, *inst.objective, *inst.constraint, opts);
}
inline OptNonadaptiveResult opt_nonadaptive(const Instance& inst,
                                            PlanValueMode mode = PlanValueMode::exact) {
  return opt_nonadaptive(*inst.objective, inst.ground, *inst.constraint, mode);
}
inline StrategyTree random_tree(const Instance& inst, std::uint64_t seed, int max_nodes) {
  return random_tree(*inst.constraint, seed, max_nodes);
}

}  // namespace probing
