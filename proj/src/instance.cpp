#include "probing/instance.hpp"

#include <algorithm>
#include <cmath>

#include "probing/rng.hpp"

namespace probing {

VerifyResult audit_instance(const Instance& inst) {
  if (!inst.objective || !inst.constraint)
    throw PreconditionError("audit_instance: missing objective or constraint");
  if (inst.objective->n() != inst.ground.size())
    throw PreconditionError("audit_instance: objective size mismatch");
  if (inst.constraint->n() != inst.ground.size())
    throw PreconditionError("audit_instance: constraint size mismatch");
  if (dynamic_cast<const ContractedFunction*>(inst.objective.get()))
    throw PreconditionError("audit_instance: contracted objectives are internal-only");
  if (inst.ground.size() > kMaxVerifyN) return {};
  return audit_fn_class(*inst.objective);
}

Instance gen_partition_lb(int k, int part_size, double p, int budget) {
  if (k < 1 || part_size < 1) throw PreconditionError("gen_partition_lb: bad shape");
  const int n = k * part_size;
  if (n > kMaxGroundSize) throw PreconditionError("gen_partition_lb: ground set too large");
  std::vector<int> parts(n);
  for (int e = 0; e < n; ++e) parts[e] = e / part_size;
  Instance inst{
      GroundSet(n, p),
      std::make_shared<PartitionRankFunction>(parts, std::vector<int>(k, 1)),
      std::make_shared<CardinalityConstraint>(n, budget),
      {"partition_lb",
       0,
       {{"k", (double)k}, {"part_size", (double)part_size}, {"p", p}, {"budget", (double)budget}}}};
  return inst;
}

Instance gen_partition_lb(int k) {
  return gen_partition_lb(k, k * k, 1.0 / k, k * k);
}

Instance gen_xos_tree_lb(int k, int depth, XosTreeVariant variant) {
  // The witness automaton also carries the tree geometry (edge indexing,
  // per-leaf paths), so build it first even for the cardinality variant.
  const auto witness = std::make_shared<PathWitnessConstraint>(k, depth);
  const int n = witness->n();
  std::vector<std::vector<double>> rows(witness->num_leaves(), std::vector<double>(n, 0.0));
  for (int l = 0; l < witness->num_leaves(); ++l)
    for_each_element(witness->leaf_path(l), [&](int e) { rows[l][e] = 1.0; });

  ConstraintPtr constraint = witness;
  if (variant == XosTreeVariant::cardinality)
    constraint = std::make_shared<CardinalityConstraint>(n, k * k);

  Instance inst{GroundSet(n, 1.0 / k),
                std::make_shared<XosFunction>(std::move(rows)),
                std::move(constraint),
                {"xos_tree_lb",
                 0,
                 {{"k", (double)k},
                  {"depth", (double)depth},
                  {"variant", variant == XosTreeVariant::path_witness ? 0.0 : 1.0}}}};
  return inst;
}

Instance gen_alltypes_lb(int k, int copies, double p, int budget) {
  if (k < 1 || copies < 1) throw PreconditionError("gen_alltypes_lb: bad shape");
  const int n = k * copies;
  if (n > kMaxGroundSize) throw PreconditionError("gen_alltypes_lb: ground set too large");
  std::vector<int> types(n);
  for (int e = 0; e < n; ++e) types[e] = e / copies;
  Instance inst{GroundSet(n, p),
                std::make_shared<AllTypesFunction>(types),
                std::make_shared<CardinalityConstraint>(n, budget),
                {"alltypes_lb",
                 0,
                 {{"k", (double)k}, {"copies", (double)copies}, {"p", p}, {"budget", (double)budget}}}};
  return inst;
}

Instance gen_alltypes_lb(int k) {
  return gen_alltypes_lb(k, k, 0.5, 4 * k);
}

namespace {

int default_budget(int n, int budget) {
  return budget >= 0 ? budget : std::max(1, n / 2);
}

std::vector<double> random_probs(Rng& rng, int n) {
  std::vector<double> p(n);
  for (double& x : p) x = rng.uniform(0.2, 0.9);
  return p;
}

}  // namespace

Instance gen_random_coverage(int n, std::uint64_t seed, int budget) {
  if (n < 1 || n > kMaxGroundSize) throw PreconditionError("gen_random_coverage: bad n");
  Rng rng = Rng(seed).split(0x636f76);
  const int items = 2 * n;
  std::vector<double> weights(items);
  for (double& w : weights) w = rng.uniform(0.5, 1.5);
  std::vector<std::vector<int>> element_items(n);
  for (int e = 0; e < n; ++e) {
    for (int it = 0; it < items; ++it)
      if (rng.bernoulli(0.3)) element_items[e].push_back(it);
    if (element_items[e].empty()) element_items[e].push_back((int)rng.below(items));
  }
  const int k = default_budget(n, budget);
  Instance inst{GroundSet(random_probs(rng, n)),
                std::make_shared<CoverageFunction>(std::move(weights), element_items),
                std::make_shared<CardinalityConstraint>(n, k),
                {"random_coverage", seed, {{"n", (double)n}, {"budget", (double)k}}}};
  return inst;
}

Instance gen_random_cut(int n, std::uint64_t seed, int budget) {
  if (n < 2 || n > kMaxGroundSize) throw PreconditionError("gen_random_cut: bad n");
  Rng rng = Rng(seed).split(0x637574);
  std::vector<CutFunction::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(0.5)) edges.push_back({u, v, rng.uniform(0.5, 1.5)});
  if (edges.empty()) edges.push_back({0, 1, rng.uniform(0.5, 1.5)});
  const int k = default_budget(n, budget);
  Instance inst{GroundSet(random_probs(rng, n)),
                std::make_shared<CutFunction>(n, std::move(edges)),
                std::make_shared<CardinalityConstraint>(n, k),
                {"random_cut", seed, {{"n", (double)n}, {"budget", (double)k}}}};
  return inst;
}

Instance gen_random_xos(int n, int width, std::uint64_t seed, int budget) {
  if (n < 1 || n > kMaxGroundSize) throw PreconditionError("gen_random_xos: bad n");
  if (width < 1) throw PreconditionError("gen_random_xos: bad width");
  Rng rng = Rng(seed).split(0x786f73);
  std::vector<std::vector<double>> rows(width, std::vector<double>(n, 0.0));
  for (auto& row : rows) {
    bool any = false;
    for (double& a : row)
      if (!rng.bernoulli(0.4)) {
        a = rng.uniform(0.1, 1.0);
        any = true;
      }
    if (!any) row[rng.below(n)] = rng.uniform(0.1, 1.0);
  }
  const int k = default_budget(n, budget);
  Instance inst{GroundSet(random_probs(rng, n)),
                std::make_shared<XosFunction>(std::move(rows)),
                std::make_shared<CardinalityConstraint>(n, k),
                {"random_xos", seed, {{"n", (double)n}, {"width", (double)width}, {"budget", (double)k}}}};
  return inst;
}

}  // namespace probing
