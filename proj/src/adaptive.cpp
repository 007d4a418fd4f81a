#include "probing/adaptive.hpp"

#include <unordered_map>

#include "probing/oracle.hpp"
#include "probing/rng.hpp"

namespace probing {

namespace {

void check_sizes(const SetFunction& f, const GroundSet& g, const char* what) {
  if (f.n() != g.size())
    throw PreconditionError(std::string(what) + ": objective and ground set sizes differ");
}

}  // namespace

double adap_value(const StrategyTree& t, const SetFunction& f, const GroundSet& g) {
  check_sizes(f, g, "adap_value");
  validate_tree_shape(t, g.size());
  FmaxCache cache(f);
  auto walk = [&](auto&& self, int v, Subset active) -> double {
    const auto& node = t.node(v);
    if (node.leaf()) return cache.value(active);
    return g.p(node.elt) * self(self, node.yes, active.with(node.elt)) +
           g.q(node.elt) * self(self, node.no, active);
  };
  return walk(walk, t.root(), Subset::none());
}

double adap_online_value(const StrategyTree& t, const SetFunction& f, const GroundSet& g,
                         double keep_prob) {
  check_sizes(f, g, "adap_online_value");
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0))
    throw PreconditionError("adap_online_value: keep_prob outside [0,1]");
  validate_tree_shape(t, g.size());
  auto walk = [&](auto&& self, int v, Subset kept) -> double {
    const auto& node = t.node(v);
    if (node.leaf()) return f.eval(kept);
    const int e = node.elt;
    const double on_active = keep_prob * self(self, node.yes, kept.with(e)) +
                             (1.0 - keep_prob) * self(self, node.yes, kept);
    return g.p(e) * on_active + g.q(e) * self(self, node.no, kept);
  };
  return walk(walk, t.root(), Subset::none());
}

double alg_value(const StrategyTree& t, const SetFunction& f, const GroundSet& g) {
  check_sizes(f, g, "alg_value");
  validate_tree_shape(t, g.size());
  FmaxCache cache(f);
  // Leaves sharing a path set share the fresh-activation expectation.
  std::unordered_map<std::uint32_t, double> leaf_memo;
  double total = 0.0;
  auto walk = [&](auto&& self, int v, Subset path, double prob) -> void {
    const auto& node = t.node(v);
    if (node.leaf()) {
      auto it = leaf_memo.find(path.bits());
      if (it == leaf_memo.end()) {
        double expectation = 0.0;
        for_each_outcome(path, g, [&](Subset r, double pr) {
          expectation += pr * cache.value(r);
        });
        it = leaf_memo.emplace(path.bits(), expectation).first;
      }
      total += prob * it->second;
      return;
    }
    self(self, node.yes, path.with(node.elt), prob * g.p(node.elt));
    self(self, node.no, path.with(node.elt), prob * g.q(node.elt));
  };
  walk(walk, t.root(), Subset::none(), 1.0);
  return total;
}

namespace {

struct DpKey {
  CState state;
  std::uint64_t sets;  // probed in the high word, active in the low word
  friend bool operator==(const DpKey& x, const DpKey& y) {
    return x.state == y.state && x.sets == y.sets;
  }
};

struct DpKeyHash {
  std::size_t operator()(const DpKey& k) const {
    return CStateHash{}(k.state) ^ Rng::mix64(k.sets);
  }
};

struct DpEntry {
  double value = 0.0;
  int action = -1;  // -1 = stop
};

}  // namespace

OptAdaptiveResult opt_adaptive(const GroundSet& g, const SetFunction& f,
                               const ConstraintAutomaton& c, OptAdaptiveOptions opts) {
  check_sizes(f, g, "opt_adaptive");
  if (c.n() != g.size())
    throw PreconditionError("opt_adaptive: constraint and ground set sizes differ");
  if (g.size() > kMaxAdaptiveN)
    throw StateBudgetError("opt_adaptive: ground set too large for the exact DP");

  std::unordered_map<DpKey, DpEntry, DpKeyHash> memo;
  FmaxCache cache(f);
  const int n = g.size();

  auto solve = [&](auto&& self, CState cs, Subset probed, Subset active) -> double {
    const DpKey key{cs, (std::uint64_t(probed.bits()) << 32) | active.bits()};
    const auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second.value;
    if (memo.size() >= opts.state_budget)
      throw StateBudgetError("opt_adaptive: state budget exceeded");
    DpEntry entry{cache.value(active), -1};
    for (int e = 0; e < n; ++e) {
      if (probed.contains(e)) continue;
      const auto ns = c.step(cs, e);
      if (!ns) continue;
      const double v = g.p(e) * self(self, *ns, probed.with(e), active.with(e)) +
                       g.q(e) * self(self, *ns, probed.with(e), active);
      if (v > entry.value) entry = {v, e};
    }
    memo.emplace(key, entry);
    return entry.value;
  };

  OptAdaptiveResult result;
  result.value = solve(solve, c.initial(), Subset::none(), Subset::none());
  result.states_explored = memo.size();

  auto build = [&](auto&& self, CState cs, Subset probed, Subset active) -> int {
    const DpKey key{cs, (std::uint64_t(probed.bits()) << 32) | active.bits()};
    const auto& entry = memo.at(key);
    if (entry.action < 0) return result.tree.add_leaf();
    const int e = entry.action;
    const CState ns = *c.step(cs, e);
    const int yes = self(self, ns, probed.with(e), active.with(e));
    const int no = self(self, ns, probed.with(e), active);
    return result.tree.add_internal(e, yes, no);
  };
  result.tree.set_root(build(build, c.initial(), Subset::none(), Subset::none()));
  return result;
}

StrategyTree random_tree(const ConstraintAutomaton& c, std::uint64_t seed, int max_nodes) {
  Rng rng(seed);
  StrategyTree t;
  int remaining = max_nodes;
  auto build = [&](auto&& self, CState cs, Subset probed, int depth) -> int {
    if (remaining <= 0) return t.add_leaf();
    const auto cand = feasible_next(c, cs, probed);
    if (cand.empty()) return t.add_leaf();
    if (depth > 0 && rng.bernoulli(0.3)) return t.add_leaf();
    const int e = cand[rng.below((std::uint32_t)cand.size())];
    --remaining;
    const CState ns = *c.step(cs, e);
    const int yes = self(self, ns, probed.with(e), depth + 1);
    const int no = self(self, ns, probed.with(e), depth + 1);
    return t.add_internal(e, yes, no);
  };
  t.set_root(build(build, c.initial(), Subset::none(), 0));
  return t;
}

}  // namespace probing
