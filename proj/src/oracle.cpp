#include "probing/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace probing {

std::vector<int> feasible_next(const ConstraintAutomaton& c, CState s, Subset probed) {
  std::vector<int> out;
  for (int e = 0; e < c.n(); ++e)
    if (!probed.contains(e) && c.step(s, e)) out.push_back(e);
  return out;
}

namespace {

struct VisitKey {
  CState state;
  std::uint32_t probed;
  friend bool operator==(const VisitKey& x, const VisitKey& y) {
    return x.state == y.state && x.probed == y.probed;
  }
};

struct VisitKeyHash {
  std::size_t operator()(const VisitKey& k) const {
    return CStateHash{}(k.state) * 0x100000001b3ull ^ k.probed;
  }
};

}  // namespace

std::vector<FeasibleSet> enumerate_feasible_sets(const ConstraintAutomaton& c,
                                                 std::size_t expansion_limit) {
  if (c.n() > kMaxFeasibleEnumN)
    throw EnumerationLimitError("enumerate_feasible_sets: n exceeds " +
                                std::to_string(kMaxFeasibleEnumN));
  std::unordered_map<std::uint32_t, std::vector<int>> found;
  std::unordered_set<VisitKey, VisitKeyHash> visited;
  std::size_t expansions = 0;
  std::vector<int> order;

  auto dfs = [&](auto&& self, CState state, Subset probed) -> void {
    if (!visited.insert({state, probed.bits()}).second) return;
    found.emplace(probed.bits(), order);
    for (int e = 0; e < c.n(); ++e) {
      if (probed.contains(e)) continue;
      const auto next = c.step(state, e);
      if (!next) continue;
      if (++expansions > expansion_limit)
        throw EnumerationLimitError("enumerate_feasible_sets: expansion limit exceeded");
      order.push_back(e);
      self(self, *next, probed.with(e));
      order.pop_back();
    }
  };
  dfs(dfs, c.initial(), Subset::none());

  std::vector<FeasibleSet> out;
  out.reserve(found.size());
  for (auto& [mask, witness] : found) out.push_back({Subset::of_bits(mask), std::move(witness)});
  std::sort(out.begin(), out.end(),
            [](const FeasibleSet& x, const FeasibleSet& y) { return lex_less(x.set, y.set); });
  return out;
}

std::vector<FeasibleSet> enumerate_maximal_feasible(const ConstraintAutomaton& c,
                                                    std::size_t expansion_limit) {
  auto all = enumerate_feasible_sets(c, expansion_limit);
  std::vector<FeasibleSet> out;
  for (auto& fs : all) {
    bool covered = false;
    for (const auto& other : all)
      if (other.set != fs.set && fs.set.subset_of(other.set)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(std::move(fs));
  }
  return out;
}

namespace {

// Stable selection by (weight desc, index asc), used by the matroid-like
// families. `take` elements from `candidates`.
std::vector<int> top_weight(const std::vector<int>& candidates, const std::vector<double>& w,
                            int take) {
  std::vector<int> sorted = candidates;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  sorted.resize(std::min<std::size_t>(sorted.size(), std::size_t(std::max(take, 0))));
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

OracleResult from_order(const std::vector<int>& order, const std::vector<double>& w) {
  OracleResult r;
  r.order = order;
  for (int e : order) {
    r.set = r.set.with(e);
    r.value += w[e];
  }
  return r;
}

}  // namespace

OracleResult linear_oracle(const ConstraintAutomaton& c, const std::vector<double>& w) {
  if ((int)w.size() != c.n()) throw PreconditionError("linear_oracle: weight size mismatch");
  for (double x : w)
    if (x < 0.0) throw PreconditionError("linear_oracle: negative weight");

  switch (c.kind()) {
    case ConstraintKind::cardinality: {
      const auto& card = dynamic_cast<const CardinalityConstraint&>(c);
      std::vector<int> all(c.n());
      std::iota(all.begin(), all.end(), 0);
      return from_order(top_weight(all, w, card.k()), w);
    }
    case ConstraintKind::partition_matroid: {
      const auto& pm = dynamic_cast<const PartitionMatroidConstraint&>(c);
      std::vector<std::vector<int>> by_part(pm.capacities().size());
      for (int e = 0; e < c.n(); ++e) by_part[pm.parts()[e]].push_back(e);
      std::vector<int> chosen;
      for (std::size_t p = 0; p < by_part.size(); ++p)
        for (int e : top_weight(by_part[p], w, pm.capacities()[p])) chosen.push_back(e);
      std::sort(chosen.begin(), chosen.end());
      return from_order(chosen, w);
    }
    default: {
      OracleResult best;
      bool have = false;
      for (const auto& fs : enumerate_feasible_sets(c)) {
        double v = 0.0;
        for_each_element(fs.set, [&](int e) { v += w[e]; });
        if (!have || v > best.value + 0.0 ||
            (v == best.value && lex_less(fs.set, best.set))) {
          best = {fs.set, fs.order, v};
          have = true;
        }
      }
      return best;
    }
  }
}

}  // namespace probing
