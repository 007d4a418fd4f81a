#include "probing/strategy_tree.hpp"

#include <algorithm>

namespace probing {

namespace {

void walk_validate(const StrategyTree& t, int v, Subset probed, int n, const ConstraintAutomaton* c,
                   CState state) {
  if (v < 0 || v >= t.size()) throw StructuralError("strategy tree: node index out of range");
  const auto& node = t.node(v);
  if (node.leaf()) return;
  if (node.elt >= n) throw StructuralError("strategy tree: element out of range");
  if (probed.contains(node.elt))
    throw StructuralError("strategy tree: element repeated on a root-leaf path");
  CState next_state = state;
  if (c) {
    const auto next = c->step(state, node.elt);
    if (!next)
      throw StructuralError("strategy tree: probe sequence rejected by the constraint");
    next_state = *next;
  }
  walk_validate(t, node.yes, probed.with(node.elt), n, c, next_state);
  walk_validate(t, node.no, probed.with(node.elt), n, c, next_state);
}

}  // namespace

void validate_tree(const StrategyTree& t, const ConstraintAutomaton& c) {
  walk_validate(t, t.root(), Subset::none(), c.n(), &c, c.initial());
}

void validate_tree_shape(const StrategyTree& t, int n) {
  walk_validate(t, t.root(), Subset::none(), n, nullptr, CState{});
}

StemView stem(const StrategyTree& t) {
  StemView view;
  int v = t.root();
  while (!t.node(v).leaf()) {
    view.nodes.push_back(v);
    v = t.node(v).no;
  }
  view.terminal_leaf = v;
  return view;
}

int deepness(const StrategyTree& t) {
  auto walk = [&](auto&& self, int v) -> int {
    const auto& node = t.node(v);
    if (node.leaf()) return 0;
    return std::max(1 + self(self, node.yes), self(self, node.no));
  };
  return walk(walk, t.root());
}

}  // namespace probing
