#pragma once

#include <vector>

#include "probing/constraint.hpp"
#include "probing/ground_set.hpp"

namespace probing {

// Binary decision tree over probe outcomes: an internal node probes an
// element and branches on active (yes) / inactive (no); a leaf stops.
// Stored as an arena of nodes; immutable once built.
class StrategyTree {
 public:
  struct Node {
    int elt = -1;  // -1 marks a leaf
    int yes = -1;
    int no = -1;
    bool leaf() const { return elt < 0; }
  };

  // A single leaf (the empty strategy).
  StrategyTree() { nodes_.push_back(Node{}); }

  int root() const { return root_; }
  const Node& node(int v) const { return nodes_[v]; }
  int size() const { return (int)nodes_.size(); }

  int add_leaf() {
    nodes_.push_back(Node{});
    return (int)nodes_.size() - 1;
  }
  int add_internal(int elt, int yes, int no) {
    nodes_.push_back(Node{elt, yes, no});
    return (int)nodes_.size() - 1;
  }
  void set_root(int v) { root_ = v; }

 private:
  std::vector<Node> nodes_;
  int root_ = 0;
};

// Throws StructuralError unless every node index is in range, no element
// repeats on a root-leaf path, and every probe sequence along the tree is
// accepted by the automaton.
void validate_tree(const StrategyTree& t, const ConstraintAutomaton& c);

// Same checks minus the automaton (for trees evaluated without a
// constraint).
void validate_tree_shape(const StrategyTree& t, int n);

// The all-no spine: internal nodes reached by always taking the no-arc,
// plus the leaf that terminates it. Subtrees hang off the yes-arcs.
struct StemView {
  std::vector<int> nodes;
  int terminal_leaf = -1;
  std::vector<int> elements(const StrategyTree& t) const {
    std::vector<int> out;
    out.reserve(nodes.size());
    for (int v : nodes) out.push_back(t.node(v).elt);
    return out;
  }
};

StemView stem(const StrategyTree& t);

// Maximum number of yes-arcs on any root-leaf path.
int deepness(const StrategyTree& t);

}  // namespace probing
