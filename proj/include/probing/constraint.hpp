#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "probing/bitset.hpp"
#include "probing/errors.hpp"

namespace probing {

// Automaton state. Families pack what they need into two words; for
// budget-path b carries the bit pattern of the accumulated distance.
struct CState {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(CState x, CState y) { return x.a == y.a && x.b == y.b; }
};

struct CStateHash {
  std::size_t operator()(CState s) const {
    std::uint64_t z = s.a * 0x9e3779b97f4a7c15ull;
    z ^= z >> 29;
    return std::size_t(z ^ (s.b * 0xbf58476d1ce4e5b9ull));
  }
};

enum class ConstraintKind { cardinality, partition_matroid, path_witness, prefix_dag, budget_path };

const char* to_string(ConstraintKind k);

// Prefix-closed probing constraint as a deterministic automaton over probe
// sequences: a sequence is feasible iff every step is accepted from the
// initial state. Immutable; step is pure.
class ConstraintAutomaton {
 public:
  virtual ~ConstraintAutomaton() = default;
  virtual int n() const = 0;
  virtual ConstraintKind kind() const = 0;
  // True when feasibility of a sequence depends only on its element set.
  virtual bool order_independent() const = 0;
  virtual CState initial() const = 0;
  // nullopt = probing e now is not allowed.
  virtual std::optional<CState> step(CState s, int e) const = 0;
};

using ConstraintPtr = std::shared_ptr<const ConstraintAutomaton>;

// At most k probes.
class CardinalityConstraint final : public ConstraintAutomaton {
 public:
  CardinalityConstraint(int n, int k);
  int n() const override { return n_; }
  ConstraintKind kind() const override { return ConstraintKind::cardinality; }
  bool order_independent() const override { return true; }
  CState initial() const override { return {}; }
  std::optional<CState> step(CState s, int e) const override;
  int k() const { return k_; }

 private:
  int n_, k_;
};

// At most cap_p probes inside part p.
class PartitionMatroidConstraint final : public ConstraintAutomaton {
 public:
  PartitionMatroidConstraint(std::vector<int> parts, std::vector<int> capacities);
  int n() const override { return (int)parts_.size(); }
  ConstraintKind kind() const override { return ConstraintKind::partition_matroid; }
  bool order_independent() const override { return true; }
  CState initial() const override { return {}; }
  std::optional<CState> step(CState s, int e) const override;
  const std::vector<int>& parts() const { return parts_; }
  const std::vector<int>& capacities() const { return caps_; }

 private:
  std::vector<int> parts_;
  std::vector<int> caps_;
};

// Ground set = edges of a complete arity^depth rooted tree (breadth-first
// edge indexing). A probe set is feasible iff some root-leaf path witnesses
// it: every probed edge must touch a vertex of that path. State = bit mask
// of still-viable witness leaves.
class PathWitnessConstraint final : public ConstraintAutomaton {
 public:
  PathWitnessConstraint(int arity, int depth);
  int n() const override { return n_; }
  ConstraintKind kind() const override { return ConstraintKind::path_witness; }
  bool order_independent() const override { return true; }
  CState initial() const override;
  std::optional<CState> step(CState s, int e) const override;

  int arity() const { return arity_; }
  int depth() const { return depth_; }
  int num_leaves() const { return (int)leaf_edges_.size(); }
  // Edges lying on the root-leaf path of leaf l.
  Subset leaf_path(int l) const { return leaf_edges_[l]; }
  // Edges touching a vertex of that path (the probe-able set under leaf l).
  Subset leaf_allowed(int l) const { return leaf_allowed_[l]; }
  // Parent edge of edge e, or -1 for a root edge.
  int parent_edge(int e) const { return parent_edge_[e]; }

 private:
  int arity_, depth_, n_;
  std::vector<Subset> leaf_edges_;
  std::vector<Subset> leaf_allowed_;
  std::vector<std::uint64_t> edge_witnesses_;
  std::vector<int> parent_edge_;
};

// Explicit trie of feasible probe sequences: node 0 is the root, an edge
// labelled e moves to a child. The language is prefix-closed by shape.
class PrefixDagConstraint final : public ConstraintAutomaton {
 public:
  // children[v] maps element -> child node.
  PrefixDagConstraint(int n, std::vector<std::map<int, int>> children);
  int n() const override { return n_; }
  ConstraintKind kind() const override { return ConstraintKind::prefix_dag; }
  bool order_independent() const override { return false; }
  CState initial() const override { return {}; }
  std::optional<CState> step(CState s, int e) const override;
  const std::vector<std::map<int, int>>& children() const { return children_; }

 private:
  int n_;
  std::vector<std::map<int, int>> children_;
};

// Walk constraint on a metric of n element locations plus a start vertex
// (index n): the walk visiting the probed elements in probe order, starting
// at the start vertex, must have total length <= budget. Order matters.
class BudgetPathConstraint final : public ConstraintAutomaton {
 public:
  // dist is (n+1) x (n+1), symmetric, zero diagonal, non-negative.
  BudgetPathConstraint(std::vector<std::vector<double>> dist, double budget);
  int n() const override { return n_; }
  ConstraintKind kind() const override { return ConstraintKind::budget_path; }
  bool order_independent() const override { return false; }
  CState initial() const override;
  std::optional<CState> step(CState s, int e) const override;
  double budget() const { return budget_; }
  const std::vector<std::vector<double>>& distances() const { return dist_; }

 private:
  int n_;
  std::vector<std::vector<double>> dist_;
  double budget_;
};

}  // namespace probing
