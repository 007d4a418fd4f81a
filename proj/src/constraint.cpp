#include "probing/constraint.hpp"

#include <bit>
#include <cmath>

namespace probing {

const char* to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::cardinality:
      return "cardinality";
    case ConstraintKind::partition_matroid:
      return "partition_matroid";
    case ConstraintKind::path_witness:
      return "path_witness";
    case ConstraintKind::prefix_dag:
      return "prefix_dag";
    case ConstraintKind::budget_path:
      return "budget_path";
  }
  return "?";
}

CardinalityConstraint::CardinalityConstraint(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxGroundSize) throw PreconditionError("cardinality: n out of range");
  if (k < 0) throw PreconditionError("cardinality: negative budget");
}

std::optional<CState> CardinalityConstraint::step(CState s, int e) const {
  if (e < 0 || e >= n_) throw PreconditionError("cardinality: element out of range");
  if ((int)s.a >= k_) return std::nullopt;
  return CState{s.a + 1, 0};
}

PartitionMatroidConstraint::PartitionMatroidConstraint(std::vector<int> parts,
                                                       std::vector<int> capacities)
    : parts_(std::move(parts)), caps_(std::move(capacities)) {
  if ((int)parts_.size() > kMaxGroundSize)
    throw PreconditionError("partition_matroid: too many elements");
  if (caps_.size() > 16) throw PreconditionError("partition_matroid: more than 16 parts");
  for (int p : parts_)
    if (p < 0 || p >= (int)caps_.size())
      throw PreconditionError("partition_matroid: part label out of range");
  for (int c : caps_)
    if (c < 0 || c > 15) throw PreconditionError("partition_matroid: capacity outside [0,15]");
}

std::optional<CState> PartitionMatroidConstraint::step(CState s, int e) const {
  if (e < 0 || e >= n()) throw PreconditionError("partition_matroid: element out of range");
  const int shift = 4 * parts_[e];
  const std::uint64_t used = (s.a >> shift) & 0xF;
  if ((int)used >= caps_[parts_[e]]) return std::nullopt;
  return CState{s.a + (std::uint64_t{1} << shift), 0};
}

PathWitnessConstraint::PathWitnessConstraint(int arity, int depth)
    : arity_(arity), depth_(depth) {
  if (arity < 1) throw PreconditionError("path_witness: arity must be at least 1");
  if (depth < 1) throw PreconditionError("path_witness: depth must be at least 1");
  // Vertices in heap order: root 0, children of v are arity*v + 1..arity.
  // Edge e leads into vertex e+1, so BFS edge order matches vertex order.
  std::int64_t vertices = 1, level = 1;
  for (int i = 1; i <= depth; ++i) {
    level *= arity;
    vertices += level;
  }
  n_ = (int)(vertices - 1);
  if (n_ > kMaxGroundSize) throw PreconditionError("path_witness: tree has too many edges");
  const int leaves = (int)level;
  if (leaves > 64) throw PreconditionError("path_witness: more than 64 leaves");

  parent_edge_.resize(n_);
  for (int e = 0; e < n_; ++e) {
    const int pv = (e + 1 - 1) / arity;  // parent vertex of vertex e+1
    parent_edge_[e] = pv == 0 ? -1 : pv - 1;
  }

  const int first_leaf_vertex = (int)(vertices - leaves);
  leaf_edges_.resize(leaves);
  leaf_allowed_.resize(leaves);
  edge_witnesses_.assign(n_, 0);
  for (int l = 0; l < leaves; ++l) {
    Subset path = Subset::none();
    std::uint32_t path_vertices = 1;  // root
    for (int v = first_leaf_vertex + l; v != 0; v = (v - 1) / arity_) {
      path = path.with(v - 1);
      path_vertices |= std::uint32_t{1} << v;
    }
    leaf_edges_[l] = path;
    Subset allowed = path;
    for (int e = 0; e < n_; ++e) {
      const int pv = (e + 1 - 1) / arity_;
      if ((path_vertices >> pv) & 1u) allowed = allowed.with(e);
    }
    leaf_allowed_[l] = allowed;
    for_each_element(allowed, [&](int e) { edge_witnesses_[e] |= std::uint64_t{1} << l; });
  }
}

CState PathWitnessConstraint::initial() const {
  const int leaves = num_leaves();
  return {leaves == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << leaves) - 1, 0};
}

std::optional<CState> PathWitnessConstraint::step(CState s, int e) const {
  if (e < 0 || e >= n_) throw PreconditionError("path_witness: element out of range");
  const std::uint64_t surviving = s.a & edge_witnesses_[e];
  if (surviving == 0) return std::nullopt;
  return CState{surviving, 0};
}

PrefixDagConstraint::PrefixDagConstraint(int n, std::vector<std::map<int, int>> children)
    : n_(n), children_(std::move(children)) {
  if (n < 0 || n > kMaxGroundSize) throw PreconditionError("prefix_dag: n out of range");
  if (children_.empty()) throw PreconditionError("prefix_dag: needs a root node");
  for (int v = 0; v < (int)children_.size(); ++v)
    for (const auto& [elt, child] : children_[v]) {
      if (elt < 0 || elt >= n) throw PreconditionError("prefix_dag: element out of range");
      // Topological numbering keeps every sequence finite.
      if (child <= v || child >= (int)children_.size())
        throw PreconditionError("prefix_dag: child index must increase and stay in range");
    }
}

std::optional<CState> PrefixDagConstraint::step(CState s, int e) const {
  const auto& kids = children_[s.a];
  const auto it = kids.find(e);
  if (it == kids.end()) return std::nullopt;
  return CState{std::uint64_t(it->second), 0};
}

BudgetPathConstraint::BudgetPathConstraint(std::vector<std::vector<double>> dist, double budget)
    : dist_(std::move(dist)), budget_(budget) {
  n_ = (int)dist_.size() - 1;
  if (n_ < 0 || n_ > kMaxGroundSize) throw PreconditionError("budget_path: bad matrix size");
  if (!(budget >= 0.0)) throw PreconditionError("budget_path: negative budget");
  for (int i = 0; i <= n_; ++i) {
    if ((int)dist_[i].size() != n_ + 1) throw PreconditionError("budget_path: ragged matrix");
    if (dist_[i][i] != 0.0) throw PreconditionError("budget_path: nonzero diagonal");
    for (int j = 0; j <= n_; ++j) {
      if (dist_[i][j] < 0.0) throw PreconditionError("budget_path: negative distance");
      if (dist_[i][j] != dist_[j][i]) throw PreconditionError("budget_path: asymmetric matrix");
    }
  }
}

CState BudgetPathConstraint::initial() const {
  return {std::uint64_t(n_), std::bit_cast<std::uint64_t>(0.0)};
}

std::optional<CState> BudgetPathConstraint::step(CState s, int e) const {
  if (e < 0 || e >= n_) throw PreconditionError("budget_path: element out of range");
  const double used = std::bit_cast<double>(s.b);
  const double next = used + dist_[s.a][e];
  if (next > budget_) return std::nullopt;
  return CState{std::uint64_t(e), std::bit_cast<std::uint64_t>(next)};
}

}  // namespace probing
