#include "probing/set_function.hpp"

#include <algorithm>
#include <bit>

namespace probing {

const char* to_string(FnClass c) {
  switch (c) {
    case FnClass::monotone_submodular:
      return "monotone_submodular";
    case FnClass::submodular:
      return "submodular";
    case FnClass::xos:
      return "xos";
    case FnClass::arbitrary:
      return "arbitrary";
  }
  return "?";
}

CoverageFunction::CoverageFunction(std::vector<double> item_weights,
                                   const std::vector<std::vector<int>>& element_items)
    : item_weights_(std::move(item_weights)) {
  if ((int)element_items.size() > kMaxGroundSize)
    throw PreconditionError("coverage: too many elements");
  if (item_weights_.size() > 64) throw PreconditionError("coverage: more than 64 items");
  for (double w : item_weights_)
    if (w < 0.0) throw PreconditionError("coverage: negative item weight");
  element_masks_.reserve(element_items.size());
  for (const auto& items : element_items) {
    std::uint64_t m = 0;
    for (int it : items) {
      if (it < 0 || it >= (int)item_weights_.size())
        throw PreconditionError("coverage: item index out of range");
      m |= std::uint64_t{1} << it;
    }
    element_masks_.push_back(m);
  }
}

double CoverageFunction::eval(Subset s) const {
  std::uint64_t covered = 0;
  for_each_element(s, [&](int e) { covered |= element_masks_[e]; });
  double total = 0.0;
  while (covered) {
    total += item_weights_[std::countr_zero(covered)];
    covered &= covered - 1;
  }
  return total;
}

std::vector<std::vector<int>> CoverageFunction::element_items() const {
  std::vector<std::vector<int>> out(element_masks_.size());
  for (std::size_t e = 0; e < element_masks_.size(); ++e) {
    std::uint64_t m = element_masks_[e];
    while (m) {
      out[e].push_back(std::countr_zero(m));
      m &= m - 1;
    }
  }
  return out;
}

TableFunction::TableFunction(int n, std::vector<double> values, FnClass declared)
    : n_(n), values_(std::move(values)), declared_(declared) {
  if (n < 0 || n > kMaxN) throw PreconditionError("table: n out of range");
  if (values_.size() != (std::size_t{1} << n)) throw PreconditionError("table: wrong size");
  if (values_[0] != 0.0) throw PreconditionError("table: f(empty) must be 0");
}

XosFunction::XosFunction(std::vector<std::vector<double>> coefficients)
    : coef_(std::move(coefficients)) {
  if (coef_.empty()) throw PreconditionError("xos: width must be at least 1");
  n_ = (int)coef_[0].size();
  if (n_ > kMaxGroundSize) throw PreconditionError("xos: too many elements");
  for (const auto& row : coef_) {
    if ((int)row.size() != n_) throw PreconditionError("xos: ragged coefficient rows");
    for (double a : row)
      if (a < 0.0) throw PreconditionError("xos: negative coefficient");
  }
}

double XosFunction::linear_value(int i, Subset s) const {
  double v = 0.0;
  for_each_element(s, [&](int e) { v += coef_[i][e]; });
  return v;
}

double XosFunction::eval(Subset s) const {
  double best = 0.0;
  for (int i = 0; i < width(); ++i) best = std::max(best, linear_value(i, s));
  return best;
}

double XosFunction::max_coef(int e) const {
  double best = 0.0;
  for (const auto& row : coef_) best = std::max(best, row[e]);
  return best;
}

PartitionRankFunction::PartitionRankFunction(std::vector<int> parts, std::vector<int> caps)
    : parts_(std::move(parts)), caps_(std::move(caps)) {
  if ((int)parts_.size() > kMaxGroundSize) throw PreconditionError("partition_rank: too many elements");
  part_masks_.assign(caps_.size(), 0);
  for (int e = 0; e < (int)parts_.size(); ++e) {
    const int p = parts_[e];
    if (p < 0 || p >= (int)caps_.size())
      throw PreconditionError("partition_rank: part label out of range");
    part_masks_[p] |= std::uint32_t{1} << e;
  }
  for (int c : caps_)
    if (c < 0) throw PreconditionError("partition_rank: negative cap");
}

double PartitionRankFunction::eval(Subset s) const {
  double total = 0.0;
  for (std::size_t p = 0; p < part_masks_.size(); ++p)
    total += std::min(std::popcount(s.bits() & part_masks_[p]), caps_[p]);
  return total;
}

CutFunction::CutFunction(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxGroundSize) throw PreconditionError("cut: n out of range");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
      throw PreconditionError("cut: bad edge endpoints");
    if (e.w < 0.0) throw PreconditionError("cut: negative edge weight");
  }
}

double CutFunction::eval(Subset s) const {
  double total = 0.0;
  for (const auto& e : edges_)
    if (s.contains(e.u) != s.contains(e.v)) total += e.w;
  return total;
}

AllTypesFunction::AllTypesFunction(std::vector<int> types) : types_(std::move(types)) {
  if ((int)types_.size() > kMaxGroundSize) throw PreconditionError("all_types: too many elements");
  num_types_ = 0;
  for (int t : types_) {
    if (t < 0) throw PreconditionError("all_types: negative type label");
    num_types_ = std::max(num_types_, t + 1);
  }
  type_masks_.assign(num_types_, 0);
  for (int e = 0; e < (int)types_.size(); ++e)
    type_masks_[types_[e]] |= std::uint32_t{1} << e;
  for (std::uint32_t m : type_masks_)
    if (m == 0) throw PreconditionError("all_types: empty type");
}

double AllTypesFunction::eval(Subset s) const {
  if (num_types_ == 0) return 0.0;
  for (std::uint32_t m : type_masks_)
    if ((s.bits() & m) == 0) return 0.0;
  return 1.0;
}

ContractedFunction::ContractedFunction(SetFunctionPtr f, Subset base)
    : f_(std::move(f)), base_(base), base_value_(f_->eval(base)) {}

FnClass ContractedFunction::fn_class() const {
  // Contraction preserves monotone submodularity; anything else loses its
  // guarantees (the marginal of a plain submodular function can go negative).
  return f_->fn_class() == FnClass::monotone_submodular ? FnClass::monotone_submodular
                                                        : FnClass::arbitrary;
}

SetFunctionPtr contract(SetFunctionPtr f, Subset base) {
  return std::make_shared<ContractedFunction>(std::move(f), base);
}

}  // namespace probing
