#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "probing/bitset.hpp"
#include "probing/errors.hpp"

namespace probing {

// Declared structural class of an objective. The tag is what the theorem
// machinery keys on; verifiers audit it on small instances in the tests.
enum class FnClass { monotone_submodular, submodular, xos, arbitrary };

const char* to_string(FnClass c);

// A set function on {0,...,n-1} with f(empty) = 0 required of every
// top-level objective. Implementations are immutable and eval is pure.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int n() const = 0;
  virtual double eval(Subset s) const = 0;
  virtual FnClass fn_class() const = 0;
  double operator()(Subset s) const { return eval(s); }
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

// Weighted coverage: element e covers a fixed item set; f(S) is the total
// weight of the union of covered items. Monotone submodular.
class CoverageFunction final : public SetFunction {
 public:
  // element_items[e] lists item indices into item_weights (weights >= 0,
  // at most 64 items).
  CoverageFunction(std::vector<double> item_weights,
                   const std::vector<std::vector<int>>& element_items);

  int n() const override { return (int)element_masks_.size(); }
  double eval(Subset s) const override;
  FnClass fn_class() const override { return FnClass::monotone_submodular; }

  const std::vector<double>& item_weights() const { return item_weights_; }
  const std::vector<std::uint64_t>& element_masks() const { return element_masks_; }
  std::vector<std::vector<int>> element_items() const;

 private:
  std::vector<double> item_weights_;
  std::vector<std::uint64_t> element_masks_;
};

// Explicit value table over all 2^n subsets, n <= 16. Hosts arbitrary
// counterexamples; the declared class is whatever the caller claims.
class TableFunction final : public SetFunction {
 public:
  TableFunction(int n, std::vector<double> values, FnClass declared);

  int n() const override { return n_; }
  double eval(Subset s) const override { return values_[s.bits()]; }
  FnClass fn_class() const override { return declared_; }
  const std::vector<double>& values() const { return values_; }

  static constexpr int kMaxN = 16;

 private:
  int n_;
  std::vector<double> values_;
  FnClass declared_;
};

// XOS (max of linear functions) with non-negative coefficients, so it is
// monotone and equals its own f^max pointwise.
class XosFunction final : public SetFunction {
 public:
  // coefficients: width rows, each of length n, all entries >= 0.
  explicit XosFunction(std::vector<std::vector<double>> coefficients);

  int n() const override { return n_; }
  double eval(Subset s) const override;
  FnClass fn_class() const override { return FnClass::xos; }

  int width() const { return (int)coef_.size(); }
  double coef(int i, int e) const { return coef_[i][e]; }
  const std::vector<std::vector<double>>& coefficients() const { return coef_; }
  // max_i a_i(e)
  double max_coef(int e) const;
  // a_i(S) for one row.
  double linear_value(int i, Subset s) const;

 private:
  int n_;
  std::vector<std::vector<double>> coef_;
};

// Rank-style partition objective: sum over parts of min(|S intersect part|,
// cap). Monotone submodular.
class PartitionRankFunction final : public SetFunction {
 public:
  PartitionRankFunction(std::vector<int> parts, std::vector<int> caps);

  int n() const override { return (int)parts_.size(); }
  double eval(Subset s) const override;
  FnClass fn_class() const override { return FnClass::monotone_submodular; }

  const std::vector<int>& parts() const { return parts_; }
  const std::vector<int>& caps() const { return caps_; }

 private:
  std::vector<int> parts_;
  std::vector<int> caps_;
  std::vector<std::uint32_t> part_masks_;
};

// Weighted graph cut: f(S) is the total weight of edges with exactly one
// endpoint in S. Non-negative submodular, not monotone.
class CutFunction final : public SetFunction {
 public:
  struct Edge {
    int u, v;
    double w;
  };
  CutFunction(int n, std::vector<Edge> edges);

  int n() const override { return n_; }
  double eval(Subset s) const override;
  FnClass fn_class() const override { return FnClass::submodular; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

// 1 if every type label appears in S, else 0. Monotone but far from
// submodular; carries the arbitrary tag so no factor theorem is asserted.
class AllTypesFunction final : public SetFunction {
 public:
  explicit AllTypesFunction(std::vector<int> types);

  int n() const override { return (int)types_.size(); }
  double eval(Subset s) const override;
  FnClass fn_class() const override { return FnClass::arbitrary; }
  const std::vector<int>& types() const { return types_; }
  int num_types() const { return num_types_; }

 private:
  std::vector<int> types_;
  int num_types_;
  std::vector<std::uint32_t> type_masks_;
};

// Marginal function g(T) = f(base | T) - f(base). g(empty) = 0 by
// construction; may take negative values for non-monotone f, so it is
// allowed internally but rejected as a top-level instance objective.
class ContractedFunction final : public SetFunction {
 public:
  ContractedFunction(SetFunctionPtr f, Subset base);

  int n() const override { return f_->n(); }
  double eval(Subset s) const override { return f_->eval(base_ | s) - base_value_; }
  FnClass fn_class() const override;

  Subset base() const { return base_; }
  const SetFunctionPtr& inner() const { return f_; }

 private:
  SetFunctionPtr f_;
  Subset base_;
  double base_value_;
};

SetFunctionPtr contract(SetFunctionPtr f, Subset base);

}  // namespace probing
