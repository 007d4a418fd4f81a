#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "probing/outcomes.hpp"
#include "probing/set_function.hpp"

namespace probing {

// f^max(S) = max over R subseteq S of f(R). Always >= f(empty) = 0 and
// monotone in S even when f itself is not monotone.
double fmax(const SetFunction& f, Subset s);

// f^max together with its lexicographically smallest maximizing subset.
std::pair<double, Subset> fmax_witness(const SetFunction& f, Subset s);

// Dense f^max table over all submasks of base, indexed by SubsetIndex
// compression. Costs O(2^k * k) evaluations of f.
std::vector<double> fmax_table(const SetFunction& f, const SubsetIndex& idx);

// Memoizes f^max per absolute subset mask. Shared across the evaluation of
// one tree or plan so overlapping active sets are computed once.
class FmaxCache {
 public:
  explicit FmaxCache(const SetFunction& f) : f_(f) {}
  double value(Subset s);

 private:
  const SetFunction& f_;
  std::unordered_map<std::uint32_t, double> memo_;
};

// E[f(R)] for R containing each element of s independently with
// probability 1/2. For non-negative submodular f this lies within
// [f^max(s)/4, f^max(s)] (the sandwich used throughout the analysis).
double fmax_half_estimate(const SetFunction& f, Subset s);

// Monte-Carlo variant for probed sets too large to enumerate.
double fmax_half_sampled(const SetFunction& f, Subset s, std::uint64_t seed, int samples);

}  // namespace probing
