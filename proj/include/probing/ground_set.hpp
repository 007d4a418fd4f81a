#pragma once

#include <utility>
#include <vector>

#include "probing/bitset.hpp"
#include "probing/errors.hpp"

namespace probing {

// The probed universe: n elements with independent activation probabilities.
// Immutable after construction.
class GroundSet {
 public:
  explicit GroundSet(std::vector<double> probs) : probs_(std::move(probs)) {
    if ((int)probs_.size() > kMaxGroundSize)
      throw PreconditionError("ground set larger than " + std::to_string(kMaxGroundSize));
    for (double p : probs_)
      if (!(p >= 0.0 && p <= 1.0))
        throw PreconditionError("activation probability outside [0,1]");
  }

  // n elements, all with probability p.
  GroundSet(int n, double p) : GroundSet(std::vector<double>(check_n(n), p)) {}

  int size() const { return (int)probs_.size(); }
  double p(int e) const { return probs_[e]; }
  double q(int e) const { return 1.0 - probs_[e]; }
  const std::vector<double>& probs() const { return probs_; }
  Subset all() const { return Subset::full(size()); }

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxGroundSize)
      throw PreconditionError("ground set size out of range");
    return n;
  }
  std::vector<double> probs_;
};

}  // namespace probing
