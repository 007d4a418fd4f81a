#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "probing/bitset.hpp"
#include "probing/errors.hpp"
#include "probing/ground_set.hpp"
#include "probing/rng.hpp"

namespace probing {

// Exhaustive outcome enumeration is capped at this many probed elements.
inline constexpr int kMaxEnumeration = 20;

inline void check_enumeration_size(Subset s, const char* what) {
  if (s.count() > kMaxEnumeration)
    throw EnumerationLimitError(std::string(what) + ": more than " +
                                std::to_string(kMaxEnumeration) + " elements");
}

// Visits every activation outcome R of the probed set s together with its
// probability Pr[R] = prod_{e in R} p_e * prod_{e in s\R} (1-p_e).
// Deterministic order: ascending numeric mask.
template <class F>
void for_each_outcome(Subset s, const GroundSet& g, F&& f) {
  check_enumeration_size(s, "for_each_outcome");
  const auto elems = s.to_vector();
  for_each_submask(s, [&](Subset r) {
    double pr = 1.0;
    for (int e : elems) pr *= r.contains(e) ? g.p(e) : g.q(e);
    f(r, pr);
  });
}

// Materialized variant of for_each_outcome. Probabilities sum to 1.
std::vector<std::pair<Subset, double>> enumerate_outcomes(Subset s, const GroundSet& g);

// One independent activation draw of the elements of s. Bit-for-bit
// deterministic given the seed: elements are visited in ascending order and
// each consumes exactly one draw.
Subset sample_subset(Subset s, const GroundSet& g, std::uint64_t seed);

// Maps submasks of a fixed base set to dense table indices: element rank in
// the base becomes the bit position of the compressed mask.
class SubsetIndex {
 public:
  explicit SubsetIndex(Subset base);

  int k() const { return (int)elems_.size(); }
  std::size_t table_size() const { return std::size_t{1} << k(); }
  Subset base() const { return base_; }

  Subset expand(std::uint32_t compressed) const {
    std::uint32_t out = 0;
    std::uint32_t m = compressed;
    while (m) {
      const int t = std::countr_zero(m);
      out |= std::uint32_t{1} << elems_[t];
      m &= m - 1;
    }
    return Subset::of_bits(out);
  }

  std::uint32_t compress(Subset s) const {
    std::uint32_t out = 0;
    for (int t = 0; t < (int)elems_.size(); ++t)
      if (s.contains(elems_[t])) out |= std::uint32_t{1} << t;
    return out;
  }

 private:
  Subset base_;
  std::vector<int> elems_;
};

}  // namespace probing
