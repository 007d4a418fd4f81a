#include "probing/outcomes.hpp"

namespace probing {

std::vector<std::pair<Subset, double>> enumerate_outcomes(Subset s, const GroundSet& g) {
  check_enumeration_size(s, "enumerate_outcomes");
  std::vector<std::pair<Subset, double>> out;
  out.reserve(std::size_t{1} << s.count());
  for_each_outcome(s, g, [&](Subset r, double pr) { out.emplace_back(r, pr); });
  return out;
}

Subset sample_subset(Subset s, const GroundSet& g, std::uint64_t seed) {
  Rng rng(seed);
  Subset r = Subset::none();
  for (int e : s.to_vector())
    if (rng.bernoulli(g.p(e))) r = r.with(e);
  return r;
}

SubsetIndex::SubsetIndex(Subset base) : base_(base), elems_(base.to_vector()) {
  check_enumeration_size(base, "SubsetIndex");
}

}  // namespace probing
