#include "probing/fmax.hpp"

#include <algorithm>

#include "probing/rng.hpp"

namespace probing {

double fmax(const SetFunction& f, Subset s) {
  check_enumeration_size(s, "fmax");
  double best = 0.0;
  for_each_submask(s, [&](Subset r) { best = std::max(best, f.eval(r)); });
  return best;
}

std::pair<double, Subset> fmax_witness(const SetFunction& f, Subset s) {
  check_enumeration_size(s, "fmax_witness");
  double best = f.eval(Subset::none());
  Subset arg = Subset::none();
  for_each_submask(s, [&](Subset r) {
    const double v = f.eval(r);
    if (v > best || (v == best && lex_less(r, arg))) {
      best = v;
      arg = r;
    }
  });
  return {best, arg};
}

std::vector<double> fmax_table(const SetFunction& f, const SubsetIndex& idx) {
  std::vector<double> table(idx.table_size());
  table[0] = f.eval(Subset::none());
  for (std::uint32_t m = 1; m < table.size(); ++m) {
    double best = f.eval(idx.expand(m));
    std::uint32_t bits = m;
    while (bits) {
      best = std::max(best, table[m & ~(bits & -bits)]);
      bits &= bits - 1;
    }
    table[m] = best;
  }
  return table;
}

double FmaxCache::value(Subset s) {
  check_enumeration_size(s, "fmax");
  const auto hit = memo_.find(s.bits());
  if (hit != memo_.end()) return hit->second;
  // Ascending submask order guarantees every proper submask is memoized
  // before it is needed.
  for_each_submask(s, [&](Subset r) {
    if (memo_.count(r.bits())) return;
    double best = f_.eval(r);
    for_each_element(r, [&](int e) { best = std::max(best, memo_.at(r.without(e).bits())); });
    memo_.emplace(r.bits(), best);
  });
  return memo_.at(s.bits());
}

double fmax_half_estimate(const SetFunction& f, Subset s) {
  check_enumeration_size(s, "fmax_half_estimate");
  double total = 0.0;
  for_each_submask(s, [&](Subset r) { total += f.eval(r); });
  return total / double(std::uint64_t{1} << s.count());
}

double fmax_half_sampled(const SetFunction& f, Subset s, std::uint64_t seed, int samples) {
  if (samples <= 0) throw PreconditionError("fmax_half_sampled: samples must be positive");
  Rng rng(seed);
  double total = 0.0;
  for (int i = 0; i < samples; ++i) {
    Subset r = Subset::none();
    for_each_element(s, [&](int e) {
      if (rng.bernoulli(0.5)) r = r.with(e);
    });
    total += f.eval(r);
  }
  return total / samples;
}

}  // namespace probing
