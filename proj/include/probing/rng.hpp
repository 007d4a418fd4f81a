#pragma once

#include <cstdint>

namespace probing {

// SplitMix64 run in counter mode: draw i of stream `key` is
// mix64(key + (i+1) * golden), so a generator is a pure function of
// (key, counter) and never aliases another stream. split() derives an
// independent stream key, which keeps nested computations (per-instance,
// per-block, per-node) reproducible regardless of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  // Uniform in [0, 1), 53 random bits.
  double next_real() { return double(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_real() < p; }

  // Uniform in [0, bound); bound must be positive.
  std::uint32_t below(std::uint32_t bound) {
    return std::uint32_t((unsigned __int128)(next_u64()) * bound >> 64);
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_real(); }

  Rng split(std::uint64_t stream) const { return Rng(mix64(key_ ^ mix64(stream + kGolden))); }

  std::uint64_t key() const { return key_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace probing
