#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "probing/errors.hpp"

namespace probing {

// Ground sets are capped so every subset fits in one machine word.
inline constexpr int kMaxGroundSize = 24;

// A subset of {0, ..., n-1} stored as a bit mask. Value type, cheap to copy.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset of_bits(std::uint32_t raw) { return Subset(raw); }
  static constexpr Subset none() { return Subset(0); }
  static constexpr Subset single(int e) { return Subset(std::uint32_t{1} << e); }
  static constexpr Subset full(int n) {
    return Subset(n == 0 ? 0u : (std::uint32_t(~0u) >> (32 - n)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr Subset with(int e) const { return Subset(bits_ | (std::uint32_t{1} << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(std::uint32_t{1} << e)); }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  // Smallest element; subset must be non-empty.
  int lowest() const { return std::countr_zero(bits_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    std::uint32_t m = bits_;
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  constexpr explicit Subset(std::uint32_t raw) : bits_(raw) {}
  std::uint32_t bits_ = 0;
};

// Visits the elements of s in ascending index order.
template <class F>
void for_each_element(Subset s, F&& f) {
  std::uint32_t m = s.bits();
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// Visits every submask of s, in ascending numeric mask order, starting with
// the empty set and ending with s itself.
template <class F>
void for_each_submask(Subset s, F&& f) {
  const std::uint32_t m = s.bits();
  std::uint32_t sub = 0;
  while (true) {
    f(Subset::of_bits(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

// Lexicographic order on subsets viewed as ascending element sequences,
// e.g. {0,2} < {1} and {0} < {0,1}. Used for deterministic tie-breaking.
inline bool lex_less(Subset a, Subset b) {
  std::uint32_t x = a.bits(), y = b.bits();
  while (x && y) {
    const int ea = std::countr_zero(x), eb = std::countr_zero(y);
    if (ea != eb) return ea < eb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace probing
