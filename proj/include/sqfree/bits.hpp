#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sqfree {

// A subset of a ground set of at most 64 elements, one bit per element.
using Bits = std::uint64_t;
using VertexSet = Bits;

inline constexpr int kMaxBits = 64;

constexpr Bits bit(int i) noexcept { return Bits{1} << i; }
constexpr int popcount(Bits s) noexcept { return std::popcount(s); }
constexpr bool has(Bits s, int i) noexcept { return ((s >> i) & 1U) != 0; }
constexpr bool subset_of(Bits a, Bits b) noexcept { return (a & ~b) == 0; }
constexpr int lowest(Bits s) noexcept { return std::countr_zero(s); }

constexpr Bits full_set(int n) noexcept {
  return n >= kMaxBits ? ~Bits{0} : bit(n) - 1;
}

template <class F>
constexpr void for_each_bit(Bits s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> elements(Bits s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace sqfree
