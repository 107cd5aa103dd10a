#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace talg {

// Subsets of element/point indices as 64-bit masks. Every carrier in this
// project stays well below 64 elements (see the size guards in lattice.hpp).
using Bits = std::uint64_t;

constexpr Bits bit(int i) { return Bits{1} << i; }
constexpr bool has_bit(Bits s, int i) { return (s >> i) & Bits{1}; }
constexpr Bits all_bits(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }
constexpr bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }
inline int bit_count(Bits s) { return std::popcount(s); }

std::vector<int> bit_indices(Bits s);
Bits bits_of(const std::vector<int>& indices);

}  // namespace talg
