#pragma once

#include <vector>

#include "talg/bits.hpp"
#include "talg/htalgebra.hpp"
#include "talg/lattice.hpp"

namespace talg {

/// Proper filter that is prime: member bitmask over element indices.
struct PrimeFilter {
  Bits members = 0;

  bool contains(int a) const { return has_bit(members, a); }
  int size() const { return bit_count(members); }
  bool operator==(const PrimeFilter&) const = default;
  auto operator<=>(const PrimeFilter&) const = default;
};

/// Connected component of the comparability graph on prime filters,
/// `filters` ordered by inclusion when the component is totally ordered.
struct SpectrumBlock {
  std::vector<int> filters;
  bool is_chain = true;

  bool oversized() const { return filters.size() > 2; }
};

/// All prime filters (canonical order: ascending member bitmask) together
/// with the decomposition of the inclusion order into comparability blocks.
/// For the lattice of an algebra with valid S-operators every block is a
/// chain of at most two filters; larger or non-chain blocks are recorded as
/// informational flags, since plain lattices may produce them.
struct Spectrum {
  std::vector<PrimeFilter> filters;
  std::vector<SpectrumBlock> blocks;

  bool chains_of_at_most_two() const {
    for (const auto& b : blocks)
      if (!b.is_chain || b.oversized()) return false;
    return true;
  }
};

/// All subsets satisfying the prime-filter conditions, by exhaustive subset
/// scan. Guard: n <= kSubsetEnumerationGuard.
std::vector<PrimeFilter> prime_filters_bruteforce(const FiniteLattice& l);

/// Up-sets of the join-irreducible elements. Independent of the brute-force
/// route; the two must agree on every distributive lattice.
std::vector<PrimeFilter> prime_filters_birkhoff(const FiniteLattice& l);

/// Spectrum of l with its comparability blocks (filters via the Birkhoff
/// route; requires a valid distributive lattice).
Spectrum chain_decomposition(const FiniteLattice& l);

/// If S2(x) lies in a prime filter P strictly below Q, then x lies in Q.
/// Checked for every nested pair and element ("s2-filter-transfer").
ValidationReport check_s2_filter_transfer(const HTAlgebra& h);

/// s(a) = { filter indices containing a }, as bitmasks over filter indices.
/// The classical embedding facts (injectivity on nondegenerate input, bounds,
/// meet/join preservation) are asserted internally; a failure throws
/// std::logic_error since it signals an implementation bug.
std::vector<Bits> stone_map(const FiniteLattice& l);
std::vector<Bits> stone_map(const FiniteLattice& l, const std::vector<PrimeFilter>& filters);

}  // namespace talg
