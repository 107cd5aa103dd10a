#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "talg/bits.hpp"
#include "talg/report.hpp"

namespace talg {

// Hard size guards. All checking is exhaustive table sweeping, so these keep
// the worst cases at desk scale.
inline constexpr int kLawCheckGuard = 64;        // O(n^3) law sweeps
inline constexpr int kIsomorphismGuard = 12;     // default bound for backtracking search
inline constexpr int kSubsetEnumerationGuard = 20;  // 2^n subset scans
inline constexpr int kRelationSweepGuard = 16;   // 2^|rho| x 2^|rho| sweeps
inline constexpr int kClosureCap = 10000;        // closure fixpoint cap
inline constexpr int kEnumerationGuard = 6;      // exhaustive model search
inline constexpr int kCanonicalKeyGuard = 10;    // (n-2)! relabelings

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bounded lattice given by explicit operation tables over indices 0..n-1.
/// zero/one are stored and cross-validated against the tables, never inferred
/// silently (see validate_structure).
struct FiniteLattice {
  int n = 0;
  std::vector<int> meet_table;  // row-major, n*n
  std::vector<int> join_table;
  int zero = 0;
  int one = 0;

  int meet(int a, int b) const { return meet_table[a * n + b]; }
  int join(int a, int b) const { return join_table[a * n + b]; }

  // The one-element lattice (zero = one) is accepted everywhere but flagged;
  // the representation constructions reject it.
  bool degenerate() const { return zero == one; }

  bool operator==(const FiniteLattice&) const = default;
};

/// The n-element chain 0 < 1 < ... < n-1.
FiniteLattice chain_lattice(int n);

/// Shape-level validation: table dimensions, entry ranges, and the declared
/// zero/one being neutral/absorbing. Throws on the first defect.
void validate_structure(const FiniteLattice& l);

/// a <= b in the table order, i.e. meet(a,b) = a.
bool leq(const FiniteLattice& l, int a, int b);

/// Exhaustive check of the bounded-distributive-lattice laws. One entry per
/// violated law, witnessed by the first failing tuple in lexicographic order.
ValidationReport check_distributive_lattice(const FiniteLattice& l);

/// B(A): all elements with a complement. Always contains zero and one.
std::vector<int> complemented_elements(const FiniteLattice& l);

/// The complement of a, when it exists (unique in a distributive lattice).
std::optional<int> complement_of(const FiniteLattice& l, int a);

/// Elements j != zero such that j = a v b forces j = a or j = b.
std::vector<int> join_irreducibles(const FiniteLattice& l);

Bits downset(const FiniteLattice& l, int a);
Bits upset(const FiniteLattice& l, int a);

}  // namespace talg
