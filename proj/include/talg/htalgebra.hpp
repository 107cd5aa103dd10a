#pragma once

#include <utility>
#include <vector>

#include "talg/lattice.hpp"
#include "talg/tstructure.hpp"

namespace talg {

/// Heyting algebra with unary operators S1, S2. The implication is stored as
/// a table and validated against the order, not recomputed on demand, so
/// mutation tests can target it directly.
struct HTAlgebra {
  FiniteLattice lattice;
  std::vector<int> imp;  // row-major, n*n
  std::vector<int> neg;
  std::vector<int> s1;
  std::vector<int> s2;

  int n() const { return lattice.n; }
  int implies(int a, int b) const { return imp[a * lattice.n + b]; }
  bool operator==(const HTAlgebra&) const = default;
};

/// Residuation: imp[a][b] is the greatest c with a ^ c <= b ("HT1"), and
/// neg[a] = imp[a][zero] ("neg"). Requires a valid distributive lattice.
ValidationReport check_heyting_law(const HTAlgebra& h);

/// One entry per violated axiom among:
///   HT2  each Si distributes over meet and join
///   HT3  S2(a => b) = S2 a => S2 b
///   HT4  S1(a => b) = (S1 a => S1 b) ^ (S2 a => S2 b)
///   HT5  Si(Sj(a)) = Sj(a)
///   HT6  S1 a v a = a
///   HT7  S1 a v ~S1 a = 1
/// Requires check_heyting_law to pass.
ValidationReport check_ht_axioms(const HTAlgebra& h);

/// (a => b) v (b => a) = 1 for all pairs ("prelinearity").
ValidationReport check_prelinearity(const HTAlgebra& h);

/// S2 x = ~~x = meet of all complemented elements above x, checked as a
/// three-way equality for every x ("s2-double-negation").
ValidationReport check_s2_double_negation(const HTAlgebra& h);

/// For every prime filter M and element a, the two classical descriptions of
/// relative maximality agree:
///   (a) M is maximal among the filters omitting a,
///   (b) a is outside M and x => a lands in M for every x outside M.
/// Filters are enumerated by brute force (guard: n <= kSubsetEnumerationGuard).
ValidationReport check_maximality_equivalence(const HTAlgebra& h);

/// The two conditions of check_maximality_equivalence for one (filter, a)
/// pair, exposed for targeted tests. `filter` is a member bitmask.
std::pair<bool, bool> maximality_conditions(const HTAlgebra& h, Bits filter, int a);

/// The equivalent T-structure: C(a) = ~S1(a).
/// Throws std::invalid_argument unless h passes the Heyting law and axioms.
TStructure to_t(const HTAlgebra& h);

}  // namespace talg
