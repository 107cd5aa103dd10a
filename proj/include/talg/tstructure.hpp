#pragma once

#include <utility>
#include <vector>

#include "talg/lattice.hpp"

namespace talg {

struct HTAlgebra;

/// Bounded distributive lattice with unary operators C, S1, S2.
///
/// The intended axioms (checked by check_t_axioms, named T2..T7 in reports):
///   T2  each Si distributes over meet and join
///   T3  S1(a) ^ C(a) = 0 and S1(a) v C(a) = 1
///   T4  Si(Sj(a)) = Sj(a)
///   T5  S1 fixes the bounds
///   T6  a is determined by the pair (S1(a), S2(a))
///   T7  S1(a) <= S2(a)
struct TStructure {
  FiniteLattice lattice;
  std::vector<int> c;
  std::vector<int> s1;
  std::vector<int> s2;

  int n() const { return lattice.n; }
  bool operator==(const TStructure&) const = default;
};

/// One report entry per violated axiom among T2..T7, first witness each.
/// Requires the underlying lattice to pass check_distributive_lattice.
ValidationReport check_t_axioms(const TStructure& t);

/// Consequences of the axioms: T8 (S2 fixes bounds), T9 (order reflection),
/// T10 (S1 a <= a <= S2 a), T11 (C inverts the Si images), and the common
/// operator image being exactly the complemented elements ("operator-image").
/// No precondition; useful on deliberately broken structures.
ValidationReport check_derived_props(const TStructure& t);

/// (image of S1, image of S2), both sorted. Both equal B(A) on any structure
/// passing the axioms.
std::pair<std::vector<int>, std::vector<int>> operator_images(const TStructure& t);

/// The equivalent Heyting presentation:
///   a => b = b v ((C(S1 a) v S1 b) ^ (C(S2 a) v S2 b)),   ~a = a => 0.
/// Throws std::invalid_argument unless t passes check_t_axioms.
HTAlgebra to_ht(const TStructure& t);

}  // namespace talg
