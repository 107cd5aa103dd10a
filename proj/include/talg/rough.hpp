#pragma once

#include <vector>

#include "talg/algebra.hpp"
#include "talg/spectrum.hpp"

namespace talg {

/// Point set with an equivalence relation given as an explicit partition.
/// Points are spectrum filter indices when built by comparability_space.
struct ApproximationSpace {
  int points = 0;
  std::vector<std::vector<int>> classes;
  std::vector<Bits> class_masks;  // parallel to classes

  Bits all() const { return all_bits(points); }
  Bits class_mask_of(int point) const;
};

ApproximationSpace make_space(int points, const std::vector<std::vector<int>>& classes);

/// Lower/upper approximation pair; both components are unions of classes and
/// lower is contained in upper.
struct RoughPair {
  Bits lower = 0;
  Bits upper = 0;

  bool operator==(const RoughPair&) const = default;
  auto operator<=>(const RoughPair&) const = default;
};

/// Algebra of rough pairs: carrier in canonical order (sorted pairs) with the
/// pair operations realized as a TStructure over carrier indices:
///   meet/join componentwise, S1(l,u) = (l,l), S2(l,u) = (u,u),
///   C(l,u) = (-l,-l), bounds (0,0) and (all,all).
struct RoughAlgebra {
  ApproximationSpace space;
  std::vector<RoughPair> carrier;
  TStructure structure;  // indices aligned with carrier

  int index_of(const RoughPair& p) const;
};

/// Equivalence classes = the comparability blocks of the spectrum.
/// Throws std::invalid_argument on an empty spectrum (degenerate algebra).
ApproximationSpace comparability_space(const Spectrum& spec);

/// Union of the classes meeting x.
Bits monadic_m(const ApproximationSpace& space, Bits x);

/// Union of the classes inside x: complement of M of complement.
Bits monadic_l(const ApproximationSpace& space, Bits x);

/// Closure of { (L(X), M(X)) : X generator } plus the bounds under the pair
/// operations, to a fixpoint (cap kClosureCap).
RoughAlgebra rough_algebra(const ApproximationSpace& space, const std::vector<Bits>& generators);

struct RoughRepresentation {
  Spectrum spectrum;
  ApproximationSpace space;
  RoughAlgebra algebra;
  std::vector<RoughPair> image;       // h(a) per element
  std::vector<int> element_to_pair;   // h as carrier indices
  MorphismReport morphism;
  std::vector<int> isomorphism;       // to_t(h-image) <- matching of to_t(H)
};

/// h(x) = (L(s(x)), M(s(x))) over the comparability space of the spectrum.
/// Requires h to pass check_ht_axioms and n >= 2; the embedding facts are
/// re-verified and a violation throws std::logic_error (implementation bug).
RoughRepresentation represent_rough(const HTAlgebra& h);

}  // namespace talg
