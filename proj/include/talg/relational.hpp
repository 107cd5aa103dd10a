#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "talg/algebra.hpp"
#include "talg/spectrum.hpp"

namespace talg {

/// Self-inverse permutation of spectrum points: fixes the singleton blocks,
/// swaps the two filters of each two-element chain.
struct Involution {
  std::vector<int> map;

  int points() const { return static_cast<int>(map.size()); }
  int operator()(int p) const { return map[p]; }
  Bits apply(Bits x) const;
};

/// Set of ordered point pairs, kept sorted for canonical identity.
struct RelationElement {
  std::vector<std::pair<int, int>> pairs;

  bool empty() const { return pairs.empty(); }
  int size() const { return static_cast<int>(pairs.size()); }
  bool contains(int p, int q) const;
  bool operator==(const RelationElement&) const = default;
  auto operator<=>(const RelationElement&) const = default;
};

RelationElement make_relation(std::vector<std::pair<int, int>> pairs);
RelationElement rel_inverse(const RelationElement& r);
RelationElement rel_intersect(const RelationElement& a, const RelationElement& b);
RelationElement rel_union(const RelationElement& a, const RelationElement& b);
RelationElement rel_minus(const RelationElement& a, const RelationElement& b);
bool rel_subset(const RelationElement& a, const RelationElement& b);
bool rel_symmetric(const RelationElement& r);

/// Carrier of subrelations of a symmetric base realized as a TStructure:
/// meet/join are intersection/union, S1(R) = R n R^-1, S2(R) = R u R^-1,
/// C(R) = base - S1(R), bounds empty and base.
struct RelAlgebra {
  RelationElement base;
  std::vector<RelationElement> carrier;
  TStructure structure;  // indices aligned with carrier

  int index_of(const RelationElement& r) const;
};

/// Throws std::invalid_argument when some block is not a chain of size <= 2.
Involution involution_from_spectrum(const Spectrum& spec);

struct SetOperatorImages {
  Bits s1 = 0;
  Bits c = 0;
  Bits s2 = 0;
};

/// S1 X = X n g(X), C X = complement of (X n g(X)), S2 X = X u g(X).
SetOperatorImages set_operators(const Involution& g, Bits x);

/// The Stone map intertwines the algebra operators with the involution set
/// operators: f(S1 a) = S1 f(a), f(C a) = C f(a), f(S2 a) = S2 f(a).
/// The S2 equality is reported as its four separate inclusions so a failure
/// localizes ("s2-step-1".."s2-step-4"):
///   step 1:  f(S2 a)  is contained in  S2(f(S2 a))
///   step 2:  S2(f(S2 a))  is contained in  f(S2 a)
///   step 3:  f(S2 a)  is contained in  S2 f(a)
///   step 4:  S2 f(a)  is contained in  f(S2 a)
ValidationReport check_f_preservation(const HTAlgebra& h);

/// G = { (p, g(p)) : p point }; symmetric, one pair per point.
RelationElement build_g_relation(const Involution& g);

struct RelationOperatorImages {
  RelationElement s1;
  RelationElement s2;
  RelationElement c;
};

/// The three subrelation operators over a symmetric base.
/// Throws std::invalid_argument if r is not within the base.
RelationOperatorImages relation_operators(const RelationElement& base, const RelationElement& r);

struct RelationalRepresentation {
  Spectrum spectrum;
  Involution g;
  RelationElement g_relation;
  RelAlgebra algebra;
  std::vector<RelationElement> image;  // h(a) per element
  std::vector<int> element_to_rel;     // h as carrier indices
  MorphismReport morphism;
  ValidationReport preservation;       // check_f_preservation sub-report
  std::vector<int> isomorphism;
  bool literal_matches_simplified = false;  // G n (f(a) x E) vs {(p,g(p)) : p in f(a)}
};

/// h(a) = G n (f(a) x E), computed literally and cross-checked against the
/// simplified form; the lemma G n (g(f(a)) x E) = G n (E x f(a)) is asserted
/// pointwise per element. Requires check_ht_axioms and n >= 2.
RelationalRepresentation represent_relational(const HTAlgebra& h);

struct SubrelationSweep {
  ValidationReport report;  // "s2-meet-inclusion" / "s1-join-inclusion" entries
  long long pairs_checked = 0;
  std::optional<std::pair<RelationElement, RelationElement>> s2_equality_counterexample;
  std::optional<std::pair<RelationElement, RelationElement>> s1_equality_counterexample;
};

/// Exhaustive sweep over all pairs (R, S) of subrelations of a symmetric
/// base: verifies S2(R n S) inside S2 R n S2 S and S1(R u S) containing
/// S1 R u S1 S, and returns the lexicographically first strict counterexample
/// to each corresponding equality, when one exists.
/// Guard: |base| <= kRelationSweepGuard.
SubrelationSweep check_subrelation_inclusions(const RelationElement& base);

}  // namespace talg
