#pragma once

#include <string>
#include <vector>

#include "talg/relational.hpp"
#include "talg/rough.hpp"
#include "talg/tstructure.hpp"

namespace talg {

/// The basic three-element structure on the chain 0 < 1 < 2:
/// s1 = [0,0,2], s2 = [0,2,2], c = [2,2,0].
TStructure make_bt();

/// The two-element Boolean structure: S identity, C complement.
TStructure make_b();

/// Full algebra of rough pairs over the partition: every subset of points is
/// a generator. Guard: at most 16 points.
RoughAlgebra from_approximation_space(const std::vector<std::vector<int>>& classes);

/// Outcome of closing generators under the set or relation operators and
/// surveying the axioms on the result. T2 is split into its four
/// half-equations; satisfied + failed always cover exactly
///   T1, T2-s1-meet, T2-s1-join, T2-s2-meet, T2-s2-join, T3, T4, T5, T6, T7.
struct ClosureReport {
  struct Failure {
    std::string axiom;
    std::vector<int> witness;  // carrier indices
  };

  std::vector<std::string> satisfied_axioms;
  std::vector<Failure> failed_axioms;
  std::vector<std::vector<int>> carrier_sets;                       // set closure
  std::vector<std::vector<std::pair<int, int>>> carrier_relations;  // relation closure

  int carrier_size() const {
    return static_cast<int>(carrier_sets.empty() ? carrier_relations.size()
                                                 : carrier_sets.size());
  }
  bool satisfied(const std::string& axiom) const;
  const Failure* failure(const std::string& axiom) const;
};

/// Close generators (plus the empty set and the full set) under
/// intersection, union and the involution operators, then survey T1..T7.
ClosureReport closure_from_involution(int points, const Involution& g,
                                      const std::vector<Bits>& generators);

/// Same survey for subrelations of a symmetric base under the relation
/// operators, seeded with the empty relation and the base.
ClosureReport closure_from_relation(int points, const RelationElement& base,
                                    const std::vector<RelationElement>& generators);

/// All valid structures with carrier size n, up to isomorphism: distributive
/// lattice skeletons via downset lattices of small posets, operator tables by
/// pruned exhaustive search, deduplication by canonical_key.
/// Guard: n <= kEnumerationGuard.
std::vector<TStructure> enumerate_t_structures(int n);

/// All bounded distributive lattices with n elements up to isomorphism.
/// Guard: n <= kEnumerationGuard.
std::vector<FiniteLattice> enumerate_distributive_lattices(int n);

}  // namespace talg
