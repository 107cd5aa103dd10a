#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "talg/htalgebra.hpp"
#include "talg/lattice.hpp"
#include "talg/tstructure.hpp"

namespace talg {

enum class Kind { lattice, tstructure, htalgebra };

using Algebra = std::variant<FiniteLattice, TStructure, HTAlgebra>;

Kind kind_of(const Algebra& a);
std::string kind_name(Kind k);
const FiniteLattice& lattice_of(const Algebra& a);
int element_count(const Algebra& a);

/// Operation names of a kind, binary ops first. The bounds (zero, one) are
/// nullary operations of every kind and are always checked by
/// check_homomorphism regardless of the signature argument.
std::vector<std::string> signature_of(Kind k);
bool is_binary_op(const std::string& op);
int apply_unary(const Algebra& a, const std::string& op, int x);
int apply_binary(const Algebra& a, const std::string& op, int x, int y);

/// Componentwise product; pair (a,b) flattens to index a * B.n + b.
/// Throws std::invalid_argument on kind mismatch.
Algebra direct_product(const Algebra& a, const Algebra& b);
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);
TStructure direct_product(const TStructure& a, const TStructure& b);
HTAlgebra direct_product(const HTAlgebra& a, const HTAlgebra& b);

/// Pointwise preservation check of the named operations (plus the bounds)
/// under `map : A -> B`, with injectivity/surjectivity recorded.
MorphismReport check_homomorphism(const Algebra& a, const Algebra& b,
                                  const std::vector<int>& map,
                                  const std::vector<std::string>& signature);

/// Backtracking search over zero/one-fixing bijections for a full-signature
/// isomorphism. Throws GuardError when the carriers exceed `size_guard`.
std::optional<std::vector<int>> find_isomorphism(const Algebra& a, const Algebra& b,
                                                 int size_guard = kIsomorphismGuard);

/// Minimal table encoding over all zero/one-fixing relabelings; two algebras
/// of one kind are isomorphic iff their keys are equal. Deduplication oracle
/// for the enumerator (guard: n <= kCanonicalKeyGuard).
std::vector<int> canonical_key(const Algebra& a);

}  // namespace talg
