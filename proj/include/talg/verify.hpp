#pragma once

#include <functional>
#include <string>
#include <vector>

#include "talg/families.hpp"
#include "talg/htalgebra.hpp"
#include "talg/relational.hpp"
#include "talg/rough.hpp"
#include "talg/spectrum.hpp"
#include "talg/tstructure.hpp"

namespace talg {

struct SectionResult {
  std::string name;
  bool pass = true;
  int checks = 0;
  std::vector<std::string> failures;
};

struct RunReport {
  std::string command;
  std::string input_digest;
  std::vector<SectionResult> sections;
  std::vector<std::string> counterexamples;  // flattened section failures
  int corpus_size = 0;

  bool pass() const {
    for (const auto& s : sections)
      if (!s.pass) return false;
    return true;
  }
  const SectionResult* section(const std::string& name) const;
};

struct CorpusItem {
  std::string name;
  TStructure t;
};

/// Enumerated structures of sizes 2..bound plus the three fixed products
/// (basic3 x basic2, basic3 x basic3, basic2 x basic2), deduplicated by
/// canonical key. Guard: bound in [2, kEnumerationGuard].
std::vector<CorpusItem> build_corpus(int bound);

/// Fault-injection seams for the verification pipeline. Null members fall
/// back to the real implementations; tests substitute saboteurs to show that
/// each section detects its own breakage.
struct VerifyHooks {
  std::function<HTAlgebra(const TStructure&)> to_ht;
  std::function<TStructure(const HTAlgebra&)> to_t;
  std::function<std::vector<PrimeFilter>(const FiniteLattice&)> filters_fast;
  std::function<RoughRepresentation(const HTAlgebra&)> rough;
  std::function<RelationalRepresentation(const HTAlgebra&)> relational;
};

// Individual verification sections. Every section traps exceptions from the
// hooked operations and records them as failures.
SectionResult section_axioms(const std::vector<CorpusItem>& corpus);
SectionResult section_equivalence(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_prelinearity(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_double_negation(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_maximality(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_spectrum_oracle(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_chain_bound(const std::vector<CorpusItem>& corpus);
SectionResult section_filter_transfer(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_stone_preservation(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_rough_representation(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_relational_representation(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks);
SectionResult section_subrelation_inclusions(const RelationElement& base);

/// Full symmetric relation on two points, the base used by the default
/// subrelation sweep section.
RelationElement full_relation_on_two_points();

/// Run every section over the corpus for `bound` and aggregate the verdict.
RunReport verify_theorems(int bound, const VerifyHooks& hooks = {});

}  // namespace talg
