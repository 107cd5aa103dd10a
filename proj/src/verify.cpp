#include "talg/verify.hpp"

#include <algorithm>
#include <set>

#include "talg/algebra.hpp"

namespace talg {

namespace {

HTAlgebra hook_to_ht(const VerifyHooks& hooks, const TStructure& t) {
  return hooks.to_ht ? hooks.to_ht(t) : to_ht(t);
}

TStructure hook_to_t(const VerifyHooks& hooks, const HTAlgebra& h) {
  return hooks.to_t ? hooks.to_t(h) : to_t(h);
}

std::vector<PrimeFilter> hook_filters_fast(const VerifyHooks& hooks, const FiniteLattice& l) {
  return hooks.filters_fast ? hooks.filters_fast(l) : prime_filters_birkhoff(l);
}

RoughRepresentation hook_rough(const VerifyHooks& hooks, const HTAlgebra& h) {
  return hooks.rough ? hooks.rough(h) : represent_rough(h);
}

RelationalRepresentation hook_relational(const VerifyHooks& hooks, const HTAlgebra& h) {
  return hooks.relational ? hooks.relational(h) : represent_relational(h);
}

// Run `body` per corpus item, recording thrown exceptions as failures.
template <typename Body>
SectionResult run_section(const std::string& name, const std::vector<CorpusItem>& corpus,
                          Body&& body) {
  SectionResult sec;
  sec.name = name;
  for (const auto& item : corpus) {
    ++sec.checks;
    try {
      body(item, sec);
    } catch (const std::exception& e) {
      sec.pass = false;
      sec.failures.push_back(item.name + ": " + e.what());
    }
  }
  return sec;
}

void fail(SectionResult& sec, const std::string& message) {
  sec.pass = false;
  sec.failures.push_back(message);
}

void require_report(SectionResult& sec, const std::string& who, const ValidationReport& rep) {
  if (!rep.ok()) fail(sec, who + ": " + rep.violations.front().law);
}

}  // namespace

const SectionResult* RunReport::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<CorpusItem> build_corpus(int bound) {
  if (bound < 2 || bound > kEnumerationGuard)
    throw GuardError("build_corpus: bound outside [2, " + std::to_string(kEnumerationGuard) + "]");

  std::vector<CorpusItem> corpus;
  std::set<std::vector<int>> seen;
  auto add = [&](std::string name, TStructure t) {
    if (seen.insert(canonical_key(t)).second)
      corpus.push_back({std::move(name), std::move(t)});
  };

  for (int n = 2; n <= bound; ++n) {
    int i = 0;
    for (auto& t : enumerate_t_structures(n))
      add("size" + std::to_string(n) + "#" + std::to_string(i++), std::move(t));
  }
  add("basic3xbasic2", direct_product(make_bt(), make_b()));
  add("basic3xbasic3", direct_product(make_bt(), make_bt()));
  add("basic2xbasic2", direct_product(make_b(), make_b()));
  return corpus;
}

SectionResult section_axioms(const std::vector<CorpusItem>& corpus) {
  return run_section("axioms", corpus, [](const CorpusItem& item, SectionResult& sec) {
    require_report(sec, item.name + " axioms", check_t_axioms(item.t));
    require_report(sec, item.name + " derived", check_derived_props(item.t));
  });
}

SectionResult section_equivalence(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks) {
  return run_section("equivalence", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    HTAlgebra h = hook_to_ht(hooks, item.t);
    TStructure back = hook_to_t(hooks, h);
    if (!(back == item.t)) fail(sec, item.name + ": T -> HT -> T is not the identity");
    HTAlgebra again = hook_to_ht(hooks, back);
    if (!(again == h)) fail(sec, item.name + ": HT -> T -> HT is not the identity");
  });
}

SectionResult section_prelinearity(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks) {
  return run_section("prelinearity", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    require_report(sec, item.name, check_prelinearity(hook_to_ht(hooks, item.t)));
  });
}

SectionResult section_double_negation(const std::vector<CorpusItem>& corpus,
                                      const VerifyHooks& hooks) {
  return run_section("double-negation", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    require_report(sec, item.name, check_s2_double_negation(hook_to_ht(hooks, item.t)));
  });
}

SectionResult section_maximality(const std::vector<CorpusItem>& corpus, const VerifyHooks& hooks) {
  return run_section("maximality", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    require_report(sec, item.name, check_maximality_equivalence(hook_to_ht(hooks, item.t)));
  });
}

SectionResult section_spectrum_oracle(const std::vector<CorpusItem>& corpus,
                                      const VerifyHooks& hooks) {
  return run_section("spectrum-oracle", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    auto brute = prime_filters_bruteforce(item.t.lattice);
    auto fast = hook_filters_fast(hooks, item.t.lattice);
    if (!(brute == fast))
      fail(sec, item.name + ": brute-force and irreducible-upset filters disagree");
  });
}

SectionResult section_chain_bound(const std::vector<CorpusItem>& corpus) {
  return run_section("chain-bound", corpus, [](const CorpusItem& item, SectionResult& sec) {
    if (!chain_decomposition(item.t.lattice).chains_of_at_most_two())
      fail(sec, item.name + ": spectrum has a block larger than a two-chain");
  });
}

SectionResult section_filter_transfer(const std::vector<CorpusItem>& corpus,
                                      const VerifyHooks& hooks) {
  return run_section("filter-transfer", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    require_report(sec, item.name, check_s2_filter_transfer(hook_to_ht(hooks, item.t)));
  });
}

SectionResult section_stone_preservation(const std::vector<CorpusItem>& corpus,
                                         const VerifyHooks& hooks) {
  return run_section("stone-preservation", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    require_report(sec, item.name, check_f_preservation(hook_to_ht(hooks, item.t)));
  });
}

SectionResult section_rough_representation(const std::vector<CorpusItem>& corpus,
                                           const VerifyHooks& hooks) {
  return run_section("rough-representation", corpus, [&](const CorpusItem& item, SectionResult& sec) {
    auto rep = hook_rough(hooks, hook_to_ht(hooks, item.t));
    if (!rep.morphism.is_homomorphism || !rep.morphism.is_injective)
      fail(sec, item.name + ": pair map is not an embedding");
    if (rep.isomorphism.empty()) fail(sec, item.name + ": no isomorphism onto the image");
    require_report(sec, item.name + " image axioms", check_t_axioms(rep.algebra.structure));
  });
}

SectionResult section_relational_representation(const std::vector<CorpusItem>& corpus,
                                                const VerifyHooks& hooks) {
  return run_section("relational-representation", corpus,
                     [&](const CorpusItem& item, SectionResult& sec) {
    auto rep = hook_relational(hooks, hook_to_ht(hooks, item.t));
    if (!rep.morphism.is_homomorphism || !rep.morphism.is_injective)
      fail(sec, item.name + ": relation map is not an embedding");
    if (!rep.literal_matches_simplified)
      fail(sec, item.name + ": literal and simplified relation maps disagree");
    if (rep.isomorphism.empty()) fail(sec, item.name + ": no isomorphism onto the image");
    require_report(sec, item.name + " preservation", rep.preservation);
    require_report(sec, item.name + " image axioms", check_t_axioms(rep.algebra.structure));
  });
}

RelationElement full_relation_on_two_points() {
  return make_relation({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

SectionResult section_subrelation_inclusions(const RelationElement& base) {
  SectionResult sec;
  sec.name = "subrelation-inclusions";
  sec.checks = 1;
  try {
    auto sweep = check_subrelation_inclusions(base);
    if (!sweep.report.ok()) fail(sec, "an inclusion fails: " + sweep.report.violations.front().law);
    if (!sweep.s2_equality_counterexample)
      fail(sec, "no strict counterexample to the S2 meet equality");
    if (!sweep.s1_equality_counterexample)
      fail(sec, "no strict counterexample to the S1 join equality");
  } catch (const std::exception& e) {
    fail(sec, e.what());
  }
  return sec;
}

RunReport verify_theorems(int bound, const VerifyHooks& hooks) {
  RunReport report;
  report.command = "verify-paper";

  auto corpus = build_corpus(bound);
  report.corpus_size = static_cast<int>(corpus.size());

  report.sections.push_back(section_axioms(corpus));
  report.sections.push_back(section_equivalence(corpus, hooks));
  report.sections.push_back(section_prelinearity(corpus, hooks));
  report.sections.push_back(section_double_negation(corpus, hooks));
  report.sections.push_back(section_maximality(corpus, hooks));
  report.sections.push_back(section_spectrum_oracle(corpus, hooks));
  report.sections.push_back(section_chain_bound(corpus));
  report.sections.push_back(section_filter_transfer(corpus, hooks));
  report.sections.push_back(section_stone_preservation(corpus, hooks));
  report.sections.push_back(section_rough_representation(corpus, hooks));
  report.sections.push_back(section_relational_representation(corpus, hooks));
  report.sections.push_back(section_subrelation_inclusions(full_relation_on_two_points()));

  for (const auto& sec : report.sections)
    for (const auto& f : sec.failures) report.counterexamples.push_back(sec.name + ": " + f);
  return report;
}

}  // namespace talg
