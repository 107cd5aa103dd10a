#include "talg/relational.hpp"

#include <algorithm>
#include <stdexcept>

#include "talg/htalgebra.hpp"

namespace talg {

Bits Involution::apply(Bits x) const {
  Bits out = 0;
  for (int p = 0; p < points(); ++p)
    if (has_bit(x, p)) out |= bit(map[p]);
  return out;
}

bool RelationElement::contains(int p, int q) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{p, q});
}

RelationElement make_relation(std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return {std::move(pairs)};
}

RelationElement rel_inverse(const RelationElement& r) {
  std::vector<std::pair<int, int>> out;
  out.reserve(r.pairs.size());
  for (auto [p, q] : r.pairs) out.emplace_back(q, p);
  return make_relation(std::move(out));
}

RelationElement rel_intersect(const RelationElement& a, const RelationElement& b) {
  std::vector<std::pair<int, int>> out;
  std::set_intersection(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                        std::back_inserter(out));
  return {std::move(out)};
}

RelationElement rel_union(const RelationElement& a, const RelationElement& b) {
  std::vector<std::pair<int, int>> out;
  std::set_union(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                 std::back_inserter(out));
  return {std::move(out)};
}

RelationElement rel_minus(const RelationElement& a, const RelationElement& b) {
  std::vector<std::pair<int, int>> out;
  std::set_difference(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                      std::back_inserter(out));
  return {std::move(out)};
}

bool rel_subset(const RelationElement& a, const RelationElement& b) {
  return std::includes(b.pairs.begin(), b.pairs.end(), a.pairs.begin(), a.pairs.end());
}

bool rel_symmetric(const RelationElement& r) { return r == rel_inverse(r); }

int RelAlgebra::index_of(const RelationElement& r) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), r);
  if (it == carrier.end() || !(*it == r))
    throw std::out_of_range("RelAlgebra: relation not in the carrier");
  return static_cast<int>(it - carrier.begin());
}

Involution involution_from_spectrum(const Spectrum& spec) {
  Involution g;
  g.map.assign(spec.filters.size(), -1);
  for (const auto& block : spec.blocks) {
    if (!block.is_chain || block.oversized())
      throw std::invalid_argument(
          "involution_from_spectrum: a comparability block is not a chain of at most two filters");
    if (block.filters.size() == 1) {
      g.map[block.filters[0]] = block.filters[0];
    } else {
      g.map[block.filters[0]] = block.filters[1];
      g.map[block.filters[1]] = block.filters[0];
    }
  }
  return g;
}

SetOperatorImages set_operators(const Involution& g, Bits x) {
  if (!is_subset(x, all_bits(g.points())))
    throw std::out_of_range("set_operators: set outside the point range");
  const Bits gx = g.apply(x);
  SetOperatorImages out;
  out.s1 = x & gx;
  out.c = all_bits(g.points()) & ~out.s1;
  out.s2 = x | gx;
  return out;
}

ValidationReport check_f_preservation(const HTAlgebra& h) {
  if (!check_ht_axioms(h).ok())
    throw std::invalid_argument("check_f_preservation: input fails the axioms");

  const Spectrum spec = chain_decomposition(h.lattice);
  const Involution g = involution_from_spectrum(spec);
  const std::vector<Bits> f = stone_map(h.lattice, spec.filters);
  const TStructure t = to_t(h);

  ValidationReport r;
  auto first = [&](const char* law, auto&& holds, const char* detail) {
    for (int a = 0; a < h.lattice.n; ++a)
      if (!holds(a)) {
        r.add(law, {a}, detail);
        return;
      }
  };

  first("s1-preservation",
        [&](int a) { return f[t.s1[a]] == set_operators(g, f[a]).s1; },
        "f(S1 a) != S1 f(a)");
  first("c-preservation",
        [&](int a) { return f[t.c[a]] == set_operators(g, f[a]).c; },
        "f(C a) != C f(a)");
  // The S2 equality decomposed into its four inclusions.
  first("s2-step-1",
        [&](int a) { return is_subset(f[t.s2[a]], set_operators(g, f[t.s2[a]]).s2); },
        "f(S2 a) not inside S2(f(S2 a))");
  first("s2-step-2",
        [&](int a) { return is_subset(set_operators(g, f[t.s2[a]]).s2, f[t.s2[a]]); },
        "S2(f(S2 a)) not inside f(S2 a)");
  first("s2-step-3",
        [&](int a) { return is_subset(f[t.s2[a]], set_operators(g, f[a]).s2); },
        "f(S2 a) not inside S2 f(a)");
  first("s2-step-4",
        [&](int a) { return is_subset(set_operators(g, f[a]).s2, f[t.s2[a]]); },
        "S2 f(a) not inside f(S2 a)");
  return r;
}

RelationElement build_g_relation(const Involution& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.points());
  for (int p = 0; p < g.points(); ++p) pairs.emplace_back(p, g(p));
  return make_relation(std::move(pairs));
}

RelationOperatorImages relation_operators(const RelationElement& base, const RelationElement& r) {
  if (!rel_symmetric(base))
    throw std::invalid_argument("relation_operators: base relation is not symmetric");
  if (!rel_subset(r, base))
    throw std::invalid_argument("relation_operators: relation not within the base");
  RelationOperatorImages out;
  out.s1 = rel_intersect(r, rel_inverse(r));
  out.s2 = rel_union(r, rel_inverse(r));
  out.c = rel_minus(base, out.s1);
  return out;
}

namespace {

RelationElement cartesian_with_all(Bits left, int points) {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < points; ++p) {
    if (!has_bit(left, p)) continue;
    for (int q = 0; q < points; ++q) pairs.emplace_back(p, q);
  }
  return make_relation(std::move(pairs));
}

RelationElement all_cartesian_with(Bits right, int points) {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < points; ++p)
    for (int q = 0; q < points; ++q)
      if (has_bit(right, q)) pairs.emplace_back(p, q);
  return make_relation(std::move(pairs));
}

}  // namespace

RelationalRepresentation represent_relational(const HTAlgebra& h) {
  if (!check_ht_axioms(h).ok())
    throw std::invalid_argument("represent_relational: input fails the axioms");
  if (h.lattice.degenerate())
    throw std::invalid_argument("represent_relational: degenerate algebra has no representation");

  RelationalRepresentation rep;
  rep.spectrum = chain_decomposition(h.lattice);
  rep.g = involution_from_spectrum(rep.spectrum);
  rep.g_relation = build_g_relation(rep.g);
  rep.preservation = check_f_preservation(h);
  if (!rep.preservation.ok())
    throw std::logic_error("represent_relational: the point map does not intertwine the operators");

  const int n = h.lattice.n;
  const int points = rep.g.points();
  const std::vector<Bits> f = stone_map(h.lattice, rep.spectrum.filters);

  // h(a) = G n (f(a) x E), kept literal; the one-pair-per-point form is the
  // independent route and must agree.
  rep.literal_matches_simplified = true;
  rep.image.reserve(n);
  for (int a = 0; a < n; ++a) {
    RelationElement literal =
        rel_intersect(rep.g_relation, cartesian_with_all(f[a], points));
    std::vector<std::pair<int, int>> simple;
    for (int p = 0; p < points; ++p)
      if (has_bit(f[a], p)) simple.emplace_back(p, rep.g(p));
    if (!(literal == make_relation(std::move(simple))))
      rep.literal_matches_simplified = false;
    rep.image.push_back(std::move(literal));
  }
  if (!rep.literal_matches_simplified)
    throw std::logic_error("represent_relational: literal and simplified forms disagree");

  // G n (g(f(a)) x E) = G n (E x f(a)), pointwise per element.
  for (int a = 0; a < n; ++a) {
    RelationElement lhs =
        rel_intersect(rep.g_relation, cartesian_with_all(rep.g.apply(f[a]), points));
    RelationElement rhs = rel_intersect(rep.g_relation, all_cartesian_with(f[a], points));
    if (!(lhs == rhs))
      throw std::logic_error("represent_relational: the inversion lemma fails");
  }

  RelAlgebra& alg = rep.algebra;
  alg.base = rep.g_relation;
  alg.carrier = rep.image;
  std::sort(alg.carrier.begin(), alg.carrier.end());
  alg.carrier.erase(std::unique(alg.carrier.begin(), alg.carrier.end()), alg.carrier.end());

  const int m = static_cast<int>(alg.carrier.size());
  TStructure& t = alg.structure;
  t.lattice.n = m;
  t.lattice.zero = alg.index_of(RelationElement{});
  t.lattice.one = alg.index_of(rep.g_relation);
  t.lattice.meet_table.resize(static_cast<size_t>(m) * m);
  t.lattice.join_table.resize(static_cast<size_t>(m) * m);
  t.c.resize(m);
  t.s1.resize(m);
  t.s2.resize(m);
  for (int i = 0; i < m; ++i) {
    auto ops = relation_operators(alg.base, alg.carrier[i]);
    t.s1[i] = alg.index_of(ops.s1);
    t.s2[i] = alg.index_of(ops.s2);
    t.c[i] = alg.index_of(ops.c);
    for (int j = 0; j < m; ++j) {
      t.lattice.meet_table[i * m + j] = alg.index_of(rel_intersect(alg.carrier[i], alg.carrier[j]));
      t.lattice.join_table[i * m + j] = alg.index_of(rel_union(alg.carrier[i], alg.carrier[j]));
    }
  }

  rep.element_to_rel.reserve(n);
  for (int a = 0; a < n; ++a) rep.element_to_rel.push_back(alg.index_of(rep.image[a]));

  TStructure source = to_t(h);
  rep.morphism = check_homomorphism(source, t, rep.element_to_rel, signature_of(Kind::tstructure));
  if (!rep.morphism.is_homomorphism || !rep.morphism.is_injective)
    throw std::logic_error("represent_relational: the relation map is not an embedding");

  if (!check_t_axioms(t).ok())
    throw std::logic_error("represent_relational: image fails the structure axioms");

  auto iso = find_isomorphism(t, source);
  if (!iso) throw std::logic_error("represent_relational: image is not isomorphic to the input");
  rep.isomorphism = *iso;
  return rep;
}

SubrelationSweep check_subrelation_inclusions(const RelationElement& base) {
  if (base.size() > kRelationSweepGuard)
    throw GuardError("check_subrelation_inclusions: base exceeds the sweep guard");
  if (!rel_symmetric(base))
    throw std::invalid_argument("check_subrelation_inclusions: base relation is not symmetric");

  const int k = base.size();
  // Bit i of a mask stands for base.pairs[i] (pairs are in canonical order).
  std::vector<int> inv_index(k);
  for (int i = 0; i < k; ++i) {
    auto [p, q] = base.pairs[i];
    auto it = std::lower_bound(base.pairs.begin(), base.pairs.end(), std::pair{q, p});
    inv_index[i] = static_cast<int>(it - base.pairs.begin());
  }
  auto invert = [&](Bits m) {
    Bits out = 0;
    for (int i = 0; i < k; ++i)
      if (has_bit(m, i)) out |= bit(inv_index[i]);
    return out;
  };
  auto to_relation = [&](Bits m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
      if (has_bit(m, i)) pairs.push_back(base.pairs[i]);
    return make_relation(std::move(pairs));
  };

  SubrelationSweep sweep;
  const Bits limit = all_bits(k);
  for (Bits r = 0; r <= limit; ++r) {
    const Bits s2r = r | invert(r);
    const Bits s1r = r & invert(r);
    for (Bits s = 0; s <= limit; ++s) {
      ++sweep.pairs_checked;
      const Bits s2_of_meet = (r & s) | invert(r & s);
      const Bits s2_rhs = s2r & (s | invert(s));
      if (!is_subset(s2_of_meet, s2_rhs)) {
        sweep.report.add("s2-meet-inclusion",
                         {static_cast<int>(r), static_cast<int>(s)},
                         "S2(R n S) not inside S2 R n S2 S");
        return sweep;
      }
      if (!sweep.s2_equality_counterexample && s2_of_meet != s2_rhs)
        sweep.s2_equality_counterexample = {to_relation(r), to_relation(s)};

      const Bits s1_of_join = (r | s) & invert(r | s);
      const Bits s1_rhs = s1r | (s & invert(s));
      if (!is_subset(s1_rhs, s1_of_join)) {
        sweep.report.add("s1-join-inclusion",
                         {static_cast<int>(r), static_cast<int>(s)},
                         "S1(R u S) does not contain S1 R u S1 S");
        return sweep;
      }
      if (!sweep.s1_equality_counterexample && s1_of_join != s1_rhs)
        sweep.s1_equality_counterexample = {to_relation(r), to_relation(s)};
    }
  }
  return sweep;
}

}  // namespace talg
