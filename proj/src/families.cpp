#include "talg/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "talg/algebra.hpp"

namespace talg {

TStructure make_bt() {
  TStructure t;
  t.lattice = chain_lattice(3);
  t.s1 = {0, 0, 2};
  t.s2 = {0, 2, 2};
  t.c = {2, 2, 0};
  return t;
}

TStructure make_b() {
  TStructure t;
  t.lattice = chain_lattice(2);
  t.s1 = {0, 1};
  t.s2 = {0, 1};
  t.c = {1, 0};
  return t;
}

RoughAlgebra from_approximation_space(const std::vector<std::vector<int>>& classes) {
  int points = 0;
  for (const auto& cls : classes) points += static_cast<int>(cls.size());
  if (points > 16)
    throw GuardError("from_approximation_space: too many points for full subset generation");
  ApproximationSpace space = make_space(points, classes);
  std::vector<Bits> generators;
  for (Bits x = 0; x <= all_bits(points); ++x) {
    generators.push_back(x);
    if (x == all_bits(points)) break;
  }
  return rough_algebra(space, generators);
}

bool ClosureReport::satisfied(const std::string& axiom) const {
  return std::find(satisfied_axioms.begin(), satisfied_axioms.end(), axiom) !=
         satisfied_axioms.end();
}

const ClosureReport::Failure* ClosureReport::failure(const std::string& axiom) const {
  for (const auto& f : failed_axioms)
    if (f.axiom == axiom) return &f;
  return nullptr;
}

namespace {

// Shared axiom survey over a closed carrier presented as index tables.
// T2 is reported as its four half-equations.
void survey_axioms(const TStructure& t, ClosureReport& out) {
  const FiniteLattice& l = t.lattice;
  const int n = l.n;
  auto s = [&](int i, int a) { return i == 1 ? t.s1[a] : t.s2[a]; };

  auto verdict = [&](const std::string& axiom, std::optional<std::vector<int>> witness) {
    if (witness)
      out.failed_axioms.push_back({axiom, *witness});
    else
      out.satisfied_axioms.push_back(axiom);
  };

  {
    auto rep = check_distributive_lattice(l);
    verdict("T1", rep.ok() ? std::nullopt : std::optional(rep.violations.front().witness));
  }

  auto scan_half = [&](int i, bool meet_half) -> std::optional<std::vector<int>> {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = meet_half ? s(i, l.meet(a, b)) : s(i, l.join(a, b));
        int rhs = meet_half ? l.meet(s(i, a), s(i, b)) : l.join(s(i, a), s(i, b));
        if (lhs != rhs) return std::vector<int>{a, b};
      }
    return std::nullopt;
  };
  verdict("T2-s1-meet", scan_half(1, true));
  verdict("T2-s1-join", scan_half(1, false));
  verdict("T2-s2-meet", scan_half(2, true));
  verdict("T2-s2-join", scan_half(2, false));

  {
    std::optional<std::vector<int>> w;
    for (int a = 0; a < n && !w; ++a)
      if (l.meet(t.s1[a], t.c[a]) != l.zero || l.join(t.s1[a], t.c[a]) != l.one)
        w = std::vector<int>{a};
    verdict("T3", w);
  }
  {
    std::optional<std::vector<int>> w;
    for (int i = 1; i <= 2 && !w; ++i)
      for (int j = 1; j <= 2 && !w; ++j)
        for (int a = 0; a < n; ++a)
          if (s(i, s(j, a)) != s(j, a)) {
            w = std::vector<int>{i, j, a};
            break;
          }
    verdict("T4", w);
  }
  {
    std::optional<std::vector<int>> w;
    if (t.s1[l.zero] != l.zero)
      w = std::vector<int>{l.zero};
    else if (t.s1[l.one] != l.one)
      w = std::vector<int>{l.one};
    verdict("T5", w);
  }
  {
    std::optional<std::vector<int>> w;
    for (int a = 0; a < n && !w; ++a)
      for (int b = a + 1; b < n; ++b)
        if (t.s1[a] == t.s1[b] && t.s2[a] == t.s2[b]) {
          w = std::vector<int>{a, b};
          break;
        }
    verdict("T6", w);
  }
  {
    std::optional<std::vector<int>> w;
    for (int a = 0; a < n && !w; ++a)
      if (!leq(l, t.s1[a], t.s2[a])) w = std::vector<int>{a};
    verdict("T7", w);
  }
}

}  // namespace

ClosureReport closure_from_involution(int points, const Involution& g,
                                      const std::vector<Bits>& generators) {
  if (g.points() != points)
    throw std::invalid_argument("closure_from_involution: involution size mismatch");
  for (int p = 0; p < points; ++p)
    if (g(g(p)) != p) throw std::invalid_argument("closure_from_involution: map is not an involution");

  const Bits everything = all_bits(points);
  std::set<Bits> carrier{0, everything};
  for (Bits x : generators) {
    if (!is_subset(x, everything))
      throw std::out_of_range("closure_from_involution: generator outside the point range");
    carrier.insert(x);
  }

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bits> snapshot(carrier.begin(), carrier.end());
    for (Bits x : snapshot) {
      auto ops = set_operators(g, x);
      for (Bits v : {ops.s1, ops.c, ops.s2}) grew |= carrier.insert(v).second;
      for (Bits y : snapshot) {
        grew |= carrier.insert(x & y).second;
        grew |= carrier.insert(x | y).second;
      }
    }
    if (carrier.size() > static_cast<size_t>(kClosureCap))
      throw GuardError("closure_from_involution: closure exceeded the cap");
  }

  std::vector<Bits> sorted(carrier.begin(), carrier.end());
  auto idx = [&](Bits x) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  };

  const int n = static_cast<int>(sorted.size());
  TStructure t;
  t.lattice.n = n;
  t.lattice.zero = idx(0);
  t.lattice.one = idx(everything);
  t.lattice.meet_table.resize(static_cast<size_t>(n) * n);
  t.lattice.join_table.resize(static_cast<size_t>(n) * n);
  t.c.resize(n);
  t.s1.resize(n);
  t.s2.resize(n);
  for (int i = 0; i < n; ++i) {
    auto ops = set_operators(g, sorted[i]);
    t.s1[i] = idx(ops.s1);
    t.c[i] = idx(ops.c);
    t.s2[i] = idx(ops.s2);
    for (int j = 0; j < n; ++j) {
      t.lattice.meet_table[i * n + j] = idx(sorted[i] & sorted[j]);
      t.lattice.join_table[i * n + j] = idx(sorted[i] | sorted[j]);
    }
  }

  ClosureReport report;
  for (Bits x : sorted) report.carrier_sets.push_back(bit_indices(x));
  survey_axioms(t, report);
  return report;
}

ClosureReport closure_from_relation(int points, const RelationElement& base,
                                    const std::vector<RelationElement>& generators) {
  if (!rel_symmetric(base))
    throw std::invalid_argument("closure_from_relation: base relation is not symmetric");
  for (auto [p, q] : base.pairs)
    if (p < 0 || p >= points || q < 0 || q >= points)
      throw std::out_of_range("closure_from_relation: base pair outside the point range");

  std::set<RelationElement> carrier{RelationElement{}, base};
  for (const auto& r : generators) {
    if (!rel_subset(r, base))
      throw std::invalid_argument("closure_from_relation: generator not within the base");
    carrier.insert(r);
  }

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RelationElement> snapshot(carrier.begin(), carrier.end());
    for (const auto& x : snapshot) {
      auto ops = relation_operators(base, x);
      for (const auto& v : {ops.s1, ops.c, ops.s2}) grew |= carrier.insert(v).second;
      for (const auto& y : snapshot) {
        grew |= carrier.insert(rel_intersect(x, y)).second;
        grew |= carrier.insert(rel_union(x, y)).second;
      }
    }
    if (carrier.size() > static_cast<size_t>(kClosureCap))
      throw GuardError("closure_from_relation: closure exceeded the cap");
  }

  std::vector<RelationElement> sorted(carrier.begin(), carrier.end());
  auto idx = [&](const RelationElement& x) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  };

  const int n = static_cast<int>(sorted.size());
  TStructure t;
  t.lattice.n = n;
  t.lattice.zero = idx(RelationElement{});
  t.lattice.one = idx(base);
  t.lattice.meet_table.resize(static_cast<size_t>(n) * n);
  t.lattice.join_table.resize(static_cast<size_t>(n) * n);
  t.c.resize(n);
  t.s1.resize(n);
  t.s2.resize(n);
  for (int i = 0; i < n; ++i) {
    auto ops = relation_operators(base, sorted[i]);
    t.s1[i] = idx(ops.s1);
    t.c[i] = idx(ops.c);
    t.s2[i] = idx(ops.s2);
    for (int j = 0; j < n; ++j) {
      t.lattice.meet_table[i * n + j] = idx(rel_intersect(sorted[i], sorted[j]));
      t.lattice.join_table[i * n + j] = idx(rel_union(sorted[i], sorted[j]));
    }
  }

  ClosureReport report;
  for (const auto& r : sorted) report.carrier_relations.push_back(r.pairs);
  survey_axioms(t, report);
  return report;
}

namespace {

// All strict partial orders on k labeled elements, encoded as k*k bit
// matrices (bit i*k+j means i < j). Brute force over the off-diagonal cells.
std::vector<Bits> strict_orders(int k) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) cells.emplace_back(i, j);

  std::vector<Bits> orders;
  const Bits limit = all_bits(static_cast<int>(cells.size()));
  for (Bits choice = 0;; ++choice) {
    Bits rel = 0;
    for (size_t c = 0; c < cells.size(); ++c)
      if (has_bit(choice, static_cast<int>(c))) rel |= bit(cells[c].first * k + cells[c].second);

    auto lt = [&](int i, int j) { return has_bit(rel, i * k + j); };
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        if (lt(i, j) && lt(j, i)) ok = false;
        for (int m = 0; m < k && ok; ++m)
          if (lt(i, j) && lt(j, m) && !lt(i, m)) ok = false;
      }
    if (ok) orders.push_back(rel);
    if (choice == limit) break;
  }
  return orders;
}

FiniteLattice downset_lattice(int k, Bits order) {
  auto lt = [&](int i, int j) { return has_bit(order, i * k + j); };
  std::vector<Bits> downsets;
  for (Bits s = 0;; ++s) {
    bool closed = true;
    for (int j = 0; j < k && closed; ++j) {
      if (!has_bit(s, j)) continue;
      for (int i = 0; i < k; ++i)
        if (lt(i, j) && !has_bit(s, i)) {
          closed = false;
          break;
        }
    }
    if (closed) downsets.push_back(s);
    if (s == all_bits(k)) break;
  }
  std::sort(downsets.begin(), downsets.end());

  const int n = static_cast<int>(downsets.size());
  auto idx = [&](Bits s) {
    return static_cast<int>(std::lower_bound(downsets.begin(), downsets.end(), s) -
                            downsets.begin());
  };
  FiniteLattice l;
  l.n = n;
  l.zero = idx(0);
  l.one = idx(all_bits(k));
  l.meet_table.resize(static_cast<size_t>(n) * n);
  l.join_table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      l.meet_table[i * n + j] = idx(downsets[i] & downsets[j]);
      l.join_table[i * n + j] = idx(downsets[i] | downsets[j]);
    }
  return l;
}

}  // namespace

std::vector<FiniteLattice> enumerate_distributive_lattices(int n) {
  if (n < 1 || n > kEnumerationGuard)
    throw GuardError("enumerate_distributive_lattices: size outside [1, " +
                     std::to_string(kEnumerationGuard) + "]");

  std::vector<FiniteLattice> out;
  std::set<std::vector<int>> seen;
  // Every skeleton is the downset lattice of the poset of its
  // join-irreducibles, which has between log2(n) and n-1 elements.
  for (int k = 0; k <= n - 1; ++k) {
    if ((1 << k) < n) continue;
    for (Bits order : strict_orders(k)) {
      FiniteLattice l = downset_lattice(k, order);
      if (l.n != n) continue;
      if (seen.insert(canonical_key(l)).second) out.push_back(std::move(l));
    }
  }
  return out;
}

std::vector<TStructure> enumerate_t_structures(int n) {
  if (n < 1 || n > kEnumerationGuard)
    throw GuardError("enumerate_t_structures: size outside [1, " +
                     std::to_string(kEnumerationGuard) + "]");

  std::vector<TStructure> out;
  std::set<std::vector<int>> seen;

  for (const FiniteLattice& l : enumerate_distributive_lattices(n)) {
    const std::vector<int> booleans = complemented_elements(l);
    Bits boolean_mask = bits_of(booleans);

    // Candidate operators: (0,1)-lattice endomorphisms into the complemented
    // elements that fix every complemented element. These conditions hold in
    // any valid structure, so the pruning loses nothing.
    std::vector<int> free_elems;
    for (int a = 0; a < n; ++a)
      if (!has_bit(boolean_mask, a)) free_elems.push_back(a);

    std::vector<std::vector<int>> maps;
    std::vector<int> table(n);
    for (int a = 0; a < n; ++a) table[a] = a;  // complemented elements fixed
    auto emit = [&](auto&& self, size_t pos) -> void {
      if (pos == free_elems.size()) {
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            if (table[l.meet(a, b)] != l.meet(table[a], table[b])) return;
            if (table[l.join(a, b)] != l.join(table[a], table[b])) return;
          }
        maps.push_back(table);
        return;
      }
      for (int v : booleans) {
        table[free_elems[pos]] = v;
        self(self, pos + 1);
      }
    };
    emit(emit, 0);

    for (const auto& s1 : maps)
      for (const auto& s2 : maps) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = leq(l, s1[a], s2[a]);
        for (int a = 0; a < n && ok; ++a)
          for (int b = a + 1; b < n; ++b)
            if (s1[a] == s1[b] && s2[a] == s2[b]) {
              ok = false;
              break;
            }
        if (!ok) continue;

        TStructure t;
        t.lattice = l;
        t.s1 = s1;
        t.s2 = s2;
        t.c.resize(n);
        for (int a = 0; a < n; ++a) t.c[a] = *complement_of(l, s1[a]);
        if (!check_t_axioms(t).ok()) continue;
        if (seen.insert(canonical_key(t)).second) out.push_back(std::move(t));
      }
  }
  return out;
}

}  // namespace talg
