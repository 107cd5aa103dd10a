#include "talg/htalgebra.hpp"

#include <string>

#include "talg/spectrum.hpp"

namespace talg {

namespace {

void validate_ht_tables(const HTAlgebra& h, const char* who) {
  const int n = h.lattice.n;
  if (h.imp.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument(std::string(who) + ": implication table dimension mismatch");
  if (h.neg.size() != static_cast<size_t>(n) || h.s1.size() != static_cast<size_t>(n) ||
      h.s2.size() != static_cast<size_t>(n))
    throw std::invalid_argument(std::string(who) + ": unary table dimension mismatch");
  for (const auto* tab : {&h.imp, &h.neg, &h.s1, &h.s2})
    for (int v : *tab)
      if (v < 0 || v >= n) throw std::invalid_argument(std::string(who) + ": entry out of range");
}

void require_heyting(const HTAlgebra& h, const char* who) {
  if (!check_heyting_law(h).ok())
    throw std::invalid_argument(std::string(who) + ": implication table fails the Heyting law");
}

}  // namespace

ValidationReport check_heyting_law(const HTAlgebra& h) {
  validate_ht_tables(h, "check_heyting_law");
  if (!check_distributive_lattice(h.lattice).ok())
    throw std::invalid_argument("check_heyting_law: underlying lattice is not a bounded distributive lattice");

  const FiniteLattice& l = h.lattice;
  const int n = l.n;
  ValidationReport r;

  // HT1: imp[a][b] is the greatest c with a ^ c <= b.
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v = h.implies(a, b);
        if (!leq(l, l.meet(a, v), b)) {
          r.add("HT1", {a, b}, "meet(a, a => b) is not below b");
          return;
        }
        for (int c = 0; c < n; ++c)
          if (leq(l, l.meet(a, c), b) && !leq(l, c, v)) {
            r.add("HT1", {a, b, c}, "a => b is not the greatest residual");
            return;
          }
      }
  }();

  for (int a = 0; a < n; ++a)
    if (h.neg[a] != h.implies(a, l.zero)) {
      r.add("neg", {a}, "negation differs from a => 0");
      break;
    }

  return r;
}

ValidationReport check_ht_axioms(const HTAlgebra& h) {
  require_heyting(h, "check_ht_axioms");

  const FiniteLattice& l = h.lattice;
  const int n = l.n;
  auto s = [&](int i, int a) { return i == 1 ? h.s1[a] : h.s2[a]; };

  ValidationReport r;

  // HT2: each Si distributes over meet and join.
  [&] {
    for (int i = 1; i <= 2; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (s(i, l.meet(a, b)) != l.meet(s(i, a), s(i, b))) {
            r.add("HT2", {i, a, b}, "S_i(a ^ b) != S_i a ^ S_i b");
            return;
          }
          if (s(i, l.join(a, b)) != l.join(s(i, a), s(i, b))) {
            r.add("HT2", {i, a, b}, "S_i(a v b) != S_i a v S_i b");
            return;
          }
        }
  }();

  // HT3: S2 commutes with the implication.
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (h.s2[h.implies(a, b)] != h.implies(h.s2[a], h.s2[b])) {
          r.add("HT3", {a, b}, "S2(a => b) != S2 a => S2 b");
          return;
        }
  }();

  // HT4: S1(a => b) = (S1 a => S1 b) ^ (S2 a => S2 b).
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int rhs = l.meet(h.implies(h.s1[a], h.s1[b]), h.implies(h.s2[a], h.s2[b]));
        if (h.s1[h.implies(a, b)] != rhs) {
          r.add("HT4", {a, b}, "S1(a => b) != (S1 a => S1 b) ^ (S2 a => S2 b)");
          return;
        }
      }
  }();

  // HT5: Si Sj a = Sj a.
  [&] {
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int a = 0; a < n; ++a)
          if (s(i, s(j, a)) != s(j, a)) {
            r.add("HT5", {i, j, a}, "S_i S_j a != S_j a");
            return;
          }
  }();

  // HT6: S1 a v a = a.
  for (int a = 0; a < n; ++a)
    if (l.join(h.s1[a], a) != a) {
      r.add("HT6", {a}, "S1 a v a != a");
      break;
    }

  // HT7: S1 a v ~S1 a = 1.
  for (int a = 0; a < n; ++a)
    if (l.join(h.s1[a], h.neg[h.s1[a]]) != l.one) {
      r.add("HT7", {a}, "S1 a v ~S1 a != 1");
      break;
    }

  return r;
}

ValidationReport check_prelinearity(const HTAlgebra& h) {
  require_heyting(h, "check_prelinearity");
  const FiniteLattice& l = h.lattice;
  ValidationReport r;
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b)
      if (l.join(h.implies(a, b), h.implies(b, a)) != l.one) {
        r.add("prelinearity", {a, b}, "(a => b) v (b => a) != 1");
        return r;
      }
  return r;
}

ValidationReport check_s2_double_negation(const HTAlgebra& h) {
  if (!check_ht_axioms(h).ok())
    throw std::invalid_argument("check_s2_double_negation: input fails the axioms");

  const FiniteLattice& l = h.lattice;
  const std::vector<int> booleans = complemented_elements(l);
  ValidationReport r;
  for (int x = 0; x < l.n; ++x) {
    int notnot = h.neg[h.neg[x]];
    int cover = l.one;  // meet of all complemented elements above x; one qualifies
    for (int b : booleans)
      if (leq(l, x, b)) cover = l.meet(cover, b);
    if (h.s2[x] != notnot) {
      r.add("s2-double-negation", {x}, "S2 x != ~~x");
      return r;
    }
    if (notnot != cover) {
      r.add("s2-double-negation", {x}, "~~x != meet of complemented elements above x");
      return r;
    }
  }
  return r;
}

std::pair<bool, bool> maximality_conditions(const HTAlgebra& h, Bits filter, int a) {
  const FiniteLattice& l = h.lattice;
  const int n = l.n;

  auto is_filter = [&](Bits f) {
    if (f == 0) return false;
    for (int x = 0; x < n; ++x) {
      if (!has_bit(f, x)) continue;
      for (int y = 0; y < n; ++y) {
        if (leq(l, x, y) && !has_bit(f, y)) return false;
        if (has_bit(f, y) && !has_bit(f, l.meet(x, y))) return false;
      }
    }
    return true;
  };

  // (a): the filter is maximal among all filters omitting a.
  bool maximal = !has_bit(filter, a);
  if (maximal) {
    const Bits limit = all_bits(n);
    for (Bits f = 1; f <= limit; ++f) {
      if (has_bit(f, a)) continue;
      if ((filter & ~f) == 0 && f != filter && is_filter(f)) {
        maximal = false;
        break;
      }
    }
  }

  // (b): a is outside and every outside x implies back into the filter.
  bool deductive = !has_bit(filter, a);
  if (deductive)
    for (int x = 0; x < n; ++x)
      if (!has_bit(filter, x) && !has_bit(filter, h.implies(x, a))) {
        deductive = false;
        break;
      }

  return {maximal, deductive};
}

ValidationReport check_maximality_equivalence(const HTAlgebra& h) {
  require_heyting(h, "check_maximality_equivalence");
  if (h.lattice.n > kSubsetEnumerationGuard)
    throw GuardError("check_maximality_equivalence: carrier exceeds the subset enumeration guard");

  ValidationReport r;
  auto primes = prime_filters_bruteforce(h.lattice);
  for (size_t m = 0; m < primes.size(); ++m)
    for (int a = 0; a < h.lattice.n; ++a) {
      auto [maximal, deductive] = maximality_conditions(h, primes[m].members, a);
      if (maximal != deductive) {
        r.add("maximality-equivalence", {static_cast<int>(m), a},
              maximal ? "maximal but the implication condition fails"
                      : "implication condition holds but the filter is not maximal");
        return r;
      }
    }
  return r;
}

TStructure to_t(const HTAlgebra& h) {
  if (!check_ht_axioms(h).ok())
    throw std::invalid_argument("to_t: input fails the axioms");

  TStructure t;
  t.lattice = h.lattice;
  t.s1 = h.s1;
  t.s2 = h.s2;
  t.c.resize(h.lattice.n);
  for (int a = 0; a < h.lattice.n; ++a) t.c[a] = h.neg[h.s1[a]];
  return t;
}

}  // namespace talg
