#include "talg/tstructure.hpp"

#include <algorithm>

#include "talg/htalgebra.hpp"

namespace talg {

namespace {

void validate_unary_tables(const TStructure& t, const char* who) {
  const size_t n = static_cast<size_t>(t.lattice.n);
  if (t.c.size() != n || t.s1.size() != n || t.s2.size() != n)
    throw std::invalid_argument(std::string(who) + ": unary table dimension mismatch");
  for (const auto* tab : {&t.c, &t.s1, &t.s2})
    for (int v : *tab)
      if (v < 0 || v >= t.lattice.n)
        throw std::invalid_argument(std::string(who) + ": unary entry out of range");
}

}  // namespace

ValidationReport check_t_axioms(const TStructure& t) {
  validate_unary_tables(t, "check_t_axioms");
  if (!check_distributive_lattice(t.lattice).ok())
    throw std::invalid_argument("check_t_axioms: underlying lattice is not a bounded distributive lattice");

  const FiniteLattice& l = t.lattice;
  const int n = l.n;
  auto s = [&](int i, int a) { return i == 1 ? t.s1[a] : t.s2[a]; };

  ValidationReport r;

  // T2: each Si distributes over meet and join.
  [&] {
    for (int i = 1; i <= 2; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (s(i, l.meet(a, b)) != l.meet(s(i, a), s(i, b))) {
            r.add("T2", {i, a, b}, "S_i(a ^ b) != S_i a ^ S_i b");
            return;
          }
          if (s(i, l.join(a, b)) != l.join(s(i, a), s(i, b))) {
            r.add("T2", {i, a, b}, "S_i(a v b) != S_i a v S_i b");
            return;
          }
        }
  }();

  // T3: C complements S1 pointwise.
  [&] {
    for (int a = 0; a < n; ++a) {
      if (l.meet(t.s1[a], t.c[a]) != l.zero) {
        r.add("T3", {a}, "S1 a ^ C a != 0");
        return;
      }
      if (l.join(t.s1[a], t.c[a]) != l.one) {
        r.add("T3", {a}, "S1 a v C a != 1");
        return;
      }
    }
  }();

  // T4: Si Sj a = Sj a.
  [&] {
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int a = 0; a < n; ++a)
          if (s(i, s(j, a)) != s(j, a)) {
            r.add("T4", {i, j, a}, "S_i S_j a != S_j a");
            return;
          }
  }();

  // T5: S1 fixes the bounds.
  if (t.s1[l.zero] != l.zero)
    r.add("T5", {l.zero}, "S1 0 != 0");
  else if (t.s1[l.one] != l.one)
    r.add("T5", {l.one}, "S1 1 != 1");

  // T6: determination by the operator pair.
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (t.s1[a] == t.s1[b] && t.s2[a] == t.s2[b]) {
          r.add("T6", {a, b}, "distinct elements share (S1, S2) images");
          return;
        }
  }();

  // T7: S1 a <= S2 a.
  for (int a = 0; a < n; ++a)
    if (!leq(l, t.s1[a], t.s2[a])) {
      r.add("T7", {a}, "S1 a is not below S2 a");
      break;
    }

  return r;
}

ValidationReport check_derived_props(const TStructure& t) {
  validate_unary_tables(t, "check_derived_props");
  const FiniteLattice& l = t.lattice;
  const int n = l.n;
  auto s = [&](int i, int a) { return i == 1 ? t.s1[a] : t.s2[a]; };

  ValidationReport r;

  // T8: S2 fixes the bounds.
  if (t.s2[l.zero] != l.zero)
    r.add("T8", {l.zero}, "S2 0 != 0");
  else if (t.s2[l.one] != l.one)
    r.add("T8", {l.one}, "S2 1 != 1");

  // T9: a <= b iff both operator images are ordered.
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool lhs = leq(l, a, b);
        bool rhs = leq(l, t.s1[a], t.s1[b]) && leq(l, t.s2[a], t.s2[b]);
        if (lhs != rhs) {
          r.add("T9", {a, b}, "order and operator-image order disagree");
          return;
        }
      }
  }();

  // T10: S1 a <= a <= S2 a.
  for (int a = 0; a < n; ++a)
    if (!leq(l, t.s1[a], a) || !leq(l, a, t.s2[a])) {
      r.add("T10", {a}, "S1 a <= a <= S2 a fails");
      break;
    }

  // T11: C gives Boolean complements on the operator images.
  [&] {
    for (int i = 1; i <= 2; ++i)
      for (int a = 0; a < n; ++a) {
        int x = s(i, a);
        if (l.meet(x, t.c[x]) != l.zero || l.join(x, t.c[x]) != l.one) {
          r.add("T11", {i, a}, "C S_i a is not the complement of S_i a");
          return;
        }
      }
  }();

  // Common operator image = complemented elements.
  {
    auto img = [&](const std::vector<int>& tab) {
      std::vector<int> v(tab.begin(), tab.end());
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    };
    std::vector<int> i1 = img(t.s1), i2 = img(t.s2), b = complemented_elements(l);
    if (i1 != i2)
      r.add("operator-image", {}, "S1 and S2 have different images");
    else if (i1 != b)
      r.add("operator-image", {}, "operator image differs from the complemented elements");
  }

  return r;
}

std::pair<std::vector<int>, std::vector<int>> operator_images(const TStructure& t) {
  if (!check_t_axioms(t).ok())
    throw std::invalid_argument("operator_images: input fails the structure axioms");
  auto img = [&](const std::vector<int>& tab) {
    std::vector<int> v(tab.begin(), tab.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  return {img(t.s1), img(t.s2)};
}

HTAlgebra to_ht(const TStructure& t) {
  if (!check_t_axioms(t).ok())
    throw std::invalid_argument("to_ht: input fails the structure axioms");

  const FiniteLattice& l = t.lattice;
  const int n = l.n;
  HTAlgebra h;
  h.lattice = l;
  h.s1 = t.s1;
  h.s2 = t.s2;
  h.imp.resize(static_cast<size_t>(n) * n);
  h.neg.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int k1 = l.join(t.c[t.s1[a]], t.s1[b]);
      int k2 = l.join(t.c[t.s2[a]], t.s2[b]);
      h.imp[a * n + b] = l.join(b, l.meet(k1, k2));
    }
  for (int a = 0; a < n; ++a) h.neg[a] = h.implies(a, l.zero);
  return h;
}

}  // namespace talg
