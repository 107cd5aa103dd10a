#include "talg/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace talg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Kind kind_of(const Algebra& a) {
  return std::visit(overloaded{[](const FiniteLattice&) { return Kind::lattice; },
                               [](const TStructure&) { return Kind::tstructure; },
                               [](const HTAlgebra&) { return Kind::htalgebra; }},
                    a);
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::lattice: return "lattice";
    case Kind::tstructure: return "t";
    case Kind::htalgebra: return "ht";
  }
  return "?";
}

const FiniteLattice& lattice_of(const Algebra& a) {
  return std::visit(overloaded{[](const FiniteLattice& l) -> const FiniteLattice& { return l; },
                               [](const TStructure& t) -> const FiniteLattice& { return t.lattice; },
                               [](const HTAlgebra& h) -> const FiniteLattice& { return h.lattice; }},
                    a);
}

int element_count(const Algebra& a) { return lattice_of(a).n; }

std::vector<std::string> signature_of(Kind k) {
  switch (k) {
    case Kind::lattice: return {"meet", "join"};
    case Kind::tstructure: return {"meet", "join", "c", "s1", "s2"};
    case Kind::htalgebra: return {"meet", "join", "imp", "neg", "s1", "s2"};
  }
  return {};
}

bool is_binary_op(const std::string& op) { return op == "meet" || op == "join" || op == "imp"; }

int apply_unary(const Algebra& a, const std::string& op, int x) {
  if (op == "s1" || op == "s2") {
    if (const auto* t = std::get_if<TStructure>(&a)) return op == "s1" ? t->s1[x] : t->s2[x];
    if (const auto* h = std::get_if<HTAlgebra>(&a)) return op == "s1" ? h->s1[x] : h->s2[x];
  }
  if (op == "c")
    if (const auto* t = std::get_if<TStructure>(&a)) return t->c[x];
  if (op == "neg")
    if (const auto* h = std::get_if<HTAlgebra>(&a)) return h->neg[x];
  throw std::invalid_argument("apply_unary: operation '" + op + "' not in this algebra's signature");
}

int apply_binary(const Algebra& a, const std::string& op, int x, int y) {
  const FiniteLattice& l = lattice_of(a);
  if (op == "meet") return l.meet(x, y);
  if (op == "join") return l.join(x, y);
  if (op == "imp")
    if (const auto* h = std::get_if<HTAlgebra>(&a)) return h->implies(x, y);
  throw std::invalid_argument("apply_binary: operation '" + op + "' not in this algebra's signature");
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
  FiniteLattice p;
  p.n = a.n * b.n;
  p.zero = a.zero * b.n + b.zero;
  p.one = a.one * b.n + b.one;
  p.meet_table.resize(static_cast<size_t>(p.n) * p.n);
  p.join_table.resize(static_cast<size_t>(p.n) * p.n);
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int x2 = 0; x2 < b.n; ++x2)
      for (int y1 = 0; y1 < a.n; ++y1)
        for (int y2 = 0; y2 < b.n; ++y2) {
          int x = x1 * b.n + x2, y = y1 * b.n + y2;
          p.meet_table[x * p.n + y] = a.meet(x1, y1) * b.n + b.meet(x2, y2);
          p.join_table[x * p.n + y] = a.join(x1, y1) * b.n + b.join(x2, y2);
        }
  return p;
}

namespace {

std::vector<int> product_unary(const std::vector<int>& ua, const std::vector<int>& ub, int nb) {
  std::vector<int> out(ua.size() * ub.size());
  for (size_t x1 = 0; x1 < ua.size(); ++x1)
    for (size_t x2 = 0; x2 < ub.size(); ++x2)
      out[x1 * ub.size() + x2] = ua[x1] * nb + ub[x2];
  return out;
}

}  // namespace

TStructure direct_product(const TStructure& a, const TStructure& b) {
  TStructure p;
  p.lattice = direct_product(a.lattice, b.lattice);
  p.c = product_unary(a.c, b.c, b.lattice.n);
  p.s1 = product_unary(a.s1, b.s1, b.lattice.n);
  p.s2 = product_unary(a.s2, b.s2, b.lattice.n);
  return p;
}

HTAlgebra direct_product(const HTAlgebra& a, const HTAlgebra& b) {
  HTAlgebra p;
  p.lattice = direct_product(a.lattice, b.lattice);
  p.neg = product_unary(a.neg, b.neg, b.lattice.n);
  p.s1 = product_unary(a.s1, b.s1, b.lattice.n);
  p.s2 = product_unary(a.s2, b.s2, b.lattice.n);
  const int nb = b.lattice.n, n = p.lattice.n;
  p.imp.resize(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < a.lattice.n; ++x1)
    for (int x2 = 0; x2 < nb; ++x2)
      for (int y1 = 0; y1 < a.lattice.n; ++y1)
        for (int y2 = 0; y2 < nb; ++y2) {
          int x = x1 * nb + x2, y = y1 * nb + y2;
          p.imp[x * n + y] = a.implies(x1, y1) * nb + b.implies(x2, y2);
        }
  return p;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (kind_of(a) != kind_of(b))
    throw std::invalid_argument("direct_product: kind mismatch");
  switch (kind_of(a)) {
    case Kind::lattice:
      return direct_product(std::get<FiniteLattice>(a), std::get<FiniteLattice>(b));
    case Kind::tstructure:
      return direct_product(std::get<TStructure>(a), std::get<TStructure>(b));
    case Kind::htalgebra:
      return direct_product(std::get<HTAlgebra>(a), std::get<HTAlgebra>(b));
  }
  throw std::logic_error("direct_product: unreachable");
}

MorphismReport check_homomorphism(const Algebra& a, const Algebra& b,
                                  const std::vector<int>& map,
                                  const std::vector<std::string>& signature) {
  const int na = element_count(a), nb = element_count(b);
  if (map.size() != static_cast<size_t>(na))
    throw std::invalid_argument("check_homomorphism: map is not total on the source");
  for (int v : map)
    if (v < 0 || v >= nb) throw std::out_of_range("check_homomorphism: map image out of range");

  MorphismReport rep;

  // The bounds are nullary operations of every kind; always checked.
  if (map[lattice_of(a).zero] != lattice_of(b).zero)
    rep.violations.push_back({"zero", {}, lattice_of(b).zero, map[lattice_of(a).zero]});
  if (map[lattice_of(a).one] != lattice_of(b).one)
    rep.violations.push_back({"one", {}, lattice_of(b).one, map[lattice_of(a).one]});

  for (const auto& op : signature) {
    if (is_binary_op(op)) {
      for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y) {
          int expected = map[apply_binary(a, op, x, y)];
          int actual = apply_binary(b, op, map[x], map[y]);
          if (expected != actual) rep.violations.push_back({op, {x, y}, expected, actual});
        }
    } else {
      for (int x = 0; x < na; ++x) {
        int expected = map[apply_unary(a, op, x)];
        int actual = apply_unary(b, op, map[x]);
        if (expected != actual) rep.violations.push_back({op, {x}, expected, actual});
      }
    }
  }

  rep.is_homomorphism = rep.violations.empty();
  std::vector<bool> hit(nb, false);
  rep.is_injective = true;
  for (int v : map) {
    if (hit[v]) rep.is_injective = false;
    hit[v] = true;
  }
  rep.is_surjective = std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
  return rep;
}

namespace {

// Permutation-invariant fingerprint used to cut the isomorphism search.
std::vector<int> element_profile(const Algebra& alg, int x) {
  const FiniteLattice& l = lattice_of(alg);
  std::vector<int> p;
  p.push_back(bit_count(downset(l, x)));
  p.push_back(bit_count(upset(l, x)));
  for (const auto& op : signature_of(kind_of(alg))) {
    if (is_binary_op(op)) continue;
    int y = apply_unary(alg, op, x);
    p.push_back(bit_count(downset(l, y)));
    p.push_back(y == x ? 1 : 0);
  }
  return p;
}

struct IsoSearch {
  const Algebra& a;
  const Algebra& b;
  int n;
  std::vector<std::string> unary_ops;
  std::vector<std::string> binary_ops;
  std::vector<std::vector<int>> candidates;  // per source element
  std::vector<int> order;                    // assignment order
  std::vector<int> map;                      // partial, -1 unassigned
  std::vector<bool> used;

  bool consistent(int x) const {
    const int mx = map[x];
    for (const auto& op : unary_ops) {
      int t = apply_unary(a, op, x);
      if (map[t] >= 0 && map[t] != apply_unary(b, op, mx)) return false;
    }
    for (int y = 0; y < n; ++y) {
      if (map[y] < 0) continue;
      for (const auto& op : binary_ops) {
        int t = apply_binary(a, op, x, y);
        if (map[t] >= 0 && map[t] != apply_binary(b, op, mx, map[y])) return false;
        t = apply_binary(a, op, y, x);
        if (map[t] >= 0 && map[t] != apply_binary(b, op, map[y], mx)) return false;
      }
    }
    return true;
  }

  bool extend(size_t pos) {
    if (pos == order.size()) {
      auto rep = check_homomorphism(a, b, map, signature_of(kind_of(a)));
      return rep.is_isomorphism();
    }
    int x = order[pos];
    for (int y : candidates[x]) {
      if (used[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && extend(pos + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Algebra& a, const Algebra& b,
                                                 int size_guard) {
  if (kind_of(a) != kind_of(b))
    throw std::invalid_argument("find_isomorphism: kind mismatch");
  const int n = element_count(a);
  if (n != element_count(b)) return std::nullopt;
  if (n > size_guard)
    throw GuardError("find_isomorphism: carrier exceeds the size guard (" +
                     std::to_string(size_guard) + ")");

  IsoSearch search{a, b, n, {}, {}, {}, {}, std::vector<int>(n, -1),
                   std::vector<bool>(n, false)};
  for (const auto& op : signature_of(kind_of(a)))
    (is_binary_op(op) ? search.binary_ops : search.unary_ops).push_back(op);

  // Bounds are fixed by any isomorphism; profiles restrict the rest.
  std::vector<std::vector<int>> pb(n);
  for (int y = 0; y < n; ++y) pb[y] = element_profile(b, y);
  search.candidates.resize(n);
  for (int x = 0; x < n; ++x) {
    if (x == lattice_of(a).zero) {
      search.candidates[x] = {lattice_of(b).zero};
      continue;
    }
    if (x == lattice_of(a).one) {
      search.candidates[x] = {lattice_of(b).one};
      continue;
    }
    auto pa = element_profile(a, x);
    for (int y = 0; y < n; ++y)
      if (y != lattice_of(b).zero && y != lattice_of(b).one && pa == pb[y])
        search.candidates[x].push_back(y);
    if (search.candidates[x].empty()) return std::nullopt;
  }

  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    return search.candidates[x].size() < search.candidates[y].size();
  });

  if (search.extend(0)) return search.map;
  return std::nullopt;
}

std::vector<int> canonical_key(const Algebra& a) {
  const int n = element_count(a);
  if (n > kCanonicalKeyGuard)
    throw GuardError("canonical_key: carrier exceeds the relabeling guard");

  const FiniteLattice& l = lattice_of(a);
  std::vector<std::string> unary_ops, binary_ops;
  for (const auto& op : signature_of(kind_of(a)))
    (is_binary_op(op) ? binary_ops : unary_ops).push_back(op);

  // perm[old] = new label; zero -> 0 and one -> n-1 (all isomorphisms fix them).
  std::vector<int> middle;
  for (int x = 0; x < n; ++x)
    if (x != l.zero && x != l.one) middle.push_back(x);
  std::sort(middle.begin(), middle.end());

  std::vector<int> best;
  std::vector<int> perm(n), inv(n), key;
  do {
    perm[l.zero] = 0;
    if (l.one != l.zero) perm[l.one] = n - 1;
    for (size_t i = 0; i < middle.size(); ++i) perm[middle[i]] = static_cast<int>(i) + 1;
    for (int x = 0; x < n; ++x) inv[perm[x]] = x;

    key.clear();
    key.push_back(static_cast<int>(kind_of(a)));
    key.push_back(n);
    for (const auto& op : binary_ops)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) key.push_back(perm[apply_binary(a, op, inv[x], inv[y])]);
    for (const auto& op : unary_ops)
      for (int x = 0; x < n; ++x) key.push_back(perm[apply_unary(a, op, inv[x])]);

    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(middle.begin(), middle.end()));

  return best;
}

}  // namespace talg
