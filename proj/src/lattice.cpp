#include "talg/lattice.hpp"

#include <algorithm>
#include <string>

namespace talg {

namespace {

void require_index(const FiniteLattice& l, int a, const char* who) {
  if (a < 0 || a >= l.n)
    throw std::out_of_range(std::string(who) + ": element index out of range");
}

void require_law_guard(const FiniteLattice& l, const char* who) {
  if (l.n > kLawCheckGuard)
    throw GuardError(std::string(who) + ": carrier exceeds the law-check guard (" +
                     std::to_string(kLawCheckGuard) + ")");
}

}  // namespace

FiniteLattice chain_lattice(int n) {
  if (n < 1) throw std::invalid_argument("chain_lattice: n must be >= 1");
  FiniteLattice l;
  l.n = n;
  l.zero = 0;
  l.one = n - 1;
  l.meet_table.resize(static_cast<size_t>(n) * n);
  l.join_table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      l.meet_table[a * n + b] = std::min(a, b);
      l.join_table[a * n + b] = std::max(a, b);
    }
  return l;
}

void validate_structure(const FiniteLattice& l) {
  if (l.n < 1) throw std::invalid_argument("lattice: n must be >= 1");
  const size_t cells = static_cast<size_t>(l.n) * l.n;
  if (l.meet_table.size() != cells || l.join_table.size() != cells)
    throw std::invalid_argument("lattice: table dimension mismatch");
  for (int v : l.meet_table)
    if (v < 0 || v >= l.n) throw std::invalid_argument("lattice: meet entry out of range");
  for (int v : l.join_table)
    if (v < 0 || v >= l.n) throw std::invalid_argument("lattice: join entry out of range");
  if (l.zero < 0 || l.zero >= l.n || l.one < 0 || l.one >= l.n)
    throw std::invalid_argument("lattice: zero/one out of range");
  for (int a = 0; a < l.n; ++a) {
    if (l.join(l.zero, a) != a || l.meet(l.zero, a) != l.zero)
      throw std::invalid_argument("lattice: declared zero inconsistent with tables");
    if (l.meet(l.one, a) != a || l.join(l.one, a) != l.one)
      throw std::invalid_argument("lattice: declared one inconsistent with tables");
  }
}

bool leq(const FiniteLattice& l, int a, int b) {
  require_index(l, a, "leq");
  require_index(l, b, "leq");
  return l.meet(a, b) == a;
}

ValidationReport check_distributive_lattice(const FiniteLattice& l) {
  require_law_guard(l, "check_distributive_lattice");
  const size_t cells = static_cast<size_t>(l.n) * l.n;
  if (l.meet_table.size() != cells || l.join_table.size() != cells)
    throw std::invalid_argument("check_distributive_lattice: table dimension mismatch");
  for (int v : l.meet_table)
    if (v < 0 || v >= l.n) throw std::invalid_argument("check_distributive_lattice: entry out of range");
  for (int v : l.join_table)
    if (v < 0 || v >= l.n) throw std::invalid_argument("check_distributive_lattice: entry out of range");

  ValidationReport r;
  const int n = l.n;

  // One entry per law, witnessed by the first failing tuple.
  auto scan_pairs = [&](const char* law, auto&& holds, const char* detail) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!holds(a, b)) {
          r.add(law, {a, b}, detail);
          return;
        }
  };
  auto scan_triples = [&](const char* law, auto&& holds, const char* detail) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!holds(a, b, c)) {
            r.add(law, {a, b, c}, detail);
            return;
          }
  };

  scan_pairs("meet-commutativity",
             [&](int a, int b) { return l.meet(a, b) == l.meet(b, a); },
             "meet(a,b) != meet(b,a)");
  scan_pairs("join-commutativity",
             [&](int a, int b) { return l.join(a, b) == l.join(b, a); },
             "join(a,b) != join(b,a)");
  scan_triples("meet-associativity",
               [&](int a, int b, int c) { return l.meet(a, l.meet(b, c)) == l.meet(l.meet(a, b), c); },
               "meet not associative");
  scan_triples("join-associativity",
               [&](int a, int b, int c) { return l.join(a, l.join(b, c)) == l.join(l.join(a, b), c); },
               "join not associative");
  for (int a = 0; a < n; ++a)
    if (l.meet(a, a) != a) {
      r.add("meet-idempotence", {a}, "meet(a,a) != a");
      break;
    }
  for (int a = 0; a < n; ++a)
    if (l.join(a, a) != a) {
      r.add("join-idempotence", {a}, "join(a,a) != a");
      break;
    }
  scan_pairs("absorption-meet",
             [&](int a, int b) { return l.meet(a, l.join(a, b)) == a; },
             "meet(a, join(a,b)) != a");
  scan_pairs("absorption-join",
             [&](int a, int b) { return l.join(a, l.meet(a, b)) == a; },
             "join(a, meet(a,b)) != a");
  for (int a = 0; a < n; ++a)
    if (l.join(l.zero, a) != a || l.meet(l.zero, a) != l.zero) {
      r.add("zero-bound", {a}, "zero is not neutral for join / absorbing for meet");
      break;
    }
  for (int a = 0; a < n; ++a)
    if (l.meet(l.one, a) != a || l.join(l.one, a) != l.one) {
      r.add("one-bound", {a}, "one is not neutral for meet / absorbing for join");
      break;
    }
  scan_triples("distributivity",
               [&](int a, int b, int c) {
                 return l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)) &&
                        l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), l.join(a, c));
               },
               "meet does not distribute over join");
  return r;
}

std::vector<int> complemented_elements(const FiniteLattice& l) {
  require_law_guard(l, "complemented_elements");
  std::vector<int> out;
  for (int a = 0; a < l.n; ++a)
    if (complement_of(l, a)) out.push_back(a);
  return out;
}

std::optional<int> complement_of(const FiniteLattice& l, int a) {
  require_index(l, a, "complement_of");
  for (int b = 0; b < l.n; ++b)
    if (l.meet(a, b) == l.zero && l.join(a, b) == l.one) return b;
  return std::nullopt;
}

std::vector<int> join_irreducibles(const FiniteLattice& l) {
  require_law_guard(l, "join_irreducibles");
  std::vector<int> out;
  for (int j = 0; j < l.n; ++j) {
    if (j == l.zero) continue;
    bool irreducible = true;
    for (int a = 0; a < l.n && irreducible; ++a)
      for (int b = 0; b < l.n; ++b)
        if (l.join(a, b) == j && a != j && b != j) {
          irreducible = false;
          break;
        }
    if (irreducible) out.push_back(j);
  }
  return out;
}

Bits downset(const FiniteLattice& l, int a) {
  require_index(l, a, "downset");
  Bits s = 0;
  for (int x = 0; x < l.n; ++x)
    if (l.meet(x, a) == x) s |= bit(x);
  return s;
}

Bits upset(const FiniteLattice& l, int a) {
  require_index(l, a, "upset");
  Bits s = 0;
  for (int x = 0; x < l.n; ++x)
    if (l.meet(a, x) == a) s |= bit(x);
  return s;
}

}  // namespace talg
