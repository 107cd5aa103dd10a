#include "talg/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace talg {

namespace {

bool filter_mask_ok(const FiniteLattice& l, Bits f) {
  if (f == 0) return false;
  for (int x = 0; x < l.n; ++x) {
    if (!has_bit(f, x)) continue;
    for (int y = 0; y < l.n; ++y) {
      if (l.meet(x, y) == x && !has_bit(f, y)) return false;  // upward closure
      if (has_bit(f, y) && !has_bit(f, l.meet(x, y))) return false;
    }
  }
  return true;
}

bool prime_mask_ok(const FiniteLattice& l, Bits f) {
  if (has_bit(f, l.zero)) return false;  // proper
  if (!filter_mask_ok(l, f)) return false;
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b)
      if (has_bit(f, l.join(a, b)) && !has_bit(f, a) && !has_bit(f, b)) return false;
  return true;
}

}  // namespace

std::vector<PrimeFilter> prime_filters_bruteforce(const FiniteLattice& l) {
  if (l.n > kSubsetEnumerationGuard)
    throw GuardError("prime_filters_bruteforce: carrier exceeds the subset enumeration guard");
  std::vector<PrimeFilter> out;
  const Bits limit = all_bits(l.n);
  for (Bits f = 1; f <= limit; ++f)
    if (prime_mask_ok(l, f)) out.push_back({f});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeFilter> prime_filters_birkhoff(const FiniteLattice& l) {
  std::vector<PrimeFilter> out;
  for (int j : join_irreducibles(l)) out.push_back({upset(l, j)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Spectrum chain_decomposition(const FiniteLattice& l) {
  Spectrum spec;
  spec.filters = prime_filters_birkhoff(l);
  const int m = static_cast<int>(spec.filters.size());

  auto comparable = [&](int i, int j) {
    return is_subset(spec.filters[i].members, spec.filters[j].members) ||
           is_subset(spec.filters[j].members, spec.filters[i].members);
  };

  // Connected components of the comparability graph.
  std::vector<int> component(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    if (component[i] >= 0) continue;
    component[i] = next;
    std::vector<int> todo{i};
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (int j = 0; j < m; ++j)
        if (component[j] < 0 && comparable(x, j)) {
          component[j] = next;
          todo.push_back(j);
        }
    }
    ++next;
  }

  for (int comp = 0; comp < next; ++comp) {
    SpectrumBlock block;
    for (int i = 0; i < m; ++i)
      if (component[i] == comp) block.filters.push_back(i);
    block.is_chain = true;
    for (size_t i = 0; i < block.filters.size() && block.is_chain; ++i)
      for (size_t j = i + 1; j < block.filters.size(); ++j)
        if (!comparable(block.filters[i], block.filters[j])) {
          block.is_chain = false;
          break;
        }
    if (block.is_chain)  // on a chain, inclusion order is size order
      std::sort(block.filters.begin(), block.filters.end(), [&](int i, int j) {
        return spec.filters[i].size() < spec.filters[j].size();
      });
    spec.blocks.push_back(std::move(block));
  }
  return spec;
}

ValidationReport check_s2_filter_transfer(const HTAlgebra& h) {
  if (!check_ht_axioms(h).ok())
    throw std::invalid_argument("check_s2_filter_transfer: input fails the axioms");

  auto filters = prime_filters_birkhoff(h.lattice);
  ValidationReport r;
  for (size_t p = 0; p < filters.size(); ++p)
    for (size_t q = 0; q < filters.size(); ++q) {
      if (p == q || !is_subset(filters[p].members, filters[q].members)) continue;
      for (int x = 0; x < h.lattice.n; ++x)
        if (filters[p].contains(h.s2[x]) && !filters[q].contains(x)) {
          r.add("s2-filter-transfer", {static_cast<int>(p), static_cast<int>(q), x},
                "S2 x in the smaller filter but x outside the larger");
          return r;
        }
    }
  return r;
}

std::vector<Bits> stone_map(const FiniteLattice& l, const std::vector<PrimeFilter>& filters) {
  std::vector<Bits> s(l.n, 0);
  for (int a = 0; a < l.n; ++a)
    for (size_t i = 0; i < filters.size(); ++i)
      if (filters[i].contains(a)) s[a] |= bit(static_cast<int>(i));

  // Classical embedding facts; failures signal an implementation bug.
  const Bits everything = all_bits(static_cast<int>(filters.size()));
  if (s[l.zero] != 0) throw std::logic_error("stone_map: s(zero) is nonempty");
  if (s[l.one] != everything) throw std::logic_error("stone_map: s(one) misses a filter");
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b) {
      if (s[l.meet(a, b)] != (s[a] & s[b]))
        throw std::logic_error("stone_map: meet is not intersection");
      if (s[l.join(a, b)] != (s[a] | s[b]))
        throw std::logic_error("stone_map: join is not union");
      if (!l.degenerate() && a != b && s[a] == s[b])
        throw std::logic_error("stone_map: not injective");
    }
  return s;
}

std::vector<Bits> stone_map(const FiniteLattice& l) {
  return stone_map(l, prime_filters_birkhoff(l));
}

}  // namespace talg
