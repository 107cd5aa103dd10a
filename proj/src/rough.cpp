#include "talg/rough.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace talg {

Bits ApproximationSpace::class_mask_of(int point) const {
  for (const Bits m : class_masks)
    if (has_bit(m, point)) return m;
  throw std::out_of_range("class_mask_of: point outside the space");
}

ApproximationSpace make_space(int points, const std::vector<std::vector<int>>& classes) {
  if (points < 0) throw std::invalid_argument("make_space: negative point count");
  ApproximationSpace space;
  space.points = points;
  space.classes = classes;
  Bits seen = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) throw std::invalid_argument("make_space: empty class");
    Bits m = 0;
    for (int p : cls) {
      if (p < 0 || p >= points) throw std::out_of_range("make_space: point out of range");
      if (has_bit(seen, p)) throw std::invalid_argument("make_space: classes overlap");
      seen |= bit(p);
      m |= bit(p);
    }
    space.class_masks.push_back(m);
  }
  if (seen != all_bits(points))
    throw std::invalid_argument("make_space: classes do not cover the points");
  return space;
}

ApproximationSpace comparability_space(const Spectrum& spec) {
  if (spec.filters.empty())
    throw std::invalid_argument("comparability_space: empty spectrum (degenerate algebra)");
  std::vector<std::vector<int>> classes;
  for (const auto& block : spec.blocks) classes.push_back(block.filters);
  return make_space(static_cast<int>(spec.filters.size()), classes);
}

Bits monadic_m(const ApproximationSpace& space, Bits x) {
  if (!is_subset(x, space.all()))
    throw std::out_of_range("monadic_m: set outside the point range");
  Bits out = 0;
  for (const Bits cls : space.class_masks)
    if (cls & x) out |= cls;
  return out;
}

Bits monadic_l(const ApproximationSpace& space, Bits x) {
  if (!is_subset(x, space.all()))
    throw std::out_of_range("monadic_l: set outside the point range");
  return space.all() & ~monadic_m(space, space.all() & ~x);
}

int RoughAlgebra::index_of(const RoughPair& p) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), p);
  if (it == carrier.end() || !(*it == p))
    throw std::out_of_range("RoughAlgebra: pair not in the carrier");
  return static_cast<int>(it - carrier.begin());
}

RoughAlgebra rough_algebra(const ApproximationSpace& space, const std::vector<Bits>& generators) {
  const Bits everything = space.all();
  auto approx = [&](Bits x) { return RoughPair{monadic_l(space, x), monadic_m(space, x)}; };

  std::vector<RoughPair> carrier{{0, 0}, {everything, everything}};
  for (Bits g : generators) carrier.push_back(approx(g));
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

  auto complement_pair = [&](const RoughPair& p) {
    Bits nl = everything & ~p.lower;
    return RoughPair{nl, nl};
  };

  // Close under the pair operations to a fixpoint.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RoughPair> fresh;
    auto consider = [&](const RoughPair& p) {
      if (!std::binary_search(carrier.begin(), carrier.end(), p) &&
          std::find(fresh.begin(), fresh.end(), p) == fresh.end())
        fresh.push_back(p);
    };
    for (const auto& p : carrier) {
      consider({p.lower, p.lower});  // S1
      consider({p.upper, p.upper});  // S2
      consider(complement_pair(p));  // C
      for (const auto& q : carrier) {
        consider({p.lower & q.lower, p.upper & q.upper});
        consider({p.lower | q.lower, p.upper | q.upper});
      }
    }
    if (!fresh.empty()) {
      grew = true;
      carrier.insert(carrier.end(), fresh.begin(), fresh.end());
      std::sort(carrier.begin(), carrier.end());
      carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
      if (carrier.size() > static_cast<size_t>(kClosureCap))
        throw GuardError("rough_algebra: closure exceeded the cap");
    }
  }

  RoughAlgebra out;
  out.space = space;
  out.carrier = carrier;

  const int n = static_cast<int>(carrier.size());
  auto idx = [&](const RoughPair& p) {
    return static_cast<int>(std::lower_bound(carrier.begin(), carrier.end(), p) - carrier.begin());
  };
  TStructure& t = out.structure;
  t.lattice.n = n;
  t.lattice.zero = idx({0, 0});
  t.lattice.one = idx({everything, everything});
  t.lattice.meet_table.resize(static_cast<size_t>(n) * n);
  t.lattice.join_table.resize(static_cast<size_t>(n) * n);
  t.c.resize(n);
  t.s1.resize(n);
  t.s2.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& p = carrier[i];
    t.s1[i] = idx({p.lower, p.lower});
    t.s2[i] = idx({p.upper, p.upper});
    t.c[i] = idx(complement_pair(p));
    for (int j = 0; j < n; ++j) {
      const auto& q = carrier[j];
      t.lattice.meet_table[i * n + j] = idx({p.lower & q.lower, p.upper & q.upper});
      t.lattice.join_table[i * n + j] = idx({p.lower | q.lower, p.upper | q.upper});
    }
  }
  return out;
}

RoughRepresentation represent_rough(const HTAlgebra& h) {
  if (!check_ht_axioms(h).ok())
    throw std::invalid_argument("represent_rough: input fails the axioms");
  if (h.lattice.degenerate())
    throw std::invalid_argument("represent_rough: degenerate algebra has no representation");

  RoughRepresentation rep;
  rep.spectrum = chain_decomposition(h.lattice);
  rep.space = comparability_space(rep.spectrum);
  const std::vector<Bits> s = stone_map(h.lattice, rep.spectrum.filters);

  rep.algebra = rough_algebra(rep.space, s);
  const int n = h.lattice.n;
  rep.image.reserve(n);
  rep.element_to_pair.reserve(n);
  for (int a = 0; a < n; ++a) {
    RoughPair p{monadic_l(rep.space, s[a]), monadic_m(rep.space, s[a])};
    rep.image.push_back(p);
    rep.element_to_pair.push_back(rep.algebra.index_of(p));
  }

  // The generators are the whole image and the image is closed, so the
  // carrier must be exactly the image.
  {
    std::vector<int> distinct(rep.element_to_pair);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != rep.algebra.carrier.size())
      throw std::logic_error("represent_rough: carrier is larger than the image");
  }

  TStructure source = to_t(h);
  rep.morphism = check_homomorphism(source, rep.algebra.structure, rep.element_to_pair,
                                    signature_of(Kind::tstructure));
  if (!rep.morphism.is_homomorphism || !rep.morphism.is_injective)
    throw std::logic_error("represent_rough: the pair map is not an embedding");

  if (!check_t_axioms(rep.algebra.structure).ok())
    throw std::logic_error("represent_rough: image fails the structure axioms");

  auto iso = find_isomorphism(rep.algebra.structure, source);
  if (!iso) throw std::logic_error("represent_rough: image is not isomorphic to the input");
  rep.isomorphism = *iso;
  return rep;
}

}  // namespace talg
