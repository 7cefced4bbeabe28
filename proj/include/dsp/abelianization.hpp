#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsp/integer_matrix.hpp"
#include "dsp/presentation.hpp"
#include "dsp/smith.hpp"
#include "dsp/word.hpp"

namespace dsp {

// Isomorphism type of an abelianization: Z^betti plus cyclic factors of the
// listed orders. Torsion entries are > 1 and each divides the next.
struct AbelianInvariants {
  std::int64_t betti = 0;
  std::vector<Int> torsion;

  bool perfect() const { return betti == 0 && torsion.empty(); }
  bool is_finite() const { return betti == 0; }

  Int torsion_order() const {
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
  }

  bool operator==(const AbelianInvariants&) const = default;
};

inline AbelianInvariants invariants_from_smith(const SmithForm& s,
                                               std::int64_t generator_count) {
  AbelianInvariants inv;
  inv.betti = generator_count - s.rank;
  for (const Int& d : s.invariant_factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

inline AbelianInvariants abelian_invariants(const Presentation& p) {
  SmithForm s = smith_normal_form(abelianized_relation_matrix(p));
  return invariants_from_smith(s, p.generator_count());
}

// Explicit map G -> G/[G,G]. Elements are coordinate vectors: one entry per
// torsion factor (canonical residue in [0, d)) followed by betti free
// entries. Built from the right Smith transform: generator j maps to row j
// of V, keeping only columns whose invariant factor exceeds 1 and the free
// columns past the rank.
struct AbelianQuotientMap {
  AbelianInvariants invariants;
  std::vector<std::vector<Int>> generator_images;

  std::size_t coordinate_count() const {
    return invariants.torsion.size() +
           static_cast<std::size_t>(invariants.betti);
  }

  std::vector<Int> zero() const { return std::vector<Int>(coordinate_count()); }

  void normalize(std::vector<Int>& v) const {
    for (std::size_t i = 0; i < invariants.torsion.size(); ++i) {
      v[i] %= invariants.torsion[i];
      if (v[i] < 0) v[i] += invariants.torsion[i];
    }
  }

  std::vector<Int> eval(const Word& w) const {
    std::vector<Int> acc = zero();
    for (Letter x : w) {
      const std::vector<Int>& img =
          generator_images[static_cast<std::size_t>(x > 0 ? x : -x) - 1];
      if (x > 0)
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += img[i];
      else
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= img[i];
    }
    normalize(acc);
    return acc;
  }
};

inline AbelianQuotientMap abelian_quotient_map(const Presentation& p) {
  IntegerMatrix m = abelianized_relation_matrix(p);
  SmithForm s = smith_normal_form(m, /*want_transforms=*/true);

  AbelianQuotientMap map;
  map.invariants = invariants_from_smith(s, p.generator_count());

  std::vector<std::int64_t> kept_cols;
  for (std::int64_t i = 0; i < s.rank; ++i)
    if (s.invariant_factors[static_cast<std::size_t>(i)] > 1)
      kept_cols.push_back(i);
  for (std::int64_t i = s.rank; i < p.generator_count(); ++i)
    kept_cols.push_back(i);

  const IntegerMatrix& v = *s.right;
  for (std::int64_t g = 0; g < p.generator_count(); ++g) {
    std::vector<Int> img;
    img.reserve(kept_cols.size());
    for (std::int64_t c : kept_cols) img.push_back(v.at(g, c));
    map.generator_images.push_back(std::move(img));
  }
  for (auto& img : map.generator_images) map.normalize(img);
  return map;
}

}  // namespace dsp
