#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsp/abelianization.hpp"
#include "dsp/coset_table.hpp"
#include "dsp/error.hpp"
#include "dsp/integer_matrix.hpp"
#include "dsp/presentation.hpp"
#include "dsp/schreier.hpp"
#include "dsp/tietze.hpp"
#include "dsp/word.hpp"

namespace dsp {

using Permutation = std::vector<std::int32_t>;

inline constexpr std::int64_t kDefaultExplicitCap = 1'000'000;
inline constexpr std::int64_t kDefaultNodeBudget = 50'000'000;

// apply a, then b
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::int32_t>(i);
  return out;
}

inline Permutation identity_permutation(std::int32_t degree) {
  Permutation out(degree);
  for (std::int32_t i = 0; i < degree; ++i) out[i] = i;
  return out;
}

namespace detail {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t v : p) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// All products of the given permutations: BFS from the identity, so element
// 0 is the identity and discovery order is deterministic. Throws once the
// element count would exceed the cap.
inline std::vector<Permutation> permutation_closure(
    std::int32_t degree, const std::vector<Permutation>& gens,
    std::int64_t explicit_cap = kDefaultExplicitCap) {
  std::vector<Permutation> elements = {identity_permutation(degree)};
  std::unordered_map<Permutation, std::int32_t, detail::PermutationHash> seen;
  seen.emplace(elements[0], 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& g : gens) {
      Permutation next = compose(elements[head], g);
      if (seen.contains(next)) continue;
      if (static_cast<std::int64_t>(elements.size()) >= explicit_cap)
        throw Error(errc::order_too_large,
                    "permutation closure exceeds explicit cap");
      seen.emplace(next, static_cast<std::int32_t>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

// A finite group given concretely: permutations on [0, degree) plus the
// full element list (computable exactly when order fits the explicit cap).
struct FiniteGroupRep {
  std::int32_t degree = 0;
  std::vector<Permutation> generators;
  Int order = 1;
  std::vector<Permutation> elements;
};

inline FiniteGroupRep permutation_image(
    const CosetTable& t, std::int64_t explicit_cap = kDefaultExplicitCap) {
  if (!t.complete)
    throw Error(errc::precondition_violated, "coset table is not complete");
  FiniteGroupRep rep;
  rep.degree = t.index;
  for (std::int32_t g = 1; g <= t.generator_count; ++g) {
    Permutation perm(t.index);
    for (std::int32_t c = 0; c < t.index; ++c) perm[c] = t.act(c, g);
    rep.generators.push_back(std::move(perm));
  }
  rep.elements = permutation_closure(rep.degree, rep.generators, explicit_cap);
  rep.order = static_cast<std::int64_t>(rep.elements.size());
  return rep;
}

// Commutators of arbitrary elements already form a conjugation-closed set,
// so their plain closure is the derived subgroup.
inline bool is_perfect_finite(const FiniteGroupRep& g,
                              std::int64_t explicit_cap = kDefaultExplicitCap) {
  if (g.order <= 1) return true;
  std::vector<Permutation> commutators;
  std::unordered_map<Permutation, std::int32_t, detail::PermutationHash> seen;
  for (const Permutation& a : g.elements) {
    Permutation a_inv = inverse(a);
    for (const Permutation& b : g.elements) {
      Permutation c = compose(compose(a_inv, inverse(b)), compose(a, b));
      if (seen.emplace(c, 0).second) commutators.push_back(std::move(c));
    }
  }
  std::vector<Permutation> derived =
      permutation_closure(g.degree, commutators, explicit_cap);
  return static_cast<std::int64_t>(derived.size()) == g.order;
}

// The binary icosahedral group is the unique perfect group of order 120,
// so recognition needs no isomorphism machinery.
inline bool is_binary_icosahedral(const FiniteGroupRep& g) {
  return g.order == 120 && is_perfect_finite(g);
}

// First-seen relabeling of a complete table with coset alpha moved to 0:
// the flattened row-major table of the conjugate subgroup Stab(alpha).
// Tables built by the low-index search are their own alpha = 0 relabeling.
inline std::vector<std::int32_t> relabel_from(const CosetTable& t,
                                              std::int32_t alpha) {
  const std::int32_t ncols = t.columns();
  std::vector<std::int32_t> to_new(t.index, -1);
  std::vector<std::int32_t> to_old;
  to_new[alpha] = 0;
  to_old.push_back(alpha);
  std::vector<std::int32_t> flat;
  flat.reserve(static_cast<std::size_t>(t.index) * ncols);
  for (std::int32_t c = 0; c < t.index; ++c) {
    std::int32_t oc = to_old[c];
    for (std::int32_t col = 0; col < ncols; ++col) {
      std::int32_t ov = t.at(oc, col);
      if (to_new[ov] < 0) {
        to_new[ov] = static_cast<std::int32_t>(to_old.size());
        to_old.push_back(ov);
      }
      flat.push_back(to_new[ov]);
    }
  }
  return flat;
}

struct LowIndexResult {
  std::vector<CosetTable> classes;
  bool budget_exhausted = false;
};

namespace detail {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::int32_t max_index,
                 std::int64_t node_budget)
      : ngens_(p.generator_count()),
        ncols_(2 * p.generator_count()),
        max_index_(max_index),
        node_budget_(node_budget) {
    for (const Word& r : p.relators)
      if (!r.empty()) relators_.push_back(r);
    tab_.assign(static_cast<std::size_t>(max_index_) * ncols_, -1);
    ncos_ = 1;
  }

  LowIndexResult run() {
    dfs();
    std::sort(result_.classes.begin(), result_.classes.end(),
              [](const CosetTable& a, const CosetTable& b) {
                if (a.index != b.index) return a.index < b.index;
                return a.entries < b.entries;
              });
    return std::move(result_);
  }

 private:
  std::int32_t ngens_, ncols_, max_index_;
  std::int64_t node_budget_;
  std::vector<Word> relators_;
  std::vector<std::int32_t> tab_;
  std::int32_t ncos_ = 1;
  std::int64_t nodes_ = 0;
  // journal of filled slots, unwound on backtrack
  std::vector<std::int32_t> trail_;
  LowIndexResult result_;

  std::int32_t& slot(std::int32_t c, std::int32_t col) {
    return tab_[static_cast<std::size_t>(c) * ncols_ + col];
  }

  void set_pair(std::int32_t c, std::int32_t col, std::int32_t d) {
    slot(c, col) = d;
    trail_.push_back(c * ncols_ + col);
    std::int32_t back = col ^ 1;
    if (slot(d, back) < 0) {
      slot(d, back) = c;
      trail_.push_back(d * ncols_ + back);
    }
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      tab_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Scan one relator at one coset. Returns false on a clash (the scan
  // would force two existing cosets to merge, or a completed scan
  // mismatches); fills deduced entries via set_pair.
  bool scan(std::int32_t c, const Word& w) {
    std::size_t i = 0, j = w.size();
    std::int32_t f = c, b = c;
    while (i < j) {
      std::int32_t next = slot(f, CosetTable::column(w[i]));
      if (next < 0) break;
      f = next;
      ++i;
    }
    if (i == j) return f == c;
    while (j > i) {
      std::int32_t next = slot(b, CosetTable::column(-w[j - 1]));
      if (next < 0) break;
      b = next;
      --j;
    }
    if (j == i) return f == b;
    if (j == i + 1) {
      std::int32_t col = CosetTable::column(w[i]);
      std::int32_t back = col ^ 1;
      if (slot(b, back) >= 0 && slot(b, back) != f) return false;
      set_pair(f, col, b);
    }
    return true;
  }

  // Rescan everything until no deduction fires. Desk-scale tables keep
  // this cheap despite the quadratic shape.
  bool propagate() {
    for (;;) {
      std::size_t before = trail_.size();
      for (std::int32_t c = 0; c < ncos_; ++c)
        for (const Word& r : relators_)
          if (!scan(c, r)) return false;
      if (trail_.size() == before) return true;
    }
  }

  void record_if_canonical() {
    CosetTable t;
    t.generator_count = ngens_;
    t.index = ncos_;
    t.complete = true;
    t.entries.assign(tab_.begin(),
                     tab_.begin() + static_cast<std::size_t>(ncos_) * ncols_);
    for (std::int32_t alpha = 1; alpha < ncos_; ++alpha)
      if (relabel_from(t, alpha) < t.entries) return;
    result_.classes.push_back(std::move(t));
  }

  void dfs() {
    if (result_.budget_exhausted) return;
    if (++nodes_ > node_budget_) {
      result_.budget_exhausted = true;
      return;
    }
    std::size_t mark = trail_.size();
    if (!propagate()) {
      unwind(mark);
      return;
    }

    std::int32_t c = -1, col = -1;
    for (std::int32_t cc = 0; cc < ncos_ && c < 0; ++cc)
      for (std::int32_t k = 0; k < ncols_; ++k)
        if (slot(cc, k) < 0) {
          c = cc;
          col = k;
          break;
        }
    if (c < 0) {
      record_if_canonical();
      unwind(mark);
      return;
    }

    std::int32_t back = col ^ 1;
    for (std::int32_t d = 0; d < ncos_; ++d) {
      if (slot(d, back) >= 0) continue;
      std::size_t inner = trail_.size();
      set_pair(c, col, d);
      dfs();
      unwind(inner);
    }
    if (ncos_ < max_index_) {
      std::size_t inner = trail_.size();
      std::int32_t d = ncos_++;
      set_pair(c, col, d);
      dfs();
      unwind(inner);
      --ncos_;
    }
    unwind(mark);
  }
};

}  // namespace detail

// One complete coset table per conjugacy class of subgroups of index at
// most max_index, sorted by index then table entries. The representative
// is the class member whose table relabels lexicographically least.
inline LowIndexResult low_index_subgroups(
    const Presentation& p, std::int32_t max_index,
    std::int64_t node_budget = kDefaultNodeBudget) {
  if (max_index < 1)
    throw Error(errc::bad_input, "max_index must be at least 1");
  return detail::LowIndexSearch(p, max_index, node_budget).run();
}

// Normality of the subgroup a complete table encodes, via its Schreier
// generators.
inline bool is_normal_subgroup_table(const Presentation& p,
                                     const CosetTable& t) {
  SchreierData s = schreier_transversal(t);
  return is_normal(t, subgroup_generator_words(t, s));
}

// A finite Galois cover: the core of a finite-index subgroup plus its deck
// group and the first homology data of the cover.
struct GaloisCoverDatum {
  Presentation base;
  CosetTable core_table;
  FiniteGroupRep deck;
  AbelianInvariants cover_invariants;
};

// Core of the subgroup encoded by t: kernel of the coset action. Cosets of
// the core are the elements of the permutation image, in closure discovery
// order, acted on by right multiplication.
inline GaloisCoverDatum galois_closure(
    const Presentation& p, const CosetTable& t,
    std::int64_t explicit_cap = kDefaultExplicitCap,
    std::int64_t letter_budget = kDefaultLetterBudget,
    std::int64_t tietze_budget = kDefaultTietzeBudget) {
  FiniteGroupRep image = permutation_image(t, explicit_cap);

  std::unordered_map<Permutation, std::int32_t, detail::PermutationHash> index;
  for (std::size_t i = 0; i < image.elements.size(); ++i)
    index.emplace(image.elements[i], static_cast<std::int32_t>(i));

  GaloisCoverDatum d;
  d.base = p;
  CosetTable& core = d.core_table;
  core.generator_count = p.generator_count();
  core.index = static_cast<std::int32_t>(image.elements.size());
  core.complete = true;
  core.entries.assign(static_cast<std::size_t>(core.index) * core.columns(), 0);
  for (std::int32_t e = 0; e < core.index; ++e)
    for (std::int32_t g = 1; g <= p.generator_count(); ++g) {
      std::int32_t target = index.at(
          compose(image.elements[e], image.generators[g - 1]));
      core.at(e, CosetTable::column(g)) = target;
      core.at(target, CosetTable::column(-g)) = e;
    }

  d.deck = permutation_image(core, explicit_cap);
  RewriteResult rw = rewrite_subgroup_presentation(p, core, letter_budget);
  Presentation sub =
      simplify_presentation(rw.presentation, tietze_budget).presentation;
  d.cover_invariants = abelian_invariants(sub);
  return d;
}

// The homology-sphere obstruction: a Galois cover of order above 120 with
// trivial first homology contradicts the known bound; at or below 120 the
// only decks compatible with a trivial-homology cover of a trivial-homology
// base are the trivial group and the binary icosahedral group.
inline std::string corollary_check(const GaloisCoverDatum& d) {
  bool cover_trivial = d.cover_invariants.perfect();
  if (d.deck.order > 120 && cover_trivial) return "corollary-violation";
  if (cover_trivial &&
      (d.deck.order == 1 || is_binary_icosahedral(d.deck)))
    return "lemma-window";
  if (cover_trivial && abelian_invariants(d.base).perfect())
    return "lemma-anomaly";
  return "no-claim";
}

}  // namespace dsp
