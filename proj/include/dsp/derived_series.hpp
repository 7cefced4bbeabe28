#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsp/abelianization.hpp"
#include "dsp/coset_table.hpp"
#include "dsp/error.hpp"
#include "dsp/presentation.hpp"
#include "dsp/schreier.hpp"
#include "dsp/tietze.hpp"
#include "dsp/word.hpp"

namespace dsp {

struct ExploreLimits {
  std::int64_t max_depth = 8;
  // Kept for interface parity with the other commands; the commutator
  // kernel table is built directly from the abelianization and never runs
  // a coset enumeration against this bound.
  std::int64_t max_cosets = 100'000;
  std::int64_t letter_budget = kDefaultLetterBudget;
  std::int64_t torsion_cap = 10'000;
  std::int64_t tietze_budget = kDefaultTietzeBudget;
};

enum class OutcomeKind { positive_betti, stabilized, budget_exhausted };

inline const char* outcome_kind_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::positive_betti: return "PositiveBetti";
    case OutcomeKind::stabilized: return "Stabilized";
    case OutcomeKind::budget_exhausted: return "BudgetExhausted";
  }
  return "?";
}

enum class LimitingResource { none, max_depth, torsion_cap, letter_budget };

inline const char* limiting_resource_name(LimitingResource r) {
  switch (r) {
    case LimitingResource::none: return "none";
    case LimitingResource::max_depth: return "max_depth";
    case LimitingResource::torsion_cap: return "torsion_cap";
    case LimitingResource::letter_budget: return "letter_budget";
  }
  return "?";
}

struct DerivedStep {
  std::int64_t level = 0;
  Presentation presentation;
  AbelianInvariants invariants;
  Int index_in_root = 1;

  bool operator==(const DerivedStep&) const = default;
};

struct Outcome {
  OutcomeKind kind = OutcomeKind::budget_exhausted;
  std::int64_t level = 0;
  LimitingResource resource = LimitingResource::none;

  bool operator==(const Outcome&) const = default;
};

struct DerivedSeriesReport {
  std::vector<DerivedStep> steps;
  Outcome outcome;

  bool operator==(const DerivedSeriesReport&) const = default;
};

// Coset table of the commutator subgroup: cosets are the elements of the
// finite abelianization in mixed-radix order (first torsion coordinate
// fastest), and a generator translates by its image. Exact and complete by
// construction.
inline CosetTable commutator_kernel_table(const Presentation& p,
                                          const AbelianQuotientMap& map) {
  const AbelianInvariants& inv = map.invariants;
  Int order = inv.torsion_order();
  if (inv.betti != 0 || order > 0x7fffffff)
    throw Error(errc::precondition_violated,
                "abelianization is not finite of table size");

  std::size_t k = inv.torsion.size();
  std::vector<std::int64_t> moduli(k), stride(k);
  std::int64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    moduli[i] = static_cast<std::int64_t>(inv.torsion[i]);
    stride[i] = total;
    total *= moduli[i];
  }
  std::vector<std::vector<std::int64_t>> images(p.generator_count());
  for (std::int32_t g = 0; g < p.generator_count(); ++g) {
    images[g].resize(k);
    for (std::size_t i = 0; i < k; ++i)
      images[g][i] = static_cast<std::int64_t>(map.generator_images[g][i]);
  }

  CosetTable t;
  t.generator_count = p.generator_count();
  t.index = static_cast<std::int32_t>(total);
  t.complete = true;
  t.entries.assign(static_cast<std::size_t>(t.index) * t.columns(), 0);
  for (std::int64_t c = 0; c < total; ++c)
    for (std::int32_t g = 1; g <= p.generator_count(); ++g) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < k; ++i) {
        std::int64_t coord = (c / stride[i]) % moduli[i];
        coord = (coord + images[g - 1][i]) % moduli[i];
        d += coord * stride[i];
      }
      t.at(static_cast<std::int32_t>(c), CosetTable::column(g)) =
          static_cast<std::int32_t>(d);
      t.at(static_cast<std::int32_t>(d), CosetTable::column(-g)) =
          static_cast<std::int32_t>(c);
    }
  return t;
}

// Presentation of [G, G] for a group whose abelianization is finite:
// kernel table, Reidemeister-Schreier rewrite, then simplification. A
// trivial abelianization is rejected (the caller should report Stabilized
// instead); an infinite one is rejected outright.
inline Presentation derived_subgroup_presentation(
    const Presentation& p, std::int64_t letter_budget = kDefaultLetterBudget,
    std::int64_t tietze_budget = kDefaultTietzeBudget) {
  AbelianQuotientMap map = abelian_quotient_map(p);
  if (map.invariants.betti > 0)
    throw Error(errc::precondition_violated, "abelianization is infinite");
  if (map.invariants.perfect())
    throw Error(errc::precondition_violated, "group is already perfect");

  CosetTable t = commutator_kernel_table(p, map);
  RewriteResult rw = rewrite_subgroup_presentation(p, t, letter_budget);
  return simplify_presentation(rw.presentation, tietze_budget).presentation;
}

// Walk G = G^0 > G^1 > ... recording one step per level. Stops at the first
// level with positive betti number, at a perfect level, or when a budget
// trips; budgets are outcomes, never errors.
inline DerivedSeriesReport explore_derived_series(const Presentation& p,
                                                  const ExploreLimits& limits =
                                                      ExploreLimits{}) {
  DerivedSeriesReport report;
  Presentation current = p;
  Int index_in_root = 1;

  for (std::int64_t level = 0;; ++level) {
    AbelianInvariants inv = abelian_invariants(current);
    report.steps.push_back({level, current, inv, index_in_root});

    if (inv.betti > 0) {
      report.outcome = {OutcomeKind::positive_betti, level,
                        LimitingResource::none};
      return report;
    }
    if (inv.perfect()) {
      report.outcome = {OutcomeKind::stabilized, level,
                        LimitingResource::none};
      return report;
    }
    if (level + 1 > limits.max_depth) {
      report.outcome = {OutcomeKind::budget_exhausted, level,
                        LimitingResource::max_depth};
      return report;
    }
    Int order = inv.torsion_order();
    if (order > limits.torsion_cap) {
      report.outcome = {OutcomeKind::budget_exhausted, level,
                        LimitingResource::torsion_cap};
      return report;
    }
    try {
      current = derived_subgroup_presentation(current, limits.letter_budget,
                                              limits.tietze_budget);
    } catch (const Error& e) {
      if (e.code() != errc::letter_budget_exceeded) throw;
      report.outcome = {OutcomeKind::budget_exhausted, level,
                        LimitingResource::letter_budget};
      return report;
    }
    index_in_root *= order;
  }
}

inline std::string classify_outcome(const DerivedSeriesReport& report) {
  switch (report.outcome.kind) {
    case OutcomeKind::positive_betti: return "virtual-betti-witness";
    case OutcomeKind::stabilized: return "stabilized";
    case OutcomeKind::budget_exhausted: return "undetermined";
  }
  return "?";
}

}  // namespace dsp
