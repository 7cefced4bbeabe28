#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "dsp/coset_table.hpp"
#include "dsp/error.hpp"
#include "dsp/presentation.hpp"
#include "dsp/word.hpp"

namespace dsp {

namespace detail {

// Coset enumeration working state. Strategy: scan every relator at every
// live coset and every subgroup generator at coset 0, storing deductions
// immediately and draining the coincidence queue before anything else; only
// when a full pass deduces nothing is a new coset defined, at the first
// undefined entry in row-major order. Deterministic by construction.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroup_gens,
                  std::int32_t max_cosets)
      : ngens_(p.generator_count()),
        ncols_(2 * p.generator_count()),
        max_cosets_(max_cosets),
        subgroup_gens_(subgroup_gens) {
    for (const Word& r : p.relators)
      if (!r.empty()) relators_.push_back(r);
    allocate_coset();
  }

  CosetTable run() {
    // Degenerate rank-0 presentation: one coset, nothing to scan.
    while (true) {
      bool changed = scan_to_fixpoint();
      (void)changed;
      auto slot = first_undefined();
      if (!slot.defined) break;
      define_at(slot.coset, slot.col);
    }
    return compact();
  }

 private:
  struct Slot {
    bool defined = false;
    std::int32_t coset = 0;
    std::int32_t col = 0;
  };

  static constexpr std::int32_t kUndef = -1;

  std::int32_t ngens_;
  std::int32_t ncols_;
  std::int32_t max_cosets_;
  std::vector<Word> relators_;
  std::vector<Word> subgroup_gens_;

  std::vector<std::int32_t> tab_;     // ncols_ entries per allocated coset
  std::vector<std::int32_t> parent_;  // union-find, parent_[c] <= c for reps
  std::deque<std::int32_t> dead_;     // merged cosets awaiting row transfer
  std::int64_t live_ = 0;
  std::int64_t high_water_ = 0;
  std::int64_t defined_total_ = 0;

  std::int32_t allocate_coset() {
    if (live_ >= max_cosets_)
      throw Error(errc::budget_exhausted,
                  "coset budget exhausted at " + std::to_string(max_cosets_) +
                      " live cosets",
                  0, high_water_);
    // Backstop against define/collapse churn with bounded live count.
    if (defined_total_ >
        static_cast<std::int64_t>(max_cosets_) * 10 + 10000)
      throw Error(errc::budget_exhausted, "coset definition churn backstop",
                  0, high_water_);
    std::int32_t id = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(id);
    tab_.insert(tab_.end(), ncols_, kUndef);
    ++live_;
    ++defined_total_;
    if (live_ > high_water_) high_water_ = live_;
    return id;
  }

  std::int32_t find(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      std::int32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  bool live(std::int32_t c) { return parent_[c] == c; }

  std::int32_t get(std::int32_t c, std::int32_t col) {
    std::int32_t v = tab_[static_cast<std::size_t>(c) * ncols_ + col];
    if (v == kUndef) return kUndef;
    v = find(v);
    tab_[static_cast<std::size_t>(c) * ncols_ + col] = v;
    return v;
  }

  void set(std::int32_t c, std::int32_t col, std::int32_t v) {
    tab_[static_cast<std::size_t>(c) * ncols_ + col] = v;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    dead_.push_back(b);
  }

  // Transfers each dead coset's row into its survivor, merging further
  // cosets on clashes, until the queue drains.
  void process_coincidences() {
    while (!dead_.empty()) {
      std::int32_t gamma = dead_.front();
      dead_.pop_front();
      for (std::int32_t col = 0; col < ncols_; ++col) {
        std::int32_t delta =
            tab_[static_cast<std::size_t>(gamma) * ncols_ + col];
        if (delta == kUndef) continue;
        set(gamma, col, kUndef);
        std::int32_t inv = col ^ 1;
        tab_[static_cast<std::size_t>(delta) * ncols_ + inv] = kUndef;
        std::int32_t mu = find(gamma);
        std::int32_t nu = find(delta);
        std::int32_t mu_x = get(mu, col);
        if (mu_x != kUndef) {
          merge(nu, mu_x);
        } else {
          std::int32_t nu_inv = get(nu, inv);
          if (nu_inv != kUndef) {
            merge(mu, nu_inv);
          } else {
            set(mu, col, nu);
            set(nu, inv, mu);
          }
        }
      }
    }
  }

  enum class ScanOutcome { nothing, deduced, coincided };

  // One relator trace from coset c: forward while defined, backward while
  // defined; a single-letter gap becomes a deduction, a met mismatch a
  // coincidence.
  ScanOutcome scan(std::int32_t c, const Word& w) {
    std::int32_t f = c;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n) {
      std::int32_t next = get(f, CosetTable::column(w[i]));
      if (next == kUndef) break;
      f = next;
      ++i;
    }
    if (i == n) {
      if (f != c) {
        merge(f, c);
        process_coincidences();
        return ScanOutcome::coincided;
      }
      return ScanOutcome::nothing;
    }
    std::int32_t b = c;
    std::size_t j = n;
    while (j > i) {
      std::int32_t next = get(b, CosetTable::column(-w[j - 1]));
      if (next == kUndef) break;
      b = next;
      --j;
    }
    if (j == i) {
      // Both traces met with a mismatch.
      if (f != b) {
        merge(f, b);
        process_coincidences();
        return ScanOutcome::coincided;
      }
      return ScanOutcome::nothing;
    }
    if (j == i + 1) {
      set(f, CosetTable::column(w[i]), b);
      set(b, CosetTable::column(-w[i]), f);
      return ScanOutcome::deduced;
    }
    return ScanOutcome::nothing;
  }

  // Scans everything until a full pass changes nothing. Restarts the pass
  // after any coincidence since merged ids invalidate the iteration.
  bool scan_to_fixpoint() {
    bool ever_changed = false;
    bool changed = true;
    while (changed) {
      changed = false;
      bool restart = false;
      for (const Word& w : subgroup_gens_) {
        ScanOutcome out = scan(0, w);
        if (out == ScanOutcome::coincided) {
          restart = true;
          break;
        }
        if (out == ScanOutcome::deduced) changed = true;
      }
      if (!restart) {
        for (std::int32_t c = 0;
             c < static_cast<std::int32_t>(parent_.size()) && !restart; ++c) {
          if (!live(c)) continue;
          for (const Word& r : relators_) {
            ScanOutcome out = scan(c, r);
            if (out == ScanOutcome::coincided) {
              restart = true;
              break;
            }
            if (out == ScanOutcome::deduced) changed = true;
          }
        }
      }
      if (restart) changed = true;
      ever_changed |= changed;
    }
    return ever_changed;
  }

  Slot first_undefined() {
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(parent_.size());
         ++c) {
      if (!live(c)) continue;
      for (std::int32_t col = 0; col < ncols_; ++col)
        if (get(c, col) == kUndef) return {true, c, col};
    }
    return {};
  }

  void define_at(std::int32_t c, std::int32_t col) {
    std::int32_t fresh = allocate_coset();
    set(c, col, fresh);
    set(fresh, col ^ 1, c);
  }

  CosetTable compact() {
    std::vector<std::int32_t> new_id(parent_.size(), kUndef);
    std::int32_t count = 0;
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(parent_.size());
         ++c)
      if (live(c)) new_id[c] = count++;

    CosetTable t;
    t.generator_count = ngens_;
    t.index = count;
    t.complete = true;
    t.entries.assign(static_cast<std::size_t>(count) * ncols_, kUndef);
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(parent_.size());
         ++c) {
      if (!live(c)) continue;
      for (std::int32_t col = 0; col < ncols_; ++col)
        t.at(new_id[c], col) = new_id[get(c, col)];
    }
    return t;
  }
};

}  // namespace detail

// Todd-Coxeter coset enumeration. Returns a complete table whose index is
// [G : H] when the subgroup has finite index reachable within max_cosets
// live cosets; otherwise throws budget_exhausted carrying the live-coset
// high-water mark. Identical inputs produce identical tables.
inline CosetTable enumerate_cosets(const Presentation& p,
                                   const std::vector<Word>& subgroup_gens,
                                   std::int32_t max_cosets) {
  if (max_cosets < 1)
    throw Error(errc::bad_input, "max_cosets must be positive");
  detail::CosetEnumerator enumerator(p, subgroup_gens, max_cosets);
  return enumerator.run();
}

}  // namespace dsp
