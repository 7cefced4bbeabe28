#pragma once

#include <cstdint>
#include <vector>

#include "dsp/presentation.hpp"
#include "dsp/word.hpp"

namespace dsp {

// The action of group generators on right cosets of a subgroup. Coset 0 is
// the subgroup itself. Columns come in pairs per generator: column 2(g-1)
// is the action of g, column 2(g-1)+1 the action of g^-1.
struct CosetTable {
  std::int32_t generator_count = 0;
  std::int32_t index = 0;
  bool complete = false;
  std::vector<std::int32_t> entries;  // index rows * 2*generator_count

  static std::int32_t column(Letter x) {
    return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
  }

  std::int32_t columns() const { return 2 * generator_count; }

  std::int32_t at(std::int32_t coset, std::int32_t col) const {
    return entries[static_cast<std::size_t>(coset) * columns() + col];
  }

  std::int32_t& at(std::int32_t coset, std::int32_t col) {
    return entries[static_cast<std::size_t>(coset) * columns() + col];
  }

  std::int32_t act(std::int32_t coset, Letter x) const {
    return at(coset, column(x));
  }

  bool operator==(const CosetTable&) const = default;
};

// Image of coset c under w, letters applied left to right.
inline std::int32_t coset_action(const CosetTable& t, const Word& w,
                                 std::int32_t c) {
  for (Letter x : w) c = t.act(c, x);
  return c;
}

// True iff every subgroup generator fixes every coset, which for the
// stabilizer of coset 0 is equivalent to normality.
inline bool is_normal(const CosetTable& t,
                      const std::vector<Word>& subgroup_gens) {
  for (const Word& w : subgroup_gens)
    for (std::int32_t c = 0; c < t.index; ++c)
      if (coset_action(t, w, c) != c) return false;
  return true;
}

// Independent checker for complete tables: definedness, mutually inverse
// generator actions, relator closure at every coset, subgroup generators
// fixing coset 0, and transitivity. Plain scanning, no enumeration state.
inline bool verify_table(const Presentation& p,
                         const std::vector<Word>& subgroup_gens,
                         const CosetTable& t) {
  if (!t.complete || t.index <= 0) return false;
  if (t.generator_count != p.generator_count()) return false;
  if (t.entries.size() !=
      static_cast<std::size_t>(t.index) * t.columns())
    return false;

  for (std::int32_t c = 0; c < t.index; ++c)
    for (std::int32_t col = 0; col < t.columns(); ++col) {
      std::int32_t d = t.at(c, col);
      if (d < 0 || d >= t.index) return false;
    }

  // g and g^-1 act as mutually inverse permutations.
  for (std::int32_t g = 1; g <= t.generator_count; ++g)
    for (std::int32_t c = 0; c < t.index; ++c) {
      if (t.act(t.act(c, g), -g) != c) return false;
      if (t.act(t.act(c, -g), g) != c) return false;
    }

  for (const Word& r : p.relators)
    for (std::int32_t c = 0; c < t.index; ++c)
      if (coset_action(t, r, c) != c) return false;

  for (const Word& w : subgroup_gens)
    if (coset_action(t, w, 0) != 0) return false;

  // Transitivity: BFS from coset 0 reaches everything.
  std::vector<char> seen(t.index, 0);
  std::vector<std::int32_t> queue = {0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::int32_t c = queue[head];
    for (std::int32_t col = 0; col < t.columns(); ++col) {
      std::int32_t d = t.at(c, col);
      if (!seen[d]) {
        seen[d] = 1;
        queue.push_back(d);
      }
    }
  }
  return queue.size() == static_cast<std::size_t>(t.index);
}

}  // namespace dsp
