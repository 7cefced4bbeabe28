#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "dsp/presentation.hpp"
#include "dsp/word.hpp"

namespace dsp {

inline constexpr std::int64_t kDefaultTietzeBudget = 100'000;

struct SimplifyResult {
  Presentation presentation;
  std::int64_t moves = 0;
  bool budget_exhausted = false;
};

namespace detail {

// Remove generator g (1-based) from the name list and renumber letters
// above it. Every occurrence of +-g must already be gone.
inline void drop_generator(Presentation& p, std::int32_t g) {
  p.generator_names.erase(p.generator_names.begin() + (g - 1));
  for (Word& r : p.relators)
    for (Letter& x : r) {
      if (x > g) --x;
      if (x < -g) ++x;
    }
}

inline void tidy_relators(Presentation& p) {
  for (Word& r : p.relators) r = cyclically_reduce(free_reduce(r));
  std::erase_if(p.relators, [](const Word& r) { return r.empty(); });
}

// Replace every occurrence of +-g by the matching power of `image`
// (image = the word g maps to; occurrences of -g get its inverse).
inline void substitute_generator(Presentation& p, std::int32_t g,
                                 const Word& image) {
  Word image_inv = inverse_word(image);
  for (Word& r : p.relators) {
    Word out;
    out.reserve(r.size());
    for (Letter x : r) {
      if (x == g)
        out.insert(out.end(), image.begin(), image.end());
      else if (x == -g)
        out.insert(out.end(), image_inv.begin(), image_inv.end());
      else
        out.push_back(x);
    }
    r = std::move(out);
  }
  tidy_relators(p);
  drop_generator(p, g);
}

}  // namespace detail

// Conservative presentation simplification. Moves, tried in this order and
// restarted after each application:
//   1. a length-1 relator makes its generator trivial; erase it everywhere
//   2. a length-2 relator on two distinct generators identifies them (up to
//      inversion); eliminate the higher-numbered one
//   3. a generator with exactly one occurrence across all relators is
//      defined by that relator; drop both
// Relators stay freely and cyclically reduced throughout. Each elimination
// counts as one move against the budget.
inline SimplifyResult simplify_presentation(
    const Presentation& input, std::int64_t move_budget = kDefaultTietzeBudget) {
  SimplifyResult result;
  Presentation& p = result.presentation;
  p = input;
  detail::tidy_relators(p);

  auto spend_move = [&result, move_budget]() {
    if (result.moves >= move_budget) {
      result.budget_exhausted = true;
      return false;
    }
    ++result.moves;
    return true;
  };

  for (;;) {
    std::int32_t trivial_gen = 0;
    for (const Word& r : p.relators)
      if (r.size() == 1) {
        trivial_gen = std::abs(r[0]);
        break;
      }
    if (trivial_gen != 0) {
      if (!spend_move()) return result;
      detail::substitute_generator(p, trivial_gen, Word{});
      continue;
    }

    std::int32_t from = 0;
    Word to_image;
    for (const Word& r : p.relators) {
      if (r.size() != 2) continue;
      std::int32_t a = std::abs(r[0]), b = std::abs(r[1]);
      if (a == b) continue;
      // r[0] r[1] = 1, so larger = smaller^(-sign(r[0])*sign(r[1])).
      std::int32_t sign = (r[0] > 0) == (r[1] > 0) ? -1 : 1;
      if (a > b) {
        from = a;
        to_image = {sign > 0 ? b : -b};
      } else {
        from = b;
        to_image = {sign > 0 ? a : -a};
      }
      break;
    }
    if (from != 0) {
      if (!spend_move()) return result;
      detail::substitute_generator(p, from, to_image);
      continue;
    }

    std::vector<std::int64_t> occurrences(p.generator_count() + 1, 0);
    for (const Word& r : p.relators)
      for (Letter x : r) ++occurrences[std::abs(x)];
    std::int32_t lone_gen = 0;
    for (std::int32_t g = 1; g <= p.generator_count(); ++g)
      if (occurrences[g] == 1) {
        lone_gen = g;
        break;
      }
    if (lone_gen != 0) {
      if (!spend_move()) return result;
      std::erase_if(p.relators, [lone_gen](const Word& r) {
        return std::any_of(r.begin(), r.end(), [lone_gen](Letter x) {
          return std::abs(x) == lone_gen;
        });
      });
      detail::drop_generator(p, lone_gen);
      continue;
    }

    return result;
  }
}

}  // namespace dsp
