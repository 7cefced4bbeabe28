#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsp/coset_table.hpp"
#include "dsp/error.hpp"
#include "dsp/presentation.hpp"
#include "dsp/word.hpp"

namespace dsp {

// Schreier transversal and generator labels for a complete coset table.
// generator_map is indexed (coset, column) like the table itself: the value
// is the 1-based Schreier generator id of rep(c)*g*rep(c^g)^-1 for positive
// columns, 0 when that element is trivial (a tree edge). Inverse columns
// carry the id of the generator the reversed edge belongs to.
struct SchreierData {
  std::vector<Word> transversal;
  std::vector<std::int32_t> generator_map;
  std::int32_t schreier_generator_count = 0;

  std::int32_t label(std::int32_t coset, std::int32_t col,
                     std::int32_t ncols) const {
    return generator_map[static_cast<std::size_t>(coset) * ncols + col];
  }
};

// BFS from coset 0 over columns in order (g1, g1^-1, g2, g2^-1, ...).
// The transversal is prefix-closed and representatives are shortest words.
inline SchreierData schreier_transversal(const CosetTable& t) {
  const std::int32_t ncols = t.columns();
  SchreierData data;
  data.transversal.assign(t.index, Word{});
  data.generator_map.assign(static_cast<std::size_t>(t.index) * ncols, 0);

  std::vector<char> seen(t.index, 0);
  std::vector<char> tree_edge(static_cast<std::size_t>(t.index) * ncols, 0);
  std::vector<std::int32_t> queue = {0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::int32_t c = queue[head];
    for (std::int32_t col = 0; col < ncols; ++col) {
      std::int32_t d = t.at(c, col);
      if (seen[d]) continue;
      seen[d] = 1;
      Letter x = (col % 2 == 0) ? (col / 2 + 1) : -(col / 2 + 1);
      data.transversal[d] = data.transversal[c];
      data.transversal[d].push_back(x);
      // The tree edge kills one Schreier generator: (c, g) when followed
      // forwards, (d, g) when the edge was taken via g^-1.
      if (col % 2 == 0)
        tree_edge[static_cast<std::size_t>(c) * ncols + col] = 1;
      else
        tree_edge[static_cast<std::size_t>(d) * ncols + (col ^ 1)] = 1;
      queue.push_back(d);
    }
  }

  std::int32_t next_id = 0;
  for (std::int32_t c = 0; c < t.index; ++c)
    for (std::int32_t g = 1; g <= t.generator_count; ++g) {
      std::int32_t col = CosetTable::column(g);
      std::size_t slot = static_cast<std::size_t>(c) * ncols + col;
      if (!tree_edge[slot]) data.generator_map[slot] = ++next_id;
    }
  data.schreier_generator_count = next_id;

  // An inverse column letter -g at coset c traverses the (c^(g^-1), g)
  // edge backwards.
  for (std::int32_t c = 0; c < t.index; ++c)
    for (std::int32_t g = 1; g <= t.generator_count; ++g) {
      std::int32_t inv_col = CosetTable::column(-g);
      std::int32_t d = t.at(c, inv_col);
      data.generator_map[static_cast<std::size_t>(c) * ncols + inv_col] =
          data.label(d, CosetTable::column(g), ncols);
    }
  return data;
}

// The Schreier generator rep(c)*g*rep(c^g)^-1 as a word of the base group.
inline Word schreier_generator_word(const CosetTable& t,
                                    const SchreierData& s, std::int32_t c,
                                    std::int32_t g) {
  Word w = s.transversal[c];
  w.push_back(g);
  Word back = inverse_word(s.transversal[t.act(c, g)]);
  w.insert(w.end(), back.begin(), back.end());
  return free_reduce(w);
}

// Words generating the subgroup a table encodes: all nontrivial Schreier
// generators, in (coset, generator) order.
inline std::vector<Word> subgroup_generator_words(const CosetTable& t,
                                                  const SchreierData& s) {
  std::vector<Word> out;
  for (std::int32_t c = 0; c < t.index; ++c)
    for (std::int32_t g = 1; g <= t.generator_count; ++g)
      if (s.label(c, CosetTable::column(g), t.columns()) != 0)
        out.push_back(schreier_generator_word(t, s, c, g));
  return out;
}

struct RewriteStats {
  std::int64_t schreier_generator_count = 0;
  std::int64_t raw_relator_count = 0;  // index * relators of the base group
  std::int64_t kept_relator_count = 0;
  std::int64_t emitted_letters = 0;
};

struct RewriteResult {
  Presentation presentation;
  RewriteStats stats;
};

// Reidemeister-Schreier: a presentation of the subgroup a complete table
// encodes, on the nontrivial Schreier generators x1..xk. Each base relator
// is rewritten once per coset; tree-edge letters vanish during emission, so
// a rewritten relator is never longer than the original.
inline RewriteResult rewrite_subgroup_presentation(
    const Presentation& p, const CosetTable& t,
    std::int64_t letter_budget = kDefaultLetterBudget) {
  SchreierData s = schreier_transversal(t);
  const std::int32_t ncols = t.columns();

  RewriteResult result;
  RewriteStats& stats = result.stats;
  stats.schreier_generator_count = s.schreier_generator_count;

  Presentation& sub = result.presentation;
  sub.generator_names.reserve(s.schreier_generator_count);
  for (std::int32_t i = 1; i <= s.schreier_generator_count; ++i)
    sub.generator_names.push_back("x" + std::to_string(i));

  for (std::int32_t c = 0; c < t.index; ++c) {
    for (const Word& r : p.relators) {
      ++stats.raw_relator_count;
      Word rewritten;
      std::int32_t d = c;
      for (Letter x : r) {
        std::int32_t col = CosetTable::column(x);
        if (x > 0) {
          std::int32_t id = s.label(d, col, ncols);
          if (id != 0) rewritten.push_back(id);
          d = t.at(d, col);
        } else {
          std::int32_t e = t.at(d, col);
          std::int32_t id = s.label(e, CosetTable::column(-x), ncols);
          if (id != 0) rewritten.push_back(-id);
          d = e;
        }
      }
      stats.emitted_letters += static_cast<std::int64_t>(rewritten.size());
      if (stats.emitted_letters > letter_budget)
        throw Error(errc::letter_budget_exceeded,
                    "rewritten relators exceed letter budget");
      Word reduced = cyclically_reduce(free_reduce(rewritten));
      if (!reduced.empty()) {
        sub.relators.push_back(std::move(reduced));
        ++stats.kept_relator_count;
      }
    }
  }
  return result;
}

}  // namespace dsp
