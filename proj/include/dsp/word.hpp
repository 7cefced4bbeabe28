#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace dsp {

// A letter is a signed 1-based generator index: +g is the generator,
// -g its inverse. A word is a letter sequence; the empty word is the
// identity. Words handed around the library are kept freely reduced.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline Word free_reduce(const Word& raw) {
  Word out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

// Strips mutually inverse first/last letters; expects freely reduced input.
// The result is a conjugate of the input.
inline Word cyclically_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

inline bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != -w.back();
}

inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(out);
}

// [u, v] = u v u^-1 v^-1, freely reduced.
inline Word commutator(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  Word ui = inverse_word(u), vi = inverse_word(v);
  out.insert(out.end(), ui.begin(), ui.end());
  out.insert(out.end(), vi.begin(), vi.end());
  return free_reduce(out);
}

}  // namespace dsp
