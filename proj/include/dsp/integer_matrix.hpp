#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dsp/presentation.hpp"
#include "dsp/word.hpp"

namespace dsp {

using Int = boost::multiprecision::cpp_int;

// Dense row-major integer matrix. Entries are arbitrary precision; relator
// exponent sums stay tiny but Smith reduction can blow coefficients up.
struct IntegerMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Int> entries;

  IntegerMatrix() = default;
  IntegerMatrix(std::int64_t r, std::int64_t c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  Int& at(std::int64_t r, std::int64_t c) {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  const Int& at(std::int64_t r, std::int64_t c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  static IntegerMatrix identity(std::int64_t n) {
    IntegerMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntegerMatrix&) const = default;
};

inline IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.rows, b.cols);
  for (std::int64_t i = 0; i < a.rows; ++i)
    for (std::int64_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::int64_t j = 0; j < b.cols; ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

// Row r = exponent sums of relator r: entry (r, g-1) counts letter g minus
// letter -g. One row per relator, one column per generator.
inline IntegerMatrix abelianized_relation_matrix(const Presentation& p) {
  IntegerMatrix m(static_cast<std::int64_t>(p.relators.size()),
                  p.generator_count());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (Letter x : p.relators[r]) {
      if (x > 0)
        m.at(static_cast<std::int64_t>(r), x - 1) += 1;
      else
        m.at(static_cast<std::int64_t>(r), -x - 1) -= 1;
    }
  return m;
}

}  // namespace dsp
