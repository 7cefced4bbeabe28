#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsp/integer_matrix.hpp"

namespace dsp {

// D = U * M * V with U, V unimodular and D diagonal, nonnegative, each
// invariant factor dividing the next. invariant_factors lists the nonzero
// diagonal entries (leading 1s included); rank is their count.
struct SmithForm {
  std::vector<Int> invariant_factors;
  std::int64_t rank = 0;
  std::optional<IntegerMatrix> left;   // U, rows x rows
  std::optional<IntegerMatrix> right;  // V, cols x cols
};

namespace detail {

class SmithReducer {
 public:
  SmithReducer(IntegerMatrix m, bool want_transforms)
      : m_(std::move(m)), track_(want_transforms) {
    if (track_) {
      u_ = IntegerMatrix::identity(m_.rows);
      v_ = IntegerMatrix::identity(m_.cols);
    }
  }

  SmithForm run() {
    std::int64_t k = 0;
    while (k < m_.rows && k < m_.cols && reduce_pivot(k)) ++k;
    for (std::int64_t i = 0; i < k; ++i)
      if (m_.at(i, i) < 0) negate_row(i);
    enforce_divisibility(k);

    SmithForm out;
    out.rank = k;
    for (std::int64_t i = 0; i < k; ++i)
      out.invariant_factors.push_back(m_.at(i, i));
    if (track_) {
      out.left = std::move(u_);
      out.right = std::move(v_);
    }
    return out;
  }

 private:
  IntegerMatrix m_;
  bool track_;
  IntegerMatrix u_, v_;

  void swap_rows(std::int64_t a, std::int64_t b) {
    if (a == b) return;
    for (std::int64_t j = 0; j < m_.cols; ++j)
      std::swap(m_.at(a, j), m_.at(b, j));
    if (track_)
      for (std::int64_t j = 0; j < u_.cols; ++j)
        std::swap(u_.at(a, j), u_.at(b, j));
  }

  void swap_cols(std::int64_t a, std::int64_t b) {
    if (a == b) return;
    for (std::int64_t i = 0; i < m_.rows; ++i)
      std::swap(m_.at(i, a), m_.at(i, b));
    if (track_)
      for (std::int64_t i = 0; i < v_.rows; ++i)
        std::swap(v_.at(i, a), v_.at(i, b));
  }

  // row a -= q * row b
  void row_op(std::int64_t a, std::int64_t b, const Int& q) {
    if (q == 0) return;
    for (std::int64_t j = 0; j < m_.cols; ++j) m_.at(a, j) -= q * m_.at(b, j);
    if (track_)
      for (std::int64_t j = 0; j < u_.cols; ++j)
        u_.at(a, j) -= q * u_.at(b, j);
  }

  // col a -= q * col b
  void col_op(std::int64_t a, std::int64_t b, const Int& q) {
    if (q == 0) return;
    for (std::int64_t i = 0; i < m_.rows; ++i) m_.at(i, a) -= q * m_.at(i, b);
    if (track_)
      for (std::int64_t i = 0; i < v_.rows; ++i)
        v_.at(i, a) -= q * v_.at(i, b);
  }

  void negate_row(std::int64_t r) {
    for (std::int64_t j = 0; j < m_.cols; ++j) m_.at(r, j) = -m_.at(r, j);
    if (track_)
      for (std::int64_t j = 0; j < u_.cols; ++j) u_.at(r, j) = -u_.at(r, j);
  }

  // Smallest nonzero |entry| in the k.. block, ties broken by row then
  // column, so reduction order is deterministic.
  bool find_pivot(std::int64_t k, std::int64_t& pr, std::int64_t& pc) {
    bool found = false;
    Int best;
    for (std::int64_t i = k; i < m_.rows; ++i)
      for (std::int64_t j = k; j < m_.cols; ++j) {
        const Int& e = m_.at(i, j);
        if (e == 0) continue;
        Int a = abs(e);
        if (!found || a < best) {
          found = true;
          best = std::move(a);
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  // Clear row k and column k below/right of the pivot at (k, k). Returns
  // false when the remaining block is zero (rank reached).
  bool reduce_pivot(std::int64_t k) {
    std::int64_t pr, pc;
    if (!find_pivot(k, pr, pc)) return false;
    swap_rows(k, pr);
    swap_cols(k, pc);

    for (;;) {
      bool dirty = false;
      for (std::int64_t i = k + 1; i < m_.rows; ++i) {
        if (m_.at(i, k) == 0) continue;
        Int q = m_.at(i, k) / m_.at(k, k);
        row_op(i, k, q);
        if (m_.at(i, k) != 0) {
          // Remainder is strictly smaller than the pivot; promote it.
          swap_rows(k, i);
          dirty = true;
        }
      }
      for (std::int64_t j = k + 1; j < m_.cols; ++j) {
        if (m_.at(k, j) == 0) continue;
        Int q = m_.at(k, j) / m_.at(k, k);
        col_op(j, k, q);
        if (m_.at(k, j) != 0) {
          swap_cols(k, j);
          dirty = true;
        }
      }
      if (!dirty) return true;
    }
  }

  // Make d(i) | d(i+1) along the diagonal: pull offending entries into
  // column i and re-clear. Bubbling repeats until the chain holds.
  void enforce_divisibility(std::int64_t k) {
    for (std::int64_t i = 0; i + 1 < k;) {
      if (m_.at(i + 1, i + 1) % m_.at(i, i) == 0) {
        ++i;
        continue;
      }
      col_op(i, i + 1, Int(-1));  // col i += col i+1
      fix_block(i);
      i = i > 0 ? i - 1 : 0;
    }
  }

  // After the diagonal block at (i, i) gained an off-diagonal entry,
  // restore diagonal form in rows/cols i and i+1.
  void fix_block(std::int64_t i) {
    for (;;) {
      std::int64_t pr = i, pc = i;
      Int best = abs(m_.at(i, i));
      auto consider = [&](std::int64_t r, std::int64_t c) {
        const Int& e = m_.at(r, c);
        if (e == 0) return;
        Int a = abs(e);
        if (best == 0 || a < best) {
          best = std::move(a);
          pr = r;
          pc = c;
        }
      };
      consider(i, i + 1);
      consider(i + 1, i);
      consider(i + 1, i + 1);
      swap_rows(i, pr);
      swap_cols(i, pc);

      {
        Int q = m_.at(i + 1, i) / m_.at(i, i);
        row_op(i + 1, i, q);
      }
      {
        Int q = m_.at(i, i + 1) / m_.at(i, i);
        col_op(i + 1, i, q);
      }
      if (m_.at(i + 1, i) == 0 && m_.at(i, i + 1) == 0) break;
    }
    if (m_.at(i, i) < 0) negate_row(i);
    if (m_.at(i + 1, i + 1) < 0) negate_row(i + 1);
  }
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& m,
                                   bool want_transforms = false) {
  return detail::SmithReducer(m, want_transforms).run();
}

}  // namespace dsp
