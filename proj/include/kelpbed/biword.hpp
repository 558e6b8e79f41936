#pragma once

// Biwords and kelp beds.
//
// A biword on [n] is a sequence of columns (top, bottom), sorted
// lexicographically.  Its kelp bed is the n x n multiplicity matrix X with
// X(a, b) = number of columns equal to (a, b); rows index top vertices and
// columns index bottom vertices, both 1-based.  The two encodings are
// interchangeable and everything downstream works on the matrix form.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kelpbed/types.hpp"

namespace kelp {

struct Biword {
  std::vector<Kelp> columns;

  Index size() const { return static_cast<Index>(columns.size()); }

  friend bool operator==(const Biword&, const Biword&) = default;
};

inline bool is_lex_sorted(const Biword& w) {
  return std::is_sorted(w.columns.begin(), w.columns.end(),
                        [](const Kelp& a, const Kelp& b) {
                          return a.top != b.top ? a.top < b.top : a.bottom < b.bottom;
                        });
}

// Multiplicity matrix of a biword.  Letters outside [1, n] are rejected.
inline IntMatrix biword_to_matrix(const Biword& w, Index n) {
  require(n >= 1, "dimension must be at least 1");
  IntMatrix x = IntMatrix::Zero(n, n);
  for (const Kelp& c : w.columns) {
    require(c.top >= 1 && c.top <= n && c.bottom >= 1 && c.bottom <= n,
            "biword letter out of range [1, n]");
    x(c.top - 1, c.bottom - 1) += 1;
  }
  return x;
}

// Canonical (lex-sorted) biword of a multiplicity matrix.
inline Biword matrix_to_biword(const MatrixCRef& x) {
  require(is_square(x), "kelp bed matrix must be square");
  require(x.size() == 0 || x.minCoeff() >= 0, "kelp multiplicities must be nonnegative");
  Biword w;
  for (Index a = 0; a < x.rows(); ++a) {
    for (Index b = 0; b < x.cols(); ++b) {
      for (std::int64_t m = 0; m < x(a, b); ++m) w.columns.push_back({a + 1, b + 1});
    }
  }
  return w;
}

inline std::int64_t total_kelps(const MatrixCRef& x) {
  return x.size() == 0 ? 0 : x.sum();
}

// Number of kelps whose top lies in [row_lo, row_hi] and bottom in
// [col_lo, col_hi], all bounds 1-based inclusive.  Empty or out-of-range
// intervals clamp (an interval with hi < lo counts nothing).
inline std::int64_t count_kelps(const MatrixCRef& x, Index row_lo, Index row_hi,
                                Index col_lo, Index col_hi) {
  row_lo = std::max<Index>(row_lo, 1);
  col_lo = std::max<Index>(col_lo, 1);
  row_hi = std::min(row_hi, x.rows());
  col_hi = std::min(col_hi, x.cols());
  if (row_hi < row_lo || col_hi < col_lo) return 0;
  return x.block(row_lo - 1, col_lo - 1, row_hi - row_lo + 1, col_hi - col_lo + 1).sum();
}

// Restriction of a kelp bed to a vertex rectangle, kept at full dimension so
// the result composes with every n x n operation.
inline IntMatrix sub_bed(const MatrixCRef& x, Index row_lo, Index row_hi,
                         Index col_lo, Index col_hi) {
  IntMatrix r = IntMatrix::Zero(x.rows(), x.cols());
  row_lo = std::max<Index>(row_lo, 1);
  col_lo = std::max<Index>(col_lo, 1);
  row_hi = std::min(row_hi, x.rows());
  col_hi = std::min(col_hi, x.cols());
  if (row_hi >= row_lo && col_hi >= col_lo) {
    r.block(row_lo - 1, col_lo - 1, row_hi - row_lo + 1, col_hi - col_lo + 1) =
        x.block(row_lo - 1, col_lo - 1, row_hi - row_lo + 1, col_hi - col_lo + 1);
  }
  return r;
}

}  // namespace kelp
