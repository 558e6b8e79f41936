#pragma once

// Monge matrices under the min-plus (distance) product, and the transforms
// that carry kelp beds into them.
//
// A square matrix is Monge when every contiguous 2x2 block satisfies
//   A(i,j) + A(i+1,j+1) <= A(i,j+1) + A(i+1,j).
// It is simple when in addition its first column and bottom row are zero
// (which together with the inequality forces all entries nonnegative).
//
// density     inverts distribution on matrices with a zero lower-left
//             boundary; on Monge input its entries are nonnegative.
// phi         embeds an n x n kelp bed as an (n+1) x (n+1) simple Monge
//             matrix: phi(X)(i,j) counts kelps with top >= i and bottom < j.
// The distance product C(i,j) = min_k A(i,k) + B(k,j) always resolves ties
// to the leftmost k; both product implementations report bit-identical
// argmin arrays.

#include <optional>

#include "kelpbed/types.hpp"

namespace kelp {

// Top-left corner (1-based) of a 2x2 block violating the Monge inequality.
struct MongeViolation {
  Index row = 0;
  Index col = 0;
};

inline std::optional<MongeViolation> first_monge_violation(const MatrixCRef& a) {
  require(is_square(a), "matrix must be square");
  for (Index i = 0; i + 1 < a.rows(); ++i) {
    for (Index j = 0; j + 1 < a.cols(); ++j) {
      if (a(i, j) + a(i + 1, j + 1) > a(i, j + 1) + a(i + 1, j)) {
        return MongeViolation{i + 1, j + 1};
      }
    }
  }
  return std::nullopt;
}

inline bool is_monge(const MatrixCRef& a) {
  return !first_monge_violation(a).has_value();
}

inline bool has_zero_lower_left_boundary(const MatrixCRef& a) {
  require(is_square(a), "matrix must be square");
  if (a.rows() == 0) return true;
  return a.col(0).isZero() && a.row(a.rows() - 1).isZero();
}

inline bool is_simple_monge(const MatrixCRef& a) {
  return has_zero_lower_left_boundary(a) && is_monge(a);
}

// Delta: second mixed difference toward the lower-left, zero on the first
// column and bottom row.  Rejects non-Monge input so the result is a valid
// (nonnegative) multiplicity matrix.
inline IntMatrix density(const MatrixCRef& a) {
  require(is_monge(a), "matrix is not Monge");
  const Index m = a.rows();
  IntMatrix d = IntMatrix::Zero(m, m);
  for (Index i = 0; i + 1 < m; ++i) {
    for (Index j = 1; j < m; ++j) {
      d(i, j) = a(i, j) + a(i + 1, j - 1) - a(i, j - 1) - a(i + 1, j);
    }
  }
  return d;
}

// Sigma: running totals toward the lower-left,
//   S(i,j) = sum of B(i',j') over i' >= i, j' <= j.
inline IntMatrix distribution(const MatrixCRef& b) {
  require(is_square(b), "matrix must be square");
  require(b.size() == 0 || b.minCoeff() >= 0, "distribution input must be nonnegative");
  const Index m = b.rows();
  IntMatrix s(m, m);
  for (Index i = m - 1; i >= 0; --i) {
    for (Index j = 0; j < m; ++j) {
      s(i, j) = b(i, j) + (i + 1 < m ? s(i + 1, j) : 0) + (j > 0 ? s(i, j - 1) : 0) -
                (i + 1 < m && j > 0 ? s(i + 1, j - 1) : 0);
    }
  }
  return s;
}

// Embed an n x n matrix into the upper-right block of an (n+1) x (n+1)
// matrix whose first column and bottom row are zero.
inline IntMatrix pad_lower_left(const MatrixCRef& x) {
  require(is_square(x), "matrix must be square");
  const Index n = x.rows();
  IntMatrix a = IntMatrix::Zero(n + 1, n + 1);
  if (n > 0) a.block(0, 1, n, n) = x;
  return a;
}

inline IntMatrix upper_right_block(const MatrixCRef& a) {
  require(is_square(a), "matrix must be square");
  require(a.rows() >= 2, "matrix dimension must be at least 2");
  return a.block(0, 1, a.rows() - 1, a.cols() - 1);
}

// The kelp-bed embedding: phi(X)(i,j) = number of kelps of X with top
// vertex >= i and bottom vertex < j (1-based).  Always simple Monge, and
// phi is a bijection onto the simple Monge matrices one dimension up.
inline IntMatrix phi(const MatrixCRef& x) {
  require(is_square(x), "kelp bed matrix must be square");
  return distribution(pad_lower_left(x));
}

inline IntMatrix phi_inverse(const MatrixCRef& a) {
  require(is_square(a), "matrix must be square");
  require(a.rows() >= 2, "matrix dimension must be at least 2");
  require(has_zero_lower_left_boundary(a),
          "matrix is not simple: nonzero first column or bottom row");
  require(is_monge(a), "matrix is not Monge");
  return upper_right_block(density(a));
}

// Naive min-plus product; reference implementation and tie-break canon.
inline IntMatrix distance_product(const MatrixCRef& a, const MatrixCRef& b,
                                  IndexMatrix* argmin = nullptr) {
  require(is_square(a) && is_square(b), "matrices must be square");
  require(a.rows() == b.rows(), "matrices must have equal dimensions");
  const Index m = a.rows();
  IntMatrix c(m, m);
  if (argmin) argmin->setZero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      std::int64_t best = a(i, 0) + b(0, j);
      Index best_k = 0;
      for (Index k = 1; k < m; ++k) {
        const std::int64_t v = a(i, k) + b(k, j);
        if (v < best) {
          best = v;
          best_k = k;
        }
      }
      c(i, j) = best;
      if (argmin) (*argmin)(i, j) = best_k;
    }
  }
  return c;
}

namespace detail {

// Row i of A against Monge B: the leftmost argmin per output column is
// nondecreasing, so recurse on the middle column and split the k-range.
// Scanning k upward with strict improvement reproduces the naive leftmost
// tie-break exactly.
inline void min_plus_row(const MatrixCRef& a, const MatrixCRef& b, Index i,
                         Index col_lo, Index col_hi, Index k_lo, Index k_hi,
                         IntMatrix& c, IndexMatrix* argmin) {
  if (col_lo > col_hi) return;
  const Index mid = col_lo + (col_hi - col_lo) / 2;
  std::int64_t best = a(i, k_lo) + b(k_lo, mid);
  Index best_k = k_lo;
  for (Index k = k_lo + 1; k <= k_hi; ++k) {
    const std::int64_t v = a(i, k) + b(k, mid);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  c(i, mid) = best;
  if (argmin) (*argmin)(i, mid) = best_k;
  min_plus_row(a, b, i, col_lo, mid - 1, k_lo, best_k, c, argmin);
  min_plus_row(a, b, i, mid + 1, col_hi, best_k, k_hi, c, argmin);
}

}  // namespace detail

// Divide-and-conquer min-plus product, O(m^2 log m), bit-identical to
// distance_product (values and argmin arrays) on its domain.
inline IntMatrix distance_product_monge(const MatrixCRef& a, const MatrixCRef& b,
                                        IndexMatrix* argmin = nullptr) {
  require(is_square(a) && is_square(b), "matrices must be square");
  require(a.rows() == b.rows(), "matrices must have equal dimensions");
  require(is_simple_monge(a), "left factor is not simple Monge");
  require(is_simple_monge(b), "right factor is not simple Monge");
  const Index m = a.rows();
  IntMatrix c(m, m);
  if (argmin) argmin->setZero(m, m);
  for (Index i = 0; i < m; ++i) {
    detail::min_plus_row(a, b, i, 0, m - 1, 0, m - 1, c, argmin);
  }
  return c;
}

// S(A)(i,j) = A(i,1) + A(m,j) - A(m,1): the rank-one (in min-plus terms,
// constant-difference) part split off by the decomposition below.
inline IntMatrix sum_matrix(const MatrixCRef& a) {
  require(is_square(a), "matrix must be square");
  const Index m = a.rows();
  IntMatrix s(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      s(i, j) = a(i, 0) + a(m - 1, j) - a(m - 1, 0);
    }
  }
  return s;
}

struct MongeDecomposition {
  IntMatrix simple_part;  // simple Monge
  IntMatrix sum_part;     // entries may be negative
};

// A = distribution(density(A)) + sum_matrix(A) for every Monge A.
inline MongeDecomposition monge_decomposition(const MatrixCRef& a) {
  return MongeDecomposition{distribution(density(a)), sum_matrix(a)};
}

// Norms on nonnegative matrices.  Through phi they grade kelp beds:
// norm_max(phi(X)) counts the kelps of X, and norm_l11(phi(X)) weighs each
// kelp by top vertex times the bottom vertex's distance from the right edge.
inline std::int64_t norm_max(const MatrixCRef& a) {
  return a.size() == 0 ? 0 : a.maxCoeff();
}

inline std::int64_t norm_l11(const MatrixCRef& a) {
  return a.size() == 0 ? 0 : a.sum();
}

}  // namespace kelp
