#pragma once

// Growth series of the graded families of simple Monge matrices, with exact
// coefficients, and the graded enumeration they count.
//
// Under the max norm the n-dimensional family has series 1/(1-q)^(n*n);
// under the L11 norm it is prod_{1<=i,j<=n} 1/(1-q^(i*j)), which stabilizes
// coefficientwise once n reaches the degree.  Series are built by repeated
// truncated multiplication with sparse geometric factors, so coefficients
// only ever get added together.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "kelpbed/monge.hpp"
#include "kelpbed/natural.hpp"
#include "kelpbed/types.hpp"

namespace kelp {

struct Series {
  std::vector<Natural> coeff;  // coeff[k] for 0 <= k <= truncation

  Index truncation() const { return static_cast<Index>(coeff.size()) - 1; }

  friend bool operator==(const Series&, const Series&) = default;
};

inline Series one_series(Index truncation) {
  require(truncation >= 0, "truncation must be nonnegative");
  Series s;
  s.coeff.assign(static_cast<std::size_t>(truncation) + 1, Natural());
  s.coeff[0] = 1;
  return s;
}

// In-place truncated multiplication by 1/(1 - q^step).
inline void multiply_geometric(Series& s, Index step) {
  require(step >= 1, "geometric factor step must be positive");
  for (Index k = step; k <= s.truncation(); ++k) {
    s.coeff[static_cast<std::size_t>(k)] += s.coeff[static_cast<std::size_t>(k - step)];
  }
}

inline Series series_max(Index n, Index truncation) {
  require(n >= 1, "dimension must be at least 1");
  Series s = one_series(truncation);
  for (Index f = 0; f < n * n; ++f) multiply_geometric(s, 1);
  return s;
}

inline Series series_l11(Index n, Index truncation) {
  require(n >= 1, "dimension must be at least 1");
  Series s = one_series(truncation);
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      if (i * j <= truncation) multiply_geometric(s, i * j);
    }
  }
  return s;
}

// Stable limit of series_l11 in the dimension: factors with step beyond the
// truncation cannot touch the kept coefficients, so dimension = truncation
// already realizes the limit.
inline Series series_l11_infinity(Index truncation) {
  return series_l11(std::max<Index>(truncation, 1), truncation);
}

// Coefficients of s/(1-q): counts "norm at most k" where s counts "norm
// exactly k".
inline Series partial_sum_series(const Series& s) {
  Series p = s;
  multiply_geometric(p, 1);
  return p;
}

enum class Norm { Max, L11 };

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

namespace detail {

struct WeightedCell {
  std::int64_t weight;
  Index row;  // 0-based position in the kelp bed matrix
  Index col;
};

// All multiplicity assignments over `cells` with given weighted total,
// heaviest cells first so infeasible branches die early.
template <typename Sink>
void assign_cells(const std::vector<WeightedCell>& cells, std::size_t at,
                  std::int64_t remaining, IntMatrix& bed, Sink&& sink) {
  if (at == cells.size()) {
    if (remaining == 0) sink(bed);
    return;
  }
  const WeightedCell& cell = cells[at];
  const std::int64_t max_mult = remaining / cell.weight;
  for (std::int64_t m = max_mult; m >= 0; --m) {
    bed(cell.row, cell.col) = m;
    assign_cells(cells, at + 1, remaining - m * cell.weight, bed,
                 std::forward<Sink>(sink));
  }
  bed(cell.row, cell.col) = 0;
}

inline std::vector<WeightedCell> graded_cells(Index n, Norm norm) {
  std::vector<WeightedCell> cells;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      // L11 weighs a cell by (row) * (distance from the right edge), 1-based.
      const std::int64_t w = norm == Norm::Max ? 1 : (r + 1) * (n - c);
      cells.push_back({w, r, c});
    }
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const WeightedCell& a, const WeightedCell& b) {
                     return a.weight > b.weight;
                   });
  return cells;
}

}  // namespace detail

// Every simple Monge matrix of dimension n+1 with the exact given norm,
// sorted row-major lexicographically.  Throws CapacityError beyond `cap`
// results.
inline std::vector<IntMatrix> enumerate_graded(Index n, std::int64_t k, Norm norm,
                                               std::int64_t cap = kDefaultEnumerationCap) {
  require(n >= 1, "dimension must be at least 1");
  require(k >= 0, "norm value must be nonnegative");
  const std::vector<detail::WeightedCell> cells = detail::graded_cells(n, norm);
  std::vector<IntMatrix> result;
  IntMatrix bed = IntMatrix::Zero(n, n);
  detail::assign_cells(cells, 0, k, bed, [&](const IntMatrix& b) {
    if (static_cast<std::int64_t>(result.size()) >= cap) {
      throw CapacityError("enumeration cap exceeded (cap " + std::to_string(cap) + ")");
    }
    result.push_back(phi(b));
  });
  std::sort(result.begin(), result.end(), matrix_less);
  return result;
}

// Norm-at-most-k variant (the filtration the partial-sum series counts).
inline std::vector<IntMatrix> enumerate_filtered(Index n, std::int64_t k, Norm norm,
                                                 std::int64_t cap = kDefaultEnumerationCap) {
  require(k >= 0, "norm value must be nonnegative");
  std::vector<IntMatrix> result;
  for (std::int64_t level = 0; level <= k; ++level) {
    std::vector<IntMatrix> graded = enumerate_graded(n, level, norm, cap);
    if (static_cast<std::int64_t>(result.size() + graded.size()) > cap) {
      throw CapacityError("enumeration cap exceeded (cap " + std::to_string(cap) + ")");
    }
    result.insert(result.end(), std::make_move_iterator(graded.begin()),
                  std::make_move_iterator(graded.end()));
  }
  std::sort(result.begin(), result.end(), matrix_less);
  return result;
}

}  // namespace kelp
