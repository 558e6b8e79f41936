#pragma once

// The extended Demazure product of kelp beds, the weight statistic it is
// built on, and the 0-Hecke monoid it restricts to on permutation beds.
//
// weight(X, Y) is the largest number of disjoint up-down pairs (x, y) with
// x from X above y from Y and bottom(x) <= top(y).  It is computed by the
// closed cut formula
//   min over 1 <= k <= n+1 of  #{x in X : bottom(x) < k} + #{y in Y : top(y) >= k},
// never by matching; weight_oracle recomputes it as an actual maximum
// bipartite matching over expanded kelp copies and exists to keep the
// formula honest.
//
// demazure_product follows the iterative selection rule: repeatedly pick
// the rightmost admissible x (top descending, then bottom descending,
// among kelps whose top is weakly left of everything already picked) that
// admits a leftmost y (bottom ascending, then top ascending) whose
// addition increases the weight of the selected sub-beds, then fuse each
// pair ((a,b),(c,d)) into the kelp (a,d).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kelpbed/biword.hpp"
#include "kelpbed/monge.hpp"
#include "kelpbed/types.hpp"

namespace kelp {

inline bool is_up_down_pair(const Kelp& x, const Kelp& y) { return x.bottom <= y.top; }

inline std::int64_t weight(const MatrixCRef& x, const MatrixCRef& y) {
  require(is_square(x) && is_square(y), "kelp bed matrices must be square");
  require(x.rows() == y.rows(), "kelp beds must have equal dimensions");
  const Index n = x.rows();
  // below[k] = #X with bottom < k, atop[k] = #Y with top >= k, 1 <= k <= n+1.
  std::vector<std::int64_t> below(n + 2, 0), atop(n + 2, 0);
  for (Index k = 2; k <= n + 1; ++k) below[k] = below[k - 1] + x.col(k - 2).sum();
  for (Index k = n; k >= 1; --k) atop[k] = atop[k + 1] + y.row(k - 1).sum();
  std::int64_t best = below[1] + atop[1];
  for (Index k = 2; k <= n + 1; ++k) best = std::min(best, below[k] + atop[k]);
  return best;
}

// One matched pair of a maximum up-down system.
struct UpDownPair {
  Kelp up;
  Kelp down;
};

inline bool is_up_down_system(const std::vector<UpDownPair>& pairs, const MatrixCRef& x,
                              const MatrixCRef& y) {
  IntMatrix used_x = IntMatrix::Zero(x.rows(), x.cols());
  IntMatrix used_y = IntMatrix::Zero(y.rows(), y.cols());
  for (const UpDownPair& p : pairs) {
    if (!is_up_down_pair(p.up, p.down)) return false;
    if (p.up.top < 1 || p.up.top > x.rows() || p.up.bottom < 1 || p.up.bottom > x.cols())
      return false;
    if (p.down.top < 1 || p.down.top > y.rows() || p.down.bottom < 1 ||
        p.down.bottom > y.cols())
      return false;
    used_x(p.up.top - 1, p.up.bottom - 1) += 1;
    used_y(p.down.top - 1, p.down.bottom - 1) += 1;
  }
  return (used_x.array() <= x.array()).all() && (used_y.array() <= y.array()).all();
}

inline constexpr std::int64_t kWeightOracleBound = 12;

namespace detail {

inline std::vector<Kelp> expand_copies(const MatrixCRef& x) {
  std::vector<Kelp> kelps;
  for (Index a = 0; a < x.rows(); ++a) {
    for (Index b = 0; b < x.cols(); ++b) {
      require(x(a, b) >= 0, "kelp multiplicities must be nonnegative");
      for (std::int64_t m = 0; m < x(a, b); ++m) kelps.push_back({a + 1, b + 1});
    }
  }
  return kelps;
}

inline bool try_augment(const std::vector<Kelp>& ups, const std::vector<Kelp>& downs,
                        std::size_t i, std::vector<char>& seen,
                        std::vector<std::ptrdiff_t>& match_down) {
  for (std::size_t j = 0; j < downs.size(); ++j) {
    if (seen[j] || !is_up_down_pair(ups[i], downs[j])) continue;
    seen[j] = 1;
    if (match_down[j] < 0 ||
        try_augment(ups, downs, static_cast<std::size_t>(match_down[j]), seen, match_down)) {
      match_down[j] = static_cast<std::ptrdiff_t>(i);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Maximum system of up-down pairs, found by augmenting paths over expanded
// kelp copies.  Deliberately brute force: this is the oracle the closed
// formula is checked against, so it shares no code with weight().
inline std::vector<UpDownPair> max_up_down_system(const MatrixCRef& x, const MatrixCRef& y,
                                                  std::int64_t bound = kWeightOracleBound) {
  require(is_square(x) && is_square(y), "kelp bed matrices must be square");
  require(x.rows() == y.rows(), "kelp beds must have equal dimensions");
  const std::vector<Kelp> ups = detail::expand_copies(x);
  const std::vector<Kelp> downs = detail::expand_copies(y);
  if (static_cast<std::int64_t>(ups.size()) > bound ||
      static_cast<std::int64_t>(downs.size()) > bound) {
    throw CapacityError("weight oracle bound exceeded (" + std::to_string(ups.size()) +
                        " x " + std::to_string(downs.size()) + " kelps, bound " +
                        std::to_string(bound) + ")");
  }
  std::vector<std::ptrdiff_t> match_down(downs.size(), -1);
  for (std::size_t i = 0; i < ups.size(); ++i) {
    std::vector<char> seen(downs.size(), 0);
    detail::try_augment(ups, downs, i, seen, match_down);
  }
  std::vector<UpDownPair> pairs;
  for (std::size_t j = 0; j < downs.size(); ++j) {
    if (match_down[j] >= 0) {
      pairs.push_back({ups[static_cast<std::size_t>(match_down[j])], downs[j]});
    }
  }
  return pairs;
}

inline std::int64_t weight_oracle(const MatrixCRef& x, const MatrixCRef& y,
                                  std::int64_t bound = kWeightOracleBound) {
  return static_cast<std::int64_t>(max_up_down_system(x, y, bound).size());
}

// Instrumentation for the termination bound: a scanning pass is one trip
// through the candidate scan that examined at least one x.
struct DemazureTrace {
  std::int64_t scanning_passes = 0;
  std::int64_t candidate_scans = 0;
  std::int64_t pairs_fused = 0;
};

inline IntMatrix demazure_product(const MatrixCRef& x, const MatrixCRef& y,
                                  DemazureTrace* trace = nullptr) {
  require(is_square(x) && is_square(y), "kelp bed matrices must be square");
  require(x.rows() == y.rows(), "kelp beds must have equal dimensions");
  require(x.size() == 0 || (x.minCoeff() >= 0 && y.minCoeff() >= 0),
          "kelp multiplicities must be nonnegative");
  const Index n = x.rows();
  IntMatrix remaining_x = x, remaining_y = y;
  IntMatrix fused = IntMatrix::Zero(n, n);
  // Weight of the selected sub-beds, maintained through cut counts:
  // below[k] counts picked x with bottom < k, atop[k] picked y with top >= k.
  std::vector<std::int64_t> below(n + 2, 0), atop(n + 2, 0);
  std::int64_t picked_weight = 0;
  Index min_top = n;  // tops of picked x are weakly decreasing
  DemazureTrace local;

  const auto weight_if_added = [&](Index b, Index c) {
    std::int64_t best = INT64_MAX;
    for (Index k = 1; k <= n + 1; ++k) {
      const std::int64_t v = below[k] + (b < k ? 1 : 0) + atop[k] + (c >= k ? 1 : 0);
      best = std::min(best, v);
    }
    return best;
  };

  for (;;) {
    bool committed = false;
    bool pass_counted = false;
    for (Index a = min_top; a >= 1 && !committed; --a) {
      for (Index b = n; b >= 1 && !committed; --b) {
        if (remaining_x(a - 1, b - 1) == 0) continue;
        if (!pass_counted) {
          ++local.scanning_passes;
          pass_counted = true;
        }
        ++local.candidate_scans;
        for (Index d = 1; d <= n && !committed; ++d) {
          for (Index c = 1; c <= n; ++c) {
            if (remaining_y(c - 1, d - 1) == 0) continue;
            const std::int64_t w = weight_if_added(b, c);
            if (w > picked_weight) {
              remaining_x(a - 1, b - 1) -= 1;
              remaining_y(c - 1, d - 1) -= 1;
              for (Index k = b + 1; k <= n + 1; ++k) ++below[k];
              for (Index k = 1; k <= c; ++k) ++atop[k];
              picked_weight = w;
              min_top = a;
              fused(a - 1, d - 1) += 1;
              ++local.pairs_fused;
              committed = true;
              break;
            }
          }
        }
      }
    }
    if (!committed) break;
  }
  if (trace) *trace = local;
  return fused;
}

// Same product through the Monge embedding; the independent route used to
// cross-check the selection rule above.
inline IntMatrix demazure_product_via_monge(const MatrixCRef& x, const MatrixCRef& y) {
  return phi_inverse(distance_product(phi(x), phi(y)));
}

// Permutations in one-line notation, 1-based values.
struct Permutation {
  std::vector<Index> images;

  Index size() const { return static_cast<Index>(images.size()); }
  Index operator()(Index i) const { return images[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.images.size(), 0);
  for (Index v : p.images) {
    if (v < 1 || v > p.size() || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
  return true;
}

inline Permutation identity_permutation(Index n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), Index{1});
  return p;
}

inline std::int64_t inversion_count(const Permutation& p) {
  std::int64_t inv = 0;
  for (Index i = 1; i <= p.size(); ++i) {
    for (Index j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) ++inv;
    }
  }
  return inv;
}

inline IntMatrix permutation_to_matrix(const Permutation& p) {
  require(is_permutation(p), "not a permutation");
  IntMatrix m = IntMatrix::Zero(p.size(), p.size());
  for (Index i = 1; i <= p.size(); ++i) m(i - 1, p(i) - 1) = 1;
  return m;
}

// A reduced word for p: p equals the left-to-right product of the adjacent
// transpositions it lists.  Built by unsorting: repeatedly remove a descent
// (leftmost or rightmost), which yields the word in reverse.
inline std::vector<Index> reduced_word(const Permutation& p, bool rightmost_descents = false) {
  require(is_permutation(p), "not a permutation");
  std::vector<Index> v = p.images;
  std::vector<Index> word;
  for (;;) {
    Index descent = 0;
    for (Index i = 1; i + 1 <= static_cast<Index>(v.size()); ++i) {
      if (v[static_cast<std::size_t>(i - 1)] > v[static_cast<std::size_t>(i)]) {
        descent = i;
        if (!rightmost_descents) break;
      }
    }
    if (descent == 0) break;
    std::swap(v[static_cast<std::size_t>(descent - 1)], v[static_cast<std::size_t>(descent)]);
    word.push_back(descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// 0-Hecke product: fold u's reduced word over v, multiplying only when the
// length goes up.  Composition is oriented the way permutation matrices
// multiply row to column (left factor acts first), so the result matches
// demazure_product on permutation beds.
inline Permutation hecke_product(const Permutation& u, const Permutation& v) {
  require(u.size() == v.size(), "permutations must have equal rank");
  require(is_permutation(u) && is_permutation(v), "not a permutation");
  Permutation w = v;
  for (Index i : reduced_word(u)) {
    auto& a = w.images[static_cast<std::size_t>(i - 1)];
    auto& b = w.images[static_cast<std::size_t>(i)];
    if (a < b) std::swap(a, b);
  }
  return w;
}

}  // namespace kelp
