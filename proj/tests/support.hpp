#pragma once

// Frozen fixtures and independent oracles for the test binaries.
//
// The fixtures are worked examples checked by hand; the oracles recompute
// library results by deliberately different routes (Pascal's triangle for
// binomials, all-pairs Monge checks, subword brute force for the 0-Hecke
// product, a list-based selection loop for the star product) so that a bug
// in the library and a bug in the test would have to coincide to go green.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kelpbed/biword.hpp"
#include "kelpbed/demazure.hpp"
#include "kelpbed/monge.hpp"
#include "kelpbed/natural.hpp"
#include "kelpbed/rng.hpp"
#include "kelpbed/series.hpp"
#include "kelpbed/types.hpp"

namespace kelp::testing {

// ---- worked example: two 4x4 kelp beds, their star product, and the
// ---- simple Monge images of all three

inline IntMatrix x4() {
  return IntMatrix{{0, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 3, 0}, {0, 1, 0, 0}};
}

inline IntMatrix y4() {
  return IntMatrix{{0, 0, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}};
}

inline IntMatrix z4() {  // x4 star y4
  return IntMatrix{{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}};
}

inline IntMatrix phi_x4() {
  return IntMatrix{{0, 1, 2, 6, 6},
                   {0, 1, 2, 6, 6},
                   {0, 0, 1, 4, 4},
                   {0, 0, 1, 1, 1},
                   {0, 0, 0, 0, 0}};
}

inline IntMatrix phi_y4() {
  return IntMatrix{{0, 1, 1, 2, 4},
                   {0, 1, 1, 1, 2},
                   {0, 1, 1, 1, 1},
                   {0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0}};
}

inline IntMatrix phi_z4() {
  return IntMatrix{{0, 1, 1, 2, 3},
                   {0, 1, 1, 2, 3},
                   {0, 1, 1, 1, 2},
                   {0, 1, 1, 1, 1},
                   {0, 0, 0, 0, 0}};
}

// Biword forms of the same beds.
inline Biword x4_biword() {
  return Biword{{{2, 1}, {2, 3}, {3, 3}, {3, 3}, {3, 3}, {4, 2}}};
}

inline Biword y4_biword() { return Biword{{{1, 3}, {1, 4}, {2, 4}, {3, 1}}}; }

inline Biword z4_biword() { return Biword{{{2, 3}, {3, 4}, {4, 1}}}; }

// ---- density / distribution toys

inline IntMatrix density_toy_in() {
  return IntMatrix{{8, 5, 6}, {7, 3, 1}, {13, 5, 1}};
}

inline IntMatrix density_toy_out() {
  return IntMatrix{{0, 1, 3}, {0, 4, 2}, {0, 0, 0}};
}

inline IntMatrix distribution_toy_in() {
  return IntMatrix{{3, 0, 2}, {1, 4, 0}, {2, 3, 1}};
}

inline IntMatrix distribution_toy_out() {
  return IntMatrix{{6, 13, 16}, {3, 10, 11}, {2, 5, 6}};
}

// ---- weight-77 density class and its partition encodings

inline IntMatrix k77_block() {
  return IntMatrix{{2, 0, 0, 1}, {0, 1, 1, 2}, {1, 1, 3, 1}, {0, 0, 0, 3}};
}

inline IntMatrix k77_distribution() {
  return IntMatrix{{3, 5, 9, 16}, {1, 3, 7, 13}, {1, 2, 5, 9}, {0, 0, 0, 3}};
}

inline std::string k77_p_text() {
  return "12[3], 9[2], 6[2], 6[3]^3, 4[1]^2, 4[2], 4[3]^3, 3[2], 2[2]^2, 1[1]";
}

inline std::string k77_r_text() {
  return "4(1)^3, 3(1)^6, 3(2)^5, 3(3)^2, 3(4), 2(1)^4, 2(2)^2, 2(3), "
         "1(1)^3, 1(2)^2, 1(3)^2, 1(4)^2";
}

inline std::string k20_r_text() {
  return "6(1), 3(1), 2(1)^2, 2(2), 1(1)^3, 1(2), 1(3)";
}

inline std::string k20_signature() {
  return "M6 ⊕ M3 ⊕ Δ(M2 ⊕ M2) ⊕ M2 ⊕ Δ(M1 ⊕ M1 ⊕ M1) ⊕ M1 ⊕ M1";
}

// ---- plane partition with all southern faces weakly decreasing

inline std::vector<std::vector<std::int64_t>> pp_rows() {
  return {{8, 5, 2, 1}, {5, 3, 1}, {3, 2}, {1, 1}};
}

inline std::vector<std::vector<std::int64_t>> pp_faces() {
  return {{3, 2, 1, 1}, {2, 1, 1}, {2, 1}, {1, 1}};
}

inline IntMatrix pp_psi_block() {
  return IntMatrix{{1, 2, 5, 8}, {0, 1, 3, 5}, {0, 0, 2, 3}, {0, 0, 1, 1}};
}

// ---- series prefixes (L11 norm, stabilized dimension)

inline std::vector<std::int64_t> l11_infinity_prefix() {
  return {1, 1, 3, 5, 11, 17, 34, 52, 94, 145, 244, 370, 603};
}

inline std::vector<std::int64_t> l11_infinity_partial_sums() {
  return {1, 2, 5, 10, 21, 38, 72, 124, 218};
}

// ---- oracles

// Pascal's triangle; shares only operator+= with the series code.
inline Natural binomial(Index n, Index k) {
  if (k < 0 || k > n) return Natural();
  std::vector<Natural> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (Index i = 1; i <= n; ++i) {
    for (Index j = i; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

// The all-submatrix form of the Monge property, not just contiguous blocks.
inline bool is_monge_all_pairs(const IntMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index bi = i + 1; bi < a.rows(); ++bi) {
      for (Index j = 0; j < a.cols(); ++j) {
        for (Index bj = j + 1; bj < a.cols(); ++bj) {
          if (a(i, j) + a(bi, bj) > a(i, bj) + a(bi, j)) return false;
        }
      }
    }
  }
  return true;
}

// Independent phi: a weighted sum of upper-right all-ones blocks, one block
// of size i x j per kelp (i, -j) counted from the right edge.
inline IntMatrix phi_ones_blocks(const IntMatrix& x) {
  const Index n = x.rows();
  IntMatrix a = IntMatrix::Zero(n + 1, n + 1);
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      const std::int64_t m = x(i - 1, n - j);
      if (m != 0) a.block(0, n + 1 - j, i, j).array() += m;
    }
  }
  return a;
}

// Demazure product of u then v by brute force: over all subwords of a
// reduced word of u followed by one of v, the plain products have a unique
// longest element, and that element is the product.  Checks uniqueness.
inline Permutation hecke_subword_oracle(const Permutation& u, const Permutation& v) {
  // The concatenation order mirrors hecke_product's orientation: the left
  // factor acts first, as in the row-to-column matrix product.
  std::vector<Index> word = reduced_word(v);
  const std::vector<Index> tail = reduced_word(u);
  word.insert(word.end(), tail.begin(), tail.end());
  require(word.size() <= 20, "subword oracle word too long");
  Permutation best = identity_permutation(u.size());
  std::int64_t best_len = -1;
  bool best_tied = false;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    Permutation w = identity_permutation(u.size());
    for (std::size_t t = 0; t < word.size(); ++t) {
      if (mask & (1u << t)) {
        std::swap(w.images[static_cast<std::size_t>(word[t] - 1)],
                  w.images[static_cast<std::size_t>(word[t])]);
      }
    }
    const std::int64_t len = inversion_count(w);
    if (len > best_len) {
      best = w;
      best_len = len;
      best_tied = false;
    } else if (len == best_len && !(w == best)) {
      best_tied = true;
    }
  }
  // Ties below the maximum are expected; the maximum itself must be unique.
  require(!best_tied, "subword products have two distinct longest elements");
  return best;
}

// List-based reimplementation of the selection loop, parameterized by the
// order in which identical kelp copies are listed.  Used to check that the
// product is copy-order independent and to cross-check the matrix-based
// implementation.  The weight is recomputed from scratch on every probe.
inline IntMatrix star_selection_reference(std::vector<Kelp> xs, std::vector<Kelp> ys,
                                          Index n) {
  const auto cut_weight = [n](const std::vector<Kelp>& up, const std::vector<Kelp>& down) {
    std::int64_t best = INT64_MAX;
    for (Index k = 1; k <= n + 1; ++k) {
      std::int64_t v = 0;
      for (const Kelp& x : up) v += x.bottom < k ? 1 : 0;
      for (const Kelp& y : down) v += y.top >= k ? 1 : 0;
      best = std::min(best, v);
    }
    return best;
  };

  std::vector<char> x_used(xs.size(), 0), y_used(ys.size(), 0);
  std::vector<Kelp> picked_x, picked_y;
  std::vector<std::pair<Kelp, Kelp>> fused_pairs;
  Index min_top = n;
  for (;;) {
    // Candidates: unused x weakly left (by top) of everything picked,
    // scanned rightmost first.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!x_used[i] && xs[i].top <= min_top) candidates.push_back(i);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) {
                       if (xs[a].top != xs[b].top) return xs[a].top > xs[b].top;
                       return xs[a].bottom > xs[b].bottom;
                     });
    std::vector<std::size_t> y_order;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!y_used[j]) y_order.push_back(j);
    }
    std::stable_sort(y_order.begin(), y_order.end(), [&](std::size_t a, std::size_t b) {
      if (ys[a].bottom != ys[b].bottom) return ys[a].bottom < ys[b].bottom;
      return ys[a].top < ys[b].top;
    });

    const std::int64_t current = cut_weight(picked_x, picked_y);
    bool committed = false;
    for (std::size_t i : candidates) {
      for (std::size_t j : y_order) {
        std::vector<Kelp> up = picked_x, down = picked_y;
        up.push_back(xs[i]);
        down.push_back(ys[j]);
        if (cut_weight(up, down) > current) {
          x_used[i] = 1;
          y_used[j] = 1;
          picked_x = std::move(up);
          picked_y = std::move(down);
          min_top = xs[i].top;
          fused_pairs.emplace_back(xs[i], ys[j]);
          committed = true;
          break;
        }
      }
      if (committed) break;
    }
    if (!committed) break;
  }

  IntMatrix fused = IntMatrix::Zero(n, n);
  for (const auto& [x, y] : fused_pairs) fused(x.top - 1, y.bottom - 1) += 1;
  return fused;
}

inline std::vector<Kelp> kelp_copies(const IntMatrix& x) {
  std::vector<Kelp> kelps;
  for (Index a = 0; a < x.rows(); ++a) {
    for (Index b = 0; b < x.cols(); ++b) {
      for (std::int64_t m = 0; m < x(a, b); ++m) kelps.push_back({a + 1, b + 1});
    }
  }
  return kelps;
}

template <typename T>
void shuffle_with(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(i))]);
  }
}

// Direct count of the graded preimages: nonnegative cell assignments with
// the given weighted total, recursed in plain row-major order (the library
// enumerates heaviest-first, so agreement is order-independent).
inline std::int64_t count_graded_brute(Index n, std::int64_t k, Norm norm) {
  std::vector<std::int64_t> weights;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      weights.push_back(norm == Norm::Max ? 1 : (r + 1) * (n - c));
    }
  }
  const auto count = [&](auto&& self, std::size_t at, std::int64_t remaining) -> std::int64_t {
    if (at == weights.size()) return remaining == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t m = 0; m * weights[at] <= remaining; ++m) {
      total += self(self, at + 1, remaining - m * weights[at]);
    }
    return total;
  };
  return count(count, 0, k);
}

// Random bed with a bounded kelp count: places `count` kelps one by one, so
// the total is exactly `count` rather than a function of n.
inline IntMatrix random_sparse_bed(SplitMix64& rng, Index n, std::int64_t max_kelps) {
  IntMatrix x = IntMatrix::Zero(n, n);
  const std::int64_t count =
      static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_kelps) + 1));
  for (std::int64_t t = 0; t < count; ++t) {
    const Index a = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    const Index b = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    x(a, b) += 1;
  }
  return x;
}

inline std::vector<Permutation> all_permutations(Index n) {
  std::vector<Index> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), Index{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{images});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace kelp::testing
