#pragma once

// SplitMix64: the fixed, seedable generator behind every randomized check.
// It is a counter-based generator (the state advances by a Weyl constant
// and each output is a finalized copy of the counter), so identical seeds
// give identical streams everywhere, and split() derives an independent
// child stream.  Bounded draws reduce with plain modulo; that bias is
// irrelevant for test-case generation and keeps the mapping reproducible
// from the documented definition alone.

#include <cstdint>

#include "kelpbed/monge.hpp"
#include "kelpbed/types.hpp"

namespace kelp {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  SplitMix64 split() { return SplitMix64(next()); }
};

inline IntMatrix random_biword_matrix(SplitMix64& rng, Index n, std::int64_t max_entry) {
  IntMatrix x(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      x(i, j) = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_entry) + 1));
    }
  }
  return x;
}

inline IntMatrix random_simple_monge_matrix(SplitMix64& rng, Index m, std::int64_t max_entry) {
  return phi(random_biword_matrix(rng, m - 1, max_entry));
}

// General Monge: a simple one plus a random sum-matrix offset u_i + v_j.
inline IntMatrix random_monge_matrix(SplitMix64& rng, Index m, std::int64_t max_entry) {
  IntMatrix a = random_simple_monge_matrix(rng, m, max_entry);
  for (Index i = 0; i < m; ++i) {
    const std::int64_t u = static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(max_entry) + 1));
    a.row(i).array() += u;
  }
  for (Index j = 0; j < m; ++j) {
    const std::int64_t v = static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(max_entry) + 1));
    a.col(j).array() += v;
  }
  return a;
}

}  // namespace kelp
