#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kelpbed/biword.hpp"
#include "kelpbed/rng.hpp"
#include "support.hpp"

using namespace kelp;
namespace fix = kelp::testing;

TEST_CASE("biword_to_matrix on the worked example") {
  CHECK(matrix_equal(biword_to_matrix(fix::x4_biword(), 4), fix::x4()));
  CHECK(matrix_equal(biword_to_matrix(fix::y4_biword(), 4), fix::y4()));
}

TEST_CASE("biword_to_matrix basics") {
  CHECK(matrix_equal(biword_to_matrix(Biword{}, 3), IntMatrix::Zero(3, 3)));
  const Biword repeated{{{1, 2}, {1, 2}}};
  CHECK(matrix_equal(biword_to_matrix(repeated, 2), IntMatrix{{0, 2}, {0, 0}}));
  CHECK_THROWS_AS(biword_to_matrix(Biword{{{3, 1}}}, 2), std::domain_error);
  CHECK_THROWS_AS(biword_to_matrix(Biword{{{1, 0}}}, 2), std::domain_error);
  CHECK_THROWS_AS(biword_to_matrix(Biword{}, 0), std::domain_error);
}

TEST_CASE("matrix_to_biword is the sorted inverse") {
  CHECK(matrix_to_biword(fix::x4()) == fix::x4_biword());
  CHECK(matrix_to_biword(IntMatrix::Zero(3, 3)) == Biword{});
  CHECK(is_lex_sorted(matrix_to_biword(fix::y4())));

  SplitMix64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Index n = 1 + static_cast<Index>(rng.below(5));
    const IntMatrix x = random_biword_matrix(rng, n, 3);
    const Biword w = matrix_to_biword(x);
    CHECK(is_lex_sorted(w));
    CHECK(w.size() == total_kelps(x));
    CHECK(matrix_equal(biword_to_matrix(w, n), x));
  }
}

TEST_CASE("round trip starting from a sorted biword") {
  SplitMix64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const Index n = 1 + static_cast<Index>(rng.below(4));
    Biword w;
    const std::uint64_t len = rng.below(8);
    for (std::uint64_t i = 0; i < len; ++i) {
      w.columns.push_back({1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n))),
                           1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)))});
    }
    std::sort(w.columns.begin(), w.columns.end(), [](const Kelp& a, const Kelp& b) {
      return a.top != b.top ? a.top < b.top : a.bottom < b.bottom;
    });
    CHECK(matrix_to_biword(biword_to_matrix(w, n)) == w);
  }
}

TEST_CASE("count_kelps on the worked example") {
  const IntMatrix x = fix::x4();
  CHECK(count_kelps(x, 2, 4, 1, 2) == 2);
  CHECK(count_kelps(x, 1, 4, 1, 4) == total_kelps(x));
  CHECK(total_kelps(x) == 6);
  CHECK(count_kelps(x, 1, 4, 3, 2) == 0);  // empty column interval
  CHECK(count_kelps(x, 5, 9, 1, 4) == 0);  // fully out of range
}

TEST_CASE("count_kelps is additive over disjoint rectangles") {
  SplitMix64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const IntMatrix x = random_biword_matrix(rng, n, 4);
    const Index split = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)));
    CHECK(count_kelps(x, 1, split, 1, n) + count_kelps(x, split + 1, n, 1, n) ==
          total_kelps(x));
    CHECK(count_kelps(x, 1, n, 1, split) + count_kelps(x, 1, n, split + 1, n) ==
          total_kelps(x));
  }
}

TEST_CASE("sub_bed keeps dimensions and agrees with count_kelps") {
  const IntMatrix x = fix::x4();
  const IntMatrix s = sub_bed(x, 2, 4, 1, 2);
  CHECK(s.rows() == 4);
  CHECK(total_kelps(s) == count_kelps(x, 2, 4, 1, 2));
  CHECK(s(1, 0) == 1);
  CHECK(s(3, 1) == 1);
  CHECK(s(1, 2) == 0);  // outside the rectangle
  CHECK(total_kelps(sub_bed(x, 1, 4, 1, 0)) == 0);
}
