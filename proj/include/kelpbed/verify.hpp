#pragma once

// Randomized self-checks behind the `verify` subcommand.  Every check
// computes both sides of an identity by independent routes and compares,
// so a corrupted implementation of either route makes the run fail.

#include <cstdint>
#include <ostream>

#include "kelpbed/demazure.hpp"
#include "kelpbed/monge.hpp"
#include "kelpbed/rng.hpp"
#include "kelpbed/types.hpp"

namespace kelp {

struct VerifyOptions {
  std::int64_t trials = 100;
  Index n = 4;
  std::int64_t max_entry = 3;
  std::uint64_t seed = 1;
  std::int64_t oracle_bound = kWeightOracleBound;
};

struct CheckCount {
  std::int64_t passed = 0;
  std::int64_t run = 0;

  void record(bool ok) {
    ++run;
    if (ok) ++passed;
  }
  bool clean() const { return passed == run; }
};

struct VerifyReport {
  CheckCount isomorphism;    // phi(X * Y) == phi(X) (.) phi(Y)
  CheckCount associativity;  // (X * Y) * Z == X * (Y * Z)
  CheckCount closure;        // phi(X) (.) phi(Y) is simple Monge
  CheckCount weight_oracle_agreement;  // cut formula == matching, under the cap

  bool all_passed() const {
    return isomorphism.clean() && associativity.clean() && closure.clean() &&
           weight_oracle_agreement.clean();
  }
};

namespace detail {

// Bed with at most `kelps` kelps, so the matching oracle stays tractable no
// matter how dense the main trial matrices are.
inline IntMatrix random_bounded_bed(SplitMix64& rng, Index n, std::int64_t kelps) {
  IntMatrix x = IntMatrix::Zero(n, n);
  const std::int64_t count = static_cast<std::int64_t>(rng.below(
      static_cast<std::uint64_t>(kelps) + 1));
  for (std::int64_t t = 0; t < count; ++t) {
    x(static_cast<Index>(rng.below(static_cast<std::uint64_t>(n))),
      static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)))) += 1;
  }
  return x;
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
  require(opt.trials >= 0, "trial count must be nonnegative");
  require(opt.n >= 1, "dimension must be at least 1");
  require(opt.max_entry >= 0, "maximum entry must be nonnegative");
  SplitMix64 rng(opt.seed);
  VerifyReport report;
  for (std::int64_t t = 0; t < opt.trials; ++t) {
    const IntMatrix x = random_biword_matrix(rng, opt.n, opt.max_entry);
    const IntMatrix y = random_biword_matrix(rng, opt.n, opt.max_entry);
    const IntMatrix z = random_biword_matrix(rng, opt.n, opt.max_entry);
    const IntMatrix product = distance_product(phi(x), phi(y));
    report.isomorphism.record(matrix_equal(phi(demazure_product(x, y)), product));
    report.associativity.record(
        matrix_equal(demazure_product(demazure_product(x, y), z),
                     demazure_product(x, demazure_product(y, z))));
    report.closure.record(is_simple_monge(product));
    const IntMatrix sx = detail::random_bounded_bed(rng, opt.n, opt.oracle_bound);
    const IntMatrix sy = detail::random_bounded_bed(rng, opt.n, opt.oracle_bound);
    report.weight_oracle_agreement.record(weight(sx, sy) ==
                                          weight_oracle(sx, sy, opt.oracle_bound));
  }
  return report;
}

inline void write_report(std::ostream& out, const VerifyReport& r) {
  const auto line = [&](const char* name, const CheckCount& c) {
    out << name << ": " << c.passed << "/" << c.run << "\n";
  };
  line("isomorphism", r.isomorphism);
  line("associativity", r.associativity);
  line("closure", r.closure);
  line("weight-oracle", r.weight_oracle_agreement);
  out << (r.all_passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace kelp
