// kelpbed: kelp beds under the extended Demazure product, simple Monge
// matrices under the min-plus product, and the bridges between them.
//
// Exit codes: 0 success, 1 domain error (invariant violation, named on
// stderr), 2 parse or usage error.  `-` reads the input from stdin.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kelpbed/demazure.hpp"
#include "kelpbed/io.hpp"
#include "kelpbed/monge.hpp"
#include "kelpbed/partitions.hpp"
#include "kelpbed/series.hpp"
#include "kelpbed/verify.hpp"

namespace {

kelp::IntMatrix load_matrix(const std::string& path) {
  if (path == "-") return kelp::read_square_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw kelp::ParseError("cannot open " + path);
  return kelp::read_square_matrix(in);
}

kelp::Biword load_biword(const std::string& path) {
  if (path == "-") return kelp::read_biword(std::cin);
  std::ifstream in(path);
  if (!in) throw kelp::ParseError("cannot open " + path);
  return kelp::read_biword(in);
}

kelp::Index max_letter(const kelp::Biword& w) {
  kelp::Index n = 0;
  for (const kelp::Kelp& c : w.columns) n = std::max({n, c.top, c.bottom});
  return n;
}

void dump_bed(std::ostream& out, const std::string& name, const kelp::IntMatrix& x) {
  out << name << ":\n";
  out << "  top:    ";
  for (kelp::Index v = 1; v <= x.rows(); ++v) out << (v > 1 ? " " : "") << v;
  out << "\n  kelps:  ";
  bool any = false;
  for (kelp::Index a = 1; a <= x.rows(); ++a) {
    for (kelp::Index b = 1; b <= x.cols(); ++b) {
      const std::int64_t m = x(a - 1, b - 1);
      if (m == 0) continue;
      if (any) out << " ";
      out << "(" << a << "," << b << ")";
      if (m > 1) out << "x" << m;
      any = true;
    }
  }
  if (!any) out << "(none)";
  out << "\n  bottom: ";
  for (kelp::Index v = 1; v <= x.cols(); ++v) out << (v > 1 ? " " : "") << v;
  out << "\n";
}

std::int64_t oracle_bound_from_env() {
  const char* text = std::getenv("KELPBED_ORACLE_BOUND");
  if (text == nullptr || *text == '\0') return kelp::kWeightOracleBound;
  char* end = nullptr;
  const long long v = std::strtoll(text, &end, 10);
  if (end == text || *end != '\0' || v < 0) {
    throw kelp::ParseError("KELPBED_ORACLE_BOUND must be a nonnegative integer");
  }
  return v;
}

struct BedInputs {
  bool as_biword = false;
  kelp::Index forced_n = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kelp beds, Demazure products, and simple Monge matrices"};
  app.require_subcommand(1);

  std::string in1, in2;
  BedInputs bed_mode;
  bool out_biword = false, show_beds = false;
  CLI::App* star = app.add_subcommand("star", "Demazure product of two kelp beds");
  star->add_option("X", in1, "left kelp bed (matrix file or -)")->required();
  star->add_option("Y", in2, "right kelp bed")->required();
  star->add_flag("--biword", bed_mode.as_biword, "read inputs in the two-line biword format");
  star->add_option("--n", bed_mode.forced_n, "vertex count for biword inputs (default: largest letter)");
  star->add_flag("--as-biword", out_biword, "print the product as a biword");
  star->add_flag("--beds", show_beds, "also print ASCII kelp-bed dumps");

  CLI::App* phi_cmd = app.add_subcommand("phi", "embed a kelp bed as a simple Monge matrix");
  phi_cmd->add_option("X", in1, "kelp bed (matrix file or -)")->required();
  phi_cmd->add_flag("--biword", bed_mode.as_biword, "read the input in the two-line biword format");
  phi_cmd->add_option("--n", bed_mode.forced_n, "vertex count for biword input (default: largest letter)");

  CLI::App* phi_inv = app.add_subcommand("phi-inv", "recover the kelp bed of a simple Monge matrix");
  phi_inv->add_option("A", in1, "simple Monge matrix file or -")->required();

  bool fast = false;
  CLI::App* dprod = app.add_subcommand("dprod", "min-plus distance product");
  dprod->add_option("A", in1, "left matrix file or -")->required();
  dprod->add_option("B", in2, "right matrix file")->required();
  dprod->add_flag("--fast", fast, "divide-and-conquer product (requires simple Monge inputs)");

  CLI::App* check = app.add_subcommand("check", "validate the Monge and simple properties");
  check->add_option("A", in1, "matrix file or -")->required();

  std::string norm_name;
  std::int64_t trunc = 32, grade = 0, cap = kelp::kDefaultEnumerationCap, n_opt = 0;
  bool partial = false, csv = false, upto = false;
  CLI::App* series = app.add_subcommand("series", "growth series coefficients");
  series->add_option("--norm", norm_name, "max, l11, or l11-inf")
      ->required()
      ->check(CLI::IsMember({"max", "l11", "l11-inf"}));
  series->add_option("--n", n_opt, "dimension of the kelp beds");
  series->add_option("--trunc", trunc, "truncation order")->capture_default_str();
  series->add_flag("--partial-sums", partial, "emit partial sums (norm at most k)");
  series->add_flag("--csv", csv, "comma-separated on one line");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list simple Monge matrices by norm");
  enumerate->add_option("--n", n_opt, "dimension of the kelp beds")->required();
  enumerate->add_option("--k", grade, "norm value")->required();
  enumerate->add_option("--norm", norm_name, "max or l11")
      ->required()
      ->check(CLI::IsMember({"max", "l11"}));
  enumerate->add_flag("--upto", upto, "norm at most k instead of exactly k");
  enumerate->add_option("--cap", cap, "result cap")->capture_default_str();

  std::string inverse_text;
  CLI::App* biject = app.add_subcommand("biject", "partition encodings of a density class");
  biject->add_option("M", in1, "multiplicity matrix file or -");
  biject->add_option("--inverse", inverse_text,
                     "decorated partition (a[c]^m or a(s)^m parts) to turn back into a matrix");

  kelp::VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "randomized identity checks");
  verify->add_option("--trials", vopt.trials, "number of random trials")->capture_default_str();
  verify->add_option("--n", vopt.n, "kelp bed dimension")->capture_default_str();
  verify->add_option("--max-entry", vopt.max_entry, "largest multiplicity drawn")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "SplitMix64 seed")->capture_default_str();

  CLI::App* decompose = app.add_subcommand("decompose", "split a Monge matrix into simple + sum parts");
  decompose->add_option("A", in1, "Monge matrix file or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(star)) {
      kelp::Index n = bed_mode.forced_n;
      kelp::IntMatrix x, y;
      if (bed_mode.as_biword) {
        const kelp::Biword wx = load_biword(in1);
        const kelp::Biword wy = load_biword(in2);
        if (n == 0) n = std::max<kelp::Index>({1, max_letter(wx), max_letter(wy)});
        x = kelp::biword_to_matrix(wx, n);
        y = kelp::biword_to_matrix(wy, n);
      } else {
        x = load_matrix(in1);
        y = load_matrix(in2);
      }
      const kelp::IntMatrix z = kelp::demazure_product(x, y);
      if (show_beds) {
        dump_bed(std::cout, "X", x);
        dump_bed(std::cout, "Y", y);
        dump_bed(std::cout, "X star Y", z);
      }
      if (out_biword) {
        kelp::write_biword(std::cout, kelp::matrix_to_biword(z));
      } else {
        kelp::write_square_matrix(std::cout, z);
      }
    } else if (app.got_subcommand(phi_cmd)) {
      kelp::IntMatrix x;
      if (bed_mode.as_biword) {
        const kelp::Biword w = load_biword(in1);
        const kelp::Index n =
            bed_mode.forced_n != 0 ? bed_mode.forced_n : std::max<kelp::Index>(1, max_letter(w));
        x = kelp::biword_to_matrix(w, n);
      } else {
        x = load_matrix(in1);
      }
      kelp::write_square_matrix(std::cout, kelp::phi(x));
    } else if (app.got_subcommand(phi_inv)) {
      kelp::write_square_matrix(std::cout, kelp::phi_inverse(load_matrix(in1)));
    } else if (app.got_subcommand(dprod)) {
      const kelp::IntMatrix a = load_matrix(in1);
      const kelp::IntMatrix b = load_matrix(in2);
      kelp::write_square_matrix(std::cout, fast ? kelp::distance_product_monge(a, b)
                                                : kelp::distance_product(a, b));
    } else if (app.got_subcommand(check)) {
      const kelp::IntMatrix a = load_matrix(in1);
      const auto violation = kelp::first_monge_violation(a);
      const bool monge = !violation.has_value();
      std::cout << "monge: " << (monge ? "yes" : "no") << "\n";
      std::cout << "simple: "
                << (monge && kelp::has_zero_lower_left_boundary(a) ? "yes" : "no") << "\n";
      if (violation) {
        const kelp::Index i = violation->row, j = violation->col;
        std::cout << "first violated 2x2 block at rows " << i << "," << i + 1 << " cols "
                  << j << "," << j + 1 << ": " << a(i - 1, j - 1) << " + " << a(i, j)
                  << " > " << a(i - 1, j) << " + " << a(i, j - 1) << "\n";
        return 1;
      }
    } else if (app.got_subcommand(series)) {
      if (norm_name != "l11-inf" && n_opt < 1) {
        std::cerr << "parse error: --n is required for --norm max and --norm l11\n";
        return 2;
      }
      kelp::Series s = norm_name == "max"   ? kelp::series_max(n_opt, trunc)
                       : norm_name == "l11" ? kelp::series_l11(n_opt, trunc)
                                            : kelp::series_l11_infinity(trunc);
      if (partial) s = kelp::partial_sum_series(s);
      for (std::size_t k = 0; k < s.coeff.size(); ++k) {
        if (csv && k > 0) std::cout << ",";
        std::cout << s.coeff[k];
        if (!csv) std::cout << "\n";
      }
      if (csv) std::cout << "\n";
    } else if (app.got_subcommand(enumerate)) {
      const kelp::Norm norm = norm_name == "max" ? kelp::Norm::Max : kelp::Norm::L11;
      const std::vector<kelp::IntMatrix> all =
          upto ? kelp::enumerate_filtered(n_opt, grade, norm, cap)
               : kelp::enumerate_graded(n_opt, grade, norm, cap);
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (i > 0) std::cout << "\n";
        kelp::write_square_matrix(std::cout, all[i]);
      }
    } else if (app.got_subcommand(biject)) {
      const bool has_inverse = !inverse_text.empty();
      if (has_inverse == !in1.empty()) {
        std::cerr << "parse error: biject needs either a matrix input or --inverse\n";
        return 2;
      }
      if (has_inverse) {
        const std::size_t bracket = inverse_text.find_first_of("[(");
        if (bracket == std::string::npos) {
          throw kelp::ParseError("no decorated parts in '" + inverse_text + "'");
        }
        kelp::DensityClass d;
        if (inverse_text[bracket] == '[') {
          d = kelp::p_to_density(kelp::parse_divisor_copy_partition(inverse_text));
        } else {
          d = kelp::r_to_density(kelp::parse_distinguishable_partition(inverse_text));
        }
        if (d.block.rows() == 0) {
          kelp::write_square_matrix(std::cout, kelp::IntMatrix::Zero(1, 1));
        } else {
          kelp::write_square_matrix(std::cout, d.block);
        }
      } else {
        const kelp::DensityClass d = kelp::make_density_class(load_matrix(in1));
        std::cout << "k: " << d.weight << "\n";
        std::cout << "pi: " << kelp::to_string(kelp::density_to_p(d)) << "\n";
        std::cout << "rho: " << kelp::to_string(kelp::density_to_r(d)) << "\n";
        std::cout << "signature: " << kelp::star_algebra_signature(kelp::density_to_r(d))
                  << "\n";
      }
    } else if (app.got_subcommand(verify)) {
      vopt.oracle_bound = oracle_bound_from_env();
      const kelp::VerifyReport report = kelp::run_verification(vopt);
      kelp::write_report(std::cout, report);
      return report.all_passed() ? 0 : 1;
    } else if (app.got_subcommand(decompose)) {
      const kelp::MongeDecomposition d = kelp::monge_decomposition(load_matrix(in1));
      kelp::write_square_matrix(std::cout, d.simple_part);
      std::cout << "\n";
      kelp::write_square_matrix(std::cout, d.sum_part);
    }
  } catch (const kelp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
