#pragma once

// Text formats shared by the CLI and the tests.
//
//   matrix   first line n, then n lines of n whitespace-separated integers
//   biword   two whitespace-separated integer lines of equal length:
//            tops first, bottoms second
//
// Entries above 2^31 are rejected at parse time so every downstream
// accumulation fits comfortably in 64 bits.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kelpbed/biword.hpp"
#include "kelpbed/types.hpp"

namespace kelp {

inline constexpr std::int64_t kMaxParsedEntry = std::int64_t{1} << 31;
inline constexpr Index kMaxParsedDimension = 4096;

inline IntMatrix read_square_matrix(std::istream& in, bool allow_negative = false) {
  std::int64_t n = 0;
  if (!(in >> n)) throw ParseError("expected a matrix dimension");
  if (n < 1) throw ParseError("matrix dimension must be positive");
  if (n > kMaxParsedDimension) {
    throw ParseError("matrix dimension exceeds " + std::to_string(kMaxParsedDimension));
  }
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      std::int64_t v = 0;
      if (!(in >> v)) {
        throw ParseError("matrix entry (" + std::to_string(i + 1) + ", " +
                         std::to_string(j + 1) + ") missing or malformed");
      }
      if (v < 0 && !allow_negative) throw ParseError("matrix entries must be nonnegative");
      if (v > kMaxParsedEntry || v < -kMaxParsedEntry) {
        throw ParseError("matrix entry exceeds 2^31");
      }
      m(i, j) = v;
    }
  }
  return m;
}

inline void write_square_matrix(std::ostream& out, const MatrixCRef& m) {
  out << m.rows() << "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << " ";
      out << m(i, j);
    }
    out << "\n";
  }
}

namespace detail {

inline std::vector<std::int64_t> parse_int_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(std::string("missing ") + what + " line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream fields(line);
  std::vector<std::int64_t> values;
  std::int64_t v = 0;
  while (fields >> v) {
    if (v > kMaxParsedEntry) throw ParseError("biword letter exceeds 2^31");
    values.push_back(v);
  }
  if (!fields.eof()) throw ParseError(std::string("malformed ") + what + " line");
  return values;
}

}  // namespace detail

// Reads the two-line form.  Syntax problems are parse errors; an unsorted
// column list is a domain error, because the lines are well-formed but
// violate the biword invariant.
inline Biword read_biword(std::istream& in) {
  const std::vector<std::int64_t> tops = detail::parse_int_line(in, "top row");
  const std::vector<std::int64_t> bottoms = detail::parse_int_line(in, "bottom row");
  if (tops.size() != bottoms.size()) {
    throw ParseError("biword rows have different lengths (" + std::to_string(tops.size()) +
                     " vs " + std::to_string(bottoms.size()) + ")");
  }
  Biword w;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    if (tops[t] < 1 || bottoms[t] < 1) throw ParseError("biword letters must be positive");
    w.columns.push_back({tops[t], bottoms[t]});
  }
  require(is_lex_sorted(w), "biword is not lexicographically sorted");
  return w;
}

inline void write_biword(std::ostream& out, const Biword& w) {
  for (std::size_t t = 0; t < w.columns.size(); ++t) {
    if (t > 0) out << " ";
    out << w.columns[t].top;
  }
  out << "\n";
  for (std::size_t t = 0; t < w.columns.size(); ++t) {
    if (t > 0) out << " ";
    out << w.columns[t].bottom;
  }
  out << "\n";
}

}  // namespace kelp
