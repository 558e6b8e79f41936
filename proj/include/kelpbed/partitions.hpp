#pragma once

// Density classes of a fixed weight and the combinatorial families they
// biject with.
//
// A density class collects the nonzero multiplicities M(i, -j) of a kelp
// bed, where -j means the j-th column from the right edge; its weight is
// k = sum i * j * M(i, -j).  The class is stored as the minimal square
// block anchored at the top-right corner.  Three encodings hang off it:
//
//   divisor-copy partitions  parts i*j labeled [c] where the label picks
//                            which divisor-copy (i is the c-th smallest
//                            divisor of i*j) the cell came from;
//   distinguishable partitions  parts i subscripted (s) with multiplicity
//                            count(i_(s)) = sum_{l >= s} M(i, -l), weakly
//                            decreasing in s;
//   boxed plane partitions   via the horizontal reflection psi into the
//                            upper-right block of a padded matrix, Monge
//                            exactly when the southern faces are weakly
//                            decreasing.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kelpbed/monge.hpp"
#include "kelpbed/types.hpp"

namespace kelp {

struct DensityClass {
  std::int64_t weight = 0;
  IntMatrix block;  // minimal square block, anchored top-right

  friend bool operator==(const DensityClass& a, const DensityClass& b) {
    return a.weight == b.weight && matrix_equal(a.block, b.block);
  }
};

// Read the multiplicities of any nonnegative matrix relative to its own
// right edge and trim to the minimal anchored block.
inline DensityClass make_density_class(const MatrixCRef& m) {
  require(m.size() == 0 || m.minCoeff() >= 0, "multiplicities must be nonnegative");
  Index max_row = 0, max_from_right = 0;
  std::int64_t weight = 0;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      const Index j = m.cols() - c;
      max_row = std::max(max_row, r + 1);
      max_from_right = std::max(max_from_right, j);
      weight += (r + 1) * j * m(r, c);
    }
  }
  const Index s = std::max(max_row, max_from_right);
  DensityClass d;
  d.weight = weight;
  d.block = IntMatrix::Zero(s, s);
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) d.block(r, s - (m.cols() - c)) = m(r, c);
    }
  }
  return d;
}

// Canonical matrix of the class under the distribution map: the fully
// trimmed running-total matrix.  Padding it lower-left yields a simple
// Monge matrix of L11 norm exactly `weight`.
inline IntMatrix class_distribution(const DensityClass& d) {
  return distribution(d.block);
}

inline bool density_class_less(const DensityClass& a, const DensityClass& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return matrix_less(a.block, b.block);
}

inline std::int64_t divisor_count(std::int64_t a) {
  require(a >= 1, "divisor count needs a positive integer");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= a; ++d) {
    if (a % d == 0) ++count;
  }
  return count;
}

// d_i(a): divisors of a that are at most i.
inline std::int64_t divisor_count_upto(std::int64_t a, std::int64_t i) {
  require(a >= 1, "divisor count needs a positive integer");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= std::min(a, i); ++d) {
    if (a % d == 0) ++count;
  }
  return count;
}

inline std::int64_t kth_smallest_divisor(std::int64_t a, std::int64_t c) {
  require(a >= 1, "divisor count needs a positive integer");
  std::int64_t left = c;
  for (std::int64_t d = 1; d <= a; ++d) {
    if (a % d == 0 && --left == 0) return d;
  }
  throw std::domain_error("label " + std::to_string(c) + " exceeds the divisor count of " +
                          std::to_string(a));
}

// One decorated part a with label/subscript and multiplicity; both partition
// flavors share the shape and the canonical order (part descending, then
// label ascending).
struct DecoratedPart {
  std::int64_t part = 0;
  std::int64_t label = 0;
  std::int64_t mult = 0;

  friend bool operator==(const DecoratedPart&, const DecoratedPart&) = default;
};

struct DivisorCopyPartition {
  std::vector<DecoratedPart> parts;

  friend bool operator==(const DivisorCopyPartition&, const DivisorCopyPartition&) = default;
};

struct DistinguishablePartition {
  std::vector<DecoratedPart> parts;

  friend bool operator==(const DistinguishablePartition&, const DistinguishablePartition&) = default;
};

namespace detail {

inline std::vector<DecoratedPart> canonical_parts(std::vector<DecoratedPart> parts) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> merged;
  for (const DecoratedPart& p : parts) {
    require(p.part >= 1 && p.label >= 1 && p.mult >= 0, "malformed decorated part");
    merged[{p.part, p.label}] += p.mult;
  }
  std::vector<DecoratedPart> out;
  for (const auto& [key, mult] : merged) {
    if (mult > 0) out.push_back({key.first, key.second, mult});
  }
  std::sort(out.begin(), out.end(), [](const DecoratedPart& a, const DecoratedPart& b) {
    return a.part != b.part ? a.part > b.part : a.label < b.label;
  });
  return out;
}

inline std::int64_t parts_weight(const std::vector<DecoratedPart>& parts) {
  std::int64_t w = 0;
  for (const DecoratedPart& p : parts) w += p.part * p.mult;
  return w;
}

}  // namespace detail

// Cell (i, -j) with multiplicity m becomes m copies of the part i*j labeled
// by which divisor-copy produced it: i is the label-th smallest divisor.
inline DivisorCopyPartition density_to_p(const DensityClass& d) {
  std::vector<DecoratedPart> parts;
  const Index s = d.block.rows();
  for (Index r = 0; r < s; ++r) {
    for (Index c = 0; c < s; ++c) {
      if (d.block(r, c) == 0) continue;
      const std::int64_t i = r + 1;
      const std::int64_t j = s - c;
      parts.push_back({i * j, divisor_count_upto(i * j, i), d.block(r, c)});
    }
  }
  return DivisorCopyPartition{detail::canonical_parts(parts)};
}

inline DensityClass p_to_density(const DivisorCopyPartition& p) {
  std::int64_t frame = 1;
  for (const DecoratedPart& q : p.parts) frame = std::max(frame, q.part);
  IntMatrix m = IntMatrix::Zero(frame, frame);
  for (const DecoratedPart& q : p.parts) {
    require(q.part >= 1 && q.mult >= 1, "malformed decorated part");
    require(q.label >= 1 && q.label <= divisor_count(q.part),
            "label " + std::to_string(q.label) + " exceeds the divisor count of " +
                std::to_string(q.part));
    const std::int64_t i = kth_smallest_divisor(q.part, q.label);
    const std::int64_t j = q.part / i;
    m(i - 1, frame - j) += q.mult;
  }
  return make_density_class(m);
}

// count(i_(s)) = number of cells in row i at distance >= s from the right.
inline DistinguishablePartition density_to_r(const DensityClass& d) {
  std::vector<DecoratedPart> parts;
  const Index s = d.block.rows();
  for (Index r = 0; r < s; ++r) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(s) + 2, 0);
    for (Index j = s; j >= 1; --j) {
      counts[static_cast<std::size_t>(j)] =
          counts[static_cast<std::size_t>(j) + 1] + d.block(r, s - j);
    }
    for (Index j = 1; j <= s; ++j) {
      if (counts[static_cast<std::size_t>(j)] > 0) {
        parts.push_back({r + 1, j, counts[static_cast<std::size_t>(j)]});
      }
    }
  }
  return DistinguishablePartition{detail::canonical_parts(parts)};
}

inline DensityClass r_to_density(const DistinguishablePartition& rho) {
  std::map<std::int64_t, std::map<std::int64_t, std::int64_t>> counts;  // part -> subscript -> count
  std::int64_t frame = 1;
  for (const DecoratedPart& q : rho.parts) {
    require(q.part >= 1 && q.label >= 1 && q.mult >= 1, "malformed decorated part");
    counts[q.part][q.label] += q.mult;
    frame = std::max({frame, q.part, q.label});
  }
  IntMatrix m = IntMatrix::Zero(frame, frame);
  for (const auto& [part, by_subscript] : counts) {
    std::int64_t max_s = 0;
    for (const auto& [sub, cnt] : by_subscript) max_s = std::max(max_s, sub);
    std::int64_t next = 0;  // count(part_(s+1))
    for (std::int64_t sub = max_s; sub >= 1; --sub) {
      const auto it = by_subscript.find(sub);
      const std::int64_t cnt = it == by_subscript.end() ? 0 : it->second;
      require(cnt >= next, "subscript counts must be weakly decreasing (part " +
                               std::to_string(part) + ", subscript " + std::to_string(sub) +
                               ")");
      m(part - 1, frame - sub) = cnt - next;
      next = cnt;
    }
  }
  return make_density_class(m);
}

// ---- canonical text form: a[c]^m for divisor-copy, a(s)^m for
// ---- distinguishable parts, comma or whitespace separated

namespace detail {

inline std::string render_parts(const std::vector<DecoratedPart>& parts, char open,
                                char close) {
  std::string out;
  for (const DecoratedPart& p : parts) {
    if (!out.empty()) out += ", ";
    out += std::to_string(p.part) + open + std::to_string(p.label) + close;
    if (p.mult > 1) out += "^" + std::to_string(p.mult);
  }
  return out;
}

inline std::int64_t parse_int(const std::string& text, std::size_t& at) {
  if (at >= text.size() || !std::isdigit(static_cast<unsigned char>(text[at]))) {
    throw ParseError("expected a number at position " + std::to_string(at) + " in '" +
                     text + "'");
  }
  std::int64_t v = 0;
  while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
    v = v * 10 + (text[at] - '0');
    if (v > (std::int64_t{1} << 31)) throw ParseError("number exceeds 2^31 in '" + text + "'");
    ++at;
  }
  return v;
}

struct ParsedParts {
  bool divisor_style = false;  // true for a[c], false for a(s)
  std::vector<DecoratedPart> parts;
};

inline ParsedParts parse_decorated(const std::string& text) {
  ParsedParts out;
  bool style_known = false;
  std::size_t at = 0;
  const auto skip = [&] {
    while (at < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[at])) || text[at] == ',')) {
      ++at;
    }
  };
  skip();
  while (at < text.size()) {
    DecoratedPart p;
    p.part = parse_int(text, at);
    if (at >= text.size() || (text[at] != '[' && text[at] != '(')) {
      throw ParseError("expected '[' or '(' after part " + std::to_string(p.part));
    }
    const bool divisor = text[at] == '[';
    if (style_known && divisor != out.divisor_style) {
      throw ParseError("mixed decoration styles in '" + text + "'");
    }
    out.divisor_style = divisor;
    style_known = true;
    ++at;
    p.label = parse_int(text, at);
    const char close = divisor ? ']' : ')';
    if (at >= text.size() || text[at] != close) {
      throw ParseError(std::string("expected '") + close + "' in '" + text + "'");
    }
    ++at;
    p.mult = 1;
    if (at < text.size() && text[at] == '^') {
      ++at;
      p.mult = parse_int(text, at);
    }
    if (p.part < 1 || p.label < 1 || p.mult < 1) {
      throw ParseError("parts, labels and multiplicities must be positive");
    }
    out.parts.push_back(p);
    skip();
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const DivisorCopyPartition& p) {
  return detail::render_parts(p.parts, '[', ']');
}

inline std::string to_string(const DistinguishablePartition& r) {
  return detail::render_parts(r.parts, '(', ')');
}

inline DivisorCopyPartition parse_divisor_copy_partition(const std::string& text) {
  detail::ParsedParts parsed = detail::parse_decorated(text);
  if (!parsed.parts.empty() && !parsed.divisor_style) {
    throw ParseError("expected a[c] style parts");
  }
  return DivisorCopyPartition{detail::canonical_parts(parsed.parts)};
}

inline DistinguishablePartition parse_distinguishable_partition(const std::string& text) {
  detail::ParsedParts parsed = detail::parse_decorated(text);
  if (!parsed.parts.empty() && parsed.divisor_style) {
    throw ParseError("expected a(s) style parts");
  }
  return DistinguishablePartition{detail::canonical_parts(parsed.parts)};
}

inline std::int64_t partition_weight(const DivisorCopyPartition& p) {
  return detail::parts_weight(p.parts);
}

inline std::int64_t partition_weight(const DistinguishablePartition& r) {
  return detail::parts_weight(r.parts);
}

// Matrix-algebra reading of a distinguishable partition: each subscript
// class of dimension a contributes a full matrix algebra M_a when its parts
// are free, and a diagonal copy when its multiplicity forces them equal.
inline std::string star_algebra_signature(const DistinguishablePartition& rho) {
  std::string out;
  for (const DecoratedPart& p : rho.parts) {
    if (!out.empty()) out += " ⊕ ";
    if (p.mult == 1) {
      out += "M" + std::to_string(p.part);
    } else {
      out += "Δ(";
      for (std::int64_t i = 0; i < p.mult; ++i) {
        if (i > 0) out += " ⊕ ";
        out += "M" + std::to_string(p.part);
      }
      out += ")";
    }
  }
  return out;
}

inline constexpr std::int64_t kDensityEnumerationBound = 12;

// All density classes of the given weight, canonically ordered.  The weight
// doubles as the cell frame, so the enumeration walks cells (i, -j) with
// i * j <= k, heaviest first.
inline std::vector<DensityClass> enumerate_density(std::int64_t k,
                                                   std::int64_t bound = kDensityEnumerationBound) {
  require(k >= 0, "weight must be nonnegative");
  if (k > bound) {
    throw CapacityError("density enumeration bound exceeded (k " + std::to_string(k) +
                        ", bound " + std::to_string(bound) + ")");
  }
  struct Cell {
    std::int64_t weight;
    Index row;
    Index col;
  };
  std::vector<Cell> cells;
  for (std::int64_t i = 1; i <= k; ++i) {
    for (std::int64_t j = 1; i * j <= k; ++j) {
      cells.push_back({i * j, i - 1, k - j});
    }
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& a, const Cell& b) { return a.weight > b.weight; });
  std::vector<DensityClass> out;
  IntMatrix frame = IntMatrix::Zero(std::max<std::int64_t>(k, 1), std::max<std::int64_t>(k, 1));
  const auto recurse = [&](auto&& self, std::size_t at, std::int64_t remaining) -> void {
    if (at == cells.size()) {
      if (remaining == 0) out.push_back(make_density_class(frame));
      return;
    }
    const Cell& cell = cells[at];
    for (std::int64_t m = remaining / cell.weight; m >= 0; --m) {
      frame(cell.row, cell.col) = m;
      self(self, at + 1, remaining - m * cell.weight);
    }
    frame(cell.row, cell.col) = 0;
  };
  recurse(recurse, 0, k);
  std::sort(out.begin(), out.end(), density_class_less);
  return out;
}

// ---- plane partitions

struct PlanePartition {
  std::vector<std::vector<std::int64_t>> rows;  // positive entries, ragged

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

inline bool is_plane_partition(const PlanePartition& pp) {
  for (std::size_t i = 0; i < pp.rows.size(); ++i) {
    const auto& row = pp.rows[i];
    if (row.empty()) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) return false;
      if (j + 1 < row.size() && row[j] < row[j + 1]) return false;
    }
    if (i > 0) {
      const auto& above = pp.rows[i - 1];
      if (row.size() > above.size()) return false;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (above[j] < row[j]) return false;
      }
    }
  }
  return true;
}

inline std::int64_t plane_partition_size(const PlanePartition& pp) {
  std::int64_t total = 0;
  for (const auto& row : pp.rows) {
    for (std::int64_t e : row) total += e;
  }
  return total;
}

// Reflect the diagram horizontally into the upper-right block of an
// (n+1) x (n+1) matrix with zero lower-left boundary.  The result is Monge
// exactly when the partition's southern faces are weakly decreasing.
inline IntMatrix psi(const PlanePartition& pp, Index n, std::int64_t k) {
  require(is_plane_partition(pp), "not a plane partition");
  require(static_cast<Index>(pp.rows.size()) <= n, "plane partition has too many rows");
  IntMatrix block = IntMatrix::Zero(n, n);
  for (std::size_t i = 0; i < pp.rows.size(); ++i) {
    const auto& row = pp.rows[i];
    require(static_cast<Index>(row.size()) <= n, "plane partition row too long");
    for (std::size_t j = 0; j < row.size(); ++j) {
      require(row[j] <= k, "plane partition entry exceeds the box height");
      block(static_cast<Index>(i), n - 1 - static_cast<Index>(j)) = row[j];
    }
  }
  return pad_lower_left(block);
}

// Inverse of psi on simple Monge matrices: un-reflect the upper-right block
// and trim trailing zeros.
inline PlanePartition psi_inverse(const MatrixCRef& a) {
  require(is_simple_monge(a), "matrix is not simple Monge");
  require(a.rows() >= 2, "matrix dimension must be at least 2");
  const Index n = a.rows() - 1;
  PlanePartition pp;
  for (Index i = 0; i < n; ++i) {
    std::vector<std::int64_t> row;
    for (Index j = 0; j < n; ++j) {
      const std::int64_t e = a(i, a.cols() - 1 - j);
      if (e == 0) break;
      row.push_back(e);
    }
    if (row.empty()) break;
    pp.rows.push_back(std::move(row));
  }
  return pp;
}

// Row-wise differences with the row below, over each row's own length.
inline std::vector<std::vector<std::int64_t>> southern_faces(const PlanePartition& pp) {
  require(is_plane_partition(pp), "not a plane partition");
  std::vector<std::vector<std::int64_t>> faces;
  for (std::size_t i = 0; i < pp.rows.size(); ++i) {
    const auto& row = pp.rows[i];
    std::vector<std::int64_t> face(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::int64_t under = 0;
      if (i + 1 < pp.rows.size() && j < pp.rows[i + 1].size()) under = pp.rows[i + 1][j];
      face[j] = row[j] - under;
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

inline bool has_weakly_decreasing_faces(const PlanePartition& pp) {
  for (const auto& face : southern_faces(pp)) {
    for (std::size_t j = 0; j + 1 < face.size(); ++j) {
      if (face[j] < face[j + 1]) return false;
    }
  }
  return true;
}

// Every plane partition fitting in an a x b x c box (at most a rows, row
// length at most b, entries at most c), the empty one included.
inline std::vector<PlanePartition> enumerate_boxed_plane_partitions(Index a, Index b,
                                                                    std::int64_t c) {
  require(a >= 0 && b >= 0 && c >= 0, "box sides must be nonnegative");
  std::vector<PlanePartition> out;
  std::vector<std::vector<std::int64_t>> grid(
      static_cast<std::size_t>(a), std::vector<std::int64_t>(static_cast<std::size_t>(b), 0));
  const auto emit = [&] {
    PlanePartition pp;
    for (const auto& row : grid) {
      std::vector<std::int64_t> trimmed;
      for (std::int64_t e : row) {
        if (e == 0) break;
        trimmed.push_back(e);
      }
      if (trimmed.empty()) break;
      pp.rows.push_back(std::move(trimmed));
    }
    out.push_back(std::move(pp));
  };
  const auto fill = [&](auto&& self, std::size_t r, std::size_t col) -> void {
    if (r == grid.size()) {
      emit();
      return;
    }
    if (col == grid[r].size()) {
      self(self, r + 1, 0);
      return;
    }
    std::int64_t limit = col > 0 ? grid[r][col - 1] : c;
    if (r > 0) limit = std::min(limit, grid[r - 1][col]);
    for (std::int64_t v = 0; v <= limit; ++v) {
      grid[r][col] = v;
      self(self, r, col + 1);
    }
    grid[r][col] = 0;
  };
  if (a == 0 || b == 0) {
    out.push_back(PlanePartition{});
    return out;
  }
  fill(fill, 0, 0);
  return out;
}

}  // namespace kelp
