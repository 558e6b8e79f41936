#pragma once

// Shared carriers for the whole library.  Everything runs on dense integer
// matrices; Eigen provides storage and expression plumbing, the domain logic
// lives in free functions in the sibling headers.

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kelp {

using Index = Eigen::Index;

// Row-major: matches the text format (row by row) and makes .data() directly
// usable for lexicographic comparisons.
using IntMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IndexMatrix =
    Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Read-only parameter type: binds blocks of row-major storage without a copy
// and evaluates other expressions into a temporary.
using MatrixCRef = Eigen::Ref<const IntMatrix>;

// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force oracle or an enumeration asked to exceed its configured cap.
class CapacityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// One kelp: an edge from top vertex `top` down to bottom vertex `bottom`,
// both 1-based labels in [1, n].  Biword columns have exactly this shape, so
// the type does double duty as a biword column.
struct Kelp {
  Index top = 0;
  Index bottom = 0;

  friend bool operator==(const Kelp&, const Kelp&) = default;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::domain_error(message);
}

template <typename Derived>
bool is_square(const Eigen::EigenBase<Derived>& a) {
  return a.rows() == a.cols();
}

inline bool matrix_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.size() == 0 || a == b;
}

// Dimension first, then row-major lexicographic on entries.
inline bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index i = 0; i < a.size(); ++i) {
    if (a.data()[i] != b.data()[i]) return a.data()[i] < b.data()[i];
  }
  return false;
}

}  // namespace kelp
