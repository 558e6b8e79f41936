#pragma once

// Minimal arbitrary-precision natural number.  The series machinery only
// ever adds coefficients (geometric-factor recurrences, partial sums,
// Pascal-triangle cross-checks), so addition, comparison, and decimal
// printing are all that is implemented.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kelp {

class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) {  // implicit on purpose: lets coefficients compare to literals
    while (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  Natural& operator+=(const Natural& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      const std::uint64_t s =
          carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(s % kBase);
      carry = s / kBase;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) {
    a += b;
    return a;
  }

  friend bool operator==(const Natural&, const Natural&) = default;

  friend bool operator<(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    }
    return false;
  }

  std::string str() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string limb = std::to_string(limbs_[i]);
      s += std::string(9 - limb.size(), '0') + limb;
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.str();
  }

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;
  std::vector<std::uint32_t> limbs_;  // little-endian base 1e9, no high zeros
};

}  // namespace kelp
