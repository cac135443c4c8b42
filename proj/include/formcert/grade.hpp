#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace formcert {

// Element of the grading group Z^d x (Z/2)^e. d = e = 0 means ungraded.
struct Grade {
  std::vector<long> z;      // free part, length d
  std::vector<int> parity;  // entries 0/1, length e

  Grade() = default;
  Grade(std::vector<long> z_part, std::vector<int> parity_part)
      : z(std::move(z_part)), parity(std::move(parity_part)) {}

  static Grade zero(std::size_t d, std::size_t e) {
    return Grade(std::vector<long>(d, 0), std::vector<int>(e, 0));
  }

  bool is_zero() const;
  int total_parity() const;  // sum of parity components mod 2

  Grade operator+(const Grade& o) const;
  Grade operator-() const;
  Grade operator-(const Grade& o) const { return *this + (-o); }

  friend bool operator==(const Grade& a, const Grade& b) {
    return a.z == b.z && a.parity == b.parity;
  }
  friend bool operator<(const Grade& a, const Grade& b) {
    if (a.z != b.z) return a.z < b.z;
    return a.parity < b.parity;
  }

  std::string str() const;
};

}  // namespace formcert
