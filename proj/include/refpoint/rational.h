// Copyright 2026 The refpoint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFPOINT_RATIONAL_H_
#define REFPOINT_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace refpoint {

// Exact fraction with a positive denominator, always stored in lowest terms.
// Used for the linear coefficients of the LLG closed forms, whose entries are
// all small fractions.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t numerator)  // NOLINT: implicit from integer
      : num_(numerator) {}
  constexpr Rational(std::int64_t numerator, std::int64_t denominator)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  constexpr double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "n" for integers, "n/d" otherwise.
  std::string ToString() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr Rational operator+(Rational x, Rational y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend constexpr Rational operator-(Rational x, Rational y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend constexpr Rational operator*(Rational x, Rational y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend constexpr Rational operator/(Rational x, Rational y) {
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }
  constexpr Rational operator-() const { return Rational(-num_, den_); }

  // Lowest-terms storage makes member-wise equality exact.
  friend constexpr bool operator==(Rational x, Rational y) = default;
  friend constexpr std::strong_ordering operator<=>(Rational x, Rational y) {
    return x.num_ * y.den_ <=> y.num_ * x.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, Rational r) {
    return os << r.ToString();
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace refpoint

#endif  // REFPOINT_RATIONAL_H_
