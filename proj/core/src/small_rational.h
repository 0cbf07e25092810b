// Copyright 2026 The compactlin Authors.
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

#ifndef COMPACTLIN_SRC_SMALL_RATIONAL_H_
#define COMPACTLIN_SRC_SMALL_RATIONAL_H_

#include <cstdint>
#include <limits>
#include <numeric>

#include "compactlin/rational.h"

namespace compactlin {

// Thrown when a SmallRational result leaves the 64-bit range.
struct RationalOverflow {};

// Reduced fraction of two 64-bit integers with a positive denominator.
// Every operation is exact or throws RationalOverflow.
class SmallRational {
 public:
  SmallRational() = default;
  SmallRational(int value) : num_(value) {}  // NOLINT

  explicit SmallRational(const Rational& value) {
    if (!mpz_fits_slong_p(value.get_num_mpz_t()) ||
        !mpz_fits_slong_p(value.get_den_mpz_t())) {
      throw RationalOverflow{};
    }
    num_ = mpz_get_si(value.get_num_mpz_t());
    den_ = mpz_get_si(value.get_den_mpz_t());
    if (num_ == kMin) throw RationalOverflow{};
  }

  Rational ToRational() const {
    Rational value;
    mpz_set_si(value.get_num_mpz_t(), num_);
    mpz_set_si(value.get_den_mpz_t(), den_);
    return value;
  }

  int Sign() const { return (num_ > 0) - (num_ < 0); }

  SmallRational operator-() const { return Raw(-num_, den_); }

  friend SmallRational operator+(const SmallRational& a,
                                 const SmallRational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Make(Wide(a.num_) + b.num_, 1);
    return Make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                Wide(a.den_) * b.den_);
  }
  friend SmallRational operator-(const SmallRational& a,
                                 const SmallRational& b) {
    return a + (-b);
  }
  friend SmallRational operator*(const SmallRational& a,
                                 const SmallRational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Make(Wide(a.num_) * b.num_, 1);
    return Make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend SmallRational operator/(const SmallRational& a,
                                 const SmallRational& b) {
    Wide num = Wide(a.num_) * b.den_;
    Wide den = Wide(a.den_) * b.num_;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Make(num, den);
  }
  SmallRational& operator+=(const SmallRational& b) { return *this = *this + b; }
  SmallRational& operator-=(const SmallRational& b) { return *this = *this - b; }
  SmallRational& operator*=(const SmallRational& b) { return *this = *this * b; }
  SmallRational& operator/=(const SmallRational& b) { return *this = *this / b; }

  // this -= a * b
  void SubMul(const SmallRational& a, const SmallRational& b) {
    if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
      *this = Make(Wide(num_) - Wide(a.num_) * b.num_, 1);
      return;
    }
    *this -= a * b;
  }

  friend bool operator==(const SmallRational&, const SmallRational&) = default;
  friend auto operator<=>(const SmallRational& a, const SmallRational& b) {
    return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
  }

  friend SmallRational abs(const SmallRational& a) {
    return a.num_ < 0 ? -a : a;
  }

 private:
  using Wide = __int128;
  static constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
  static constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

  static SmallRational Raw(int64_t num, int64_t den) {
    SmallRational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }

  static unsigned __int128 Gcd(unsigned __int128 a, unsigned __int128 b) {
    constexpr unsigned __int128 kWord = std::numeric_limits<uint64_t>::max();
    while (b != 0) {
      if (a <= kWord && b <= kWord) {
        return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
      }
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // den > 0.
  static SmallRational Make(Wide num, Wide den) {
    if (num <= kMax && num >= -kMax && den <= kMax) {
      int64_t n = static_cast<int64_t>(num);
      int64_t d = static_cast<int64_t>(den);
      if (d != 1) {
        const uint64_t g =
            std::gcd(static_cast<uint64_t>(n < 0 ? -n : n), static_cast<uint64_t>(d));
        if (g > 1) {
          n /= static_cast<int64_t>(g);
          d /= static_cast<int64_t>(g);
        }
      }
      return Raw(n, d);
    }
    const unsigned __int128 g = Gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= static_cast<Wide>(g);
      den /= static_cast<Wide>(g);
    }
    if (num > kMax || num < -kMax || den > kMax) throw RationalOverflow{};
    return Raw(static_cast<int64_t>(num), static_cast<int64_t>(den));
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace compactlin

#endif  // COMPACTLIN_SRC_SMALL_RATIONAL_H_
