// Copyright 2026 The wdynmo Authors
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

#ifndef WDYNMO_RATIONAL_H_
#define WDYNMO_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wdynmo {

// Exact non-negative fraction, always stored in lowest terms.
//
// Numerator and denominator are 64-bit; intermediate products are formed in
// 128 bits and reduced before being narrowed, so overflow is only reported
// (as ResourceError) when the reduced result itself does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  // NOLINTNEXTLINE(google-explicit-constructor): integers are rationals.
  Rational(std::int64_t value);
  // Throws DomainError unless numerator >= 0 and denominator > 0.
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p", "p/q" and decimal "12.375". Throws DomainError on anything
  // else, including negative values.
  static Rational Parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Smallest integer >= *this.
  std::int64_t Ceil() const;
  std::int64_t Floor() const { return num_ / den_; }
  double ToDouble() const;
  // "p" when the denominator is 1, otherwise "p/q".
  std::string ToString() const;

  Rational& operator+=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws DomainError if the result would be negative.
  Rational& operator-=(const Rational& other);
  // Throws DomainError on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational FromWide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// max(a - b, 0).
Rational SaturatingSub(const Rational& a, const Rational& b);

// Least common multiple of two positive integers; ResourceError on overflow.
std::int64_t Lcm(std::int64_t a, std::int64_t b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wdynmo

#endif  // WDYNMO_RATIONAL_H_
