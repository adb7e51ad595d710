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

#include "wdynmo/rational.h"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "wdynmo/errors.h"

namespace wdynmo {
namespace {

using Wide = __int128;

constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();

Wide WideGcd(Wide a, Wide b) {
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t ParseDigits(std::string_view digits, std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ResourceError("number out of 64-bit range: '" + std::string(text) +
                        "'");
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      digits.empty() || digits.front() == '-' || digits.front() == '+') {
    throw DomainError("not a non-negative rational: '" + std::string(text) +
                      "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value < 0) {
    throw DomainError("negative rational: " + std::to_string(value));
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) {
    throw DomainError("rational denominator must be positive");
  }
  if (numerator < 0) {
    throw DomainError("negative rational: " + std::to_string(numerator) +
                      "/" + std::to_string(denominator));
  }
  std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::FromWide(Wide numerator, Wide denominator) {
  Wide g = WideGcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (numerator > kMax || denominator > kMax) {
    throw ResourceError("rational arithmetic overflowed 64 bits");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t p = ParseDigits(s.substr(0, slash), text);
    std::int64_t q = ParseDigits(s.substr(slash + 1), text);
    if (q == 0) {
      throw DomainError("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(p, q);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw DomainError("not a non-negative rational: '" + std::string(text) +
                        "'");
    }
    if (frac.size() > 18) {
      throw ResourceError("too many decimal digits: '" + std::string(text) +
                          "'");
    }
    std::int64_t w = whole.empty() ? 0 : ParseDigits(whole, text);
    std::int64_t f = frac.empty() ? 0 : ParseDigits(frac, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return FromWide(static_cast<Wide>(w) * scale + f, scale);
  }
  return Rational(ParseDigits(s, text));
}

std::int64_t Rational::Ceil() const {
  return num_ / den_ + (num_ % den_ != 0 ? 1 : 0);
}

double Rational::ToDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == other.den_) {
    return *this = FromWide(static_cast<Wide>(num_) + other.num_, den_);
  }
  return *this = FromWide(static_cast<Wide>(num_) * other.den_ +
                              static_cast<Wide>(other.num_) * den_,
                          static_cast<Wide>(den_) * other.den_);
}

Rational& Rational::operator-=(const Rational& other) {
  Wide lhs = static_cast<Wide>(num_) * other.den_;
  Wide rhs = static_cast<Wide>(other.num_) * den_;
  if (lhs < rhs) {
    throw DomainError("rational subtraction would be negative: " +
                      ToString() + " - " + other.ToString());
  }
  return *this = FromWide(lhs - rhs, static_cast<Wide>(den_) * other.den_);
}

Rational& Rational::operator*=(const Rational& other) {
  return *this = FromWide(static_cast<Wide>(num_) * other.num_,
                          static_cast<Wide>(den_) * other.den_);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw DomainError("rational division by zero");
  return *this = FromWide(static_cast<Wide>(num_) * other.den_,
                          static_cast<Wide>(den_) * other.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational SaturatingSub(const Rational& a, const Rational& b) {
  if (a <= b) return Rational();
  return a - b;
}

std::int64_t Lcm(std::int64_t a, std::int64_t b) {
  Wide l = static_cast<Wide>(a / std::gcd(a, b)) * b;
  if (l > kMax) throw ResourceError("common scale overflowed 64 bits");
  return static_cast<std::int64_t>(l);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace wdynmo
