// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <smt/error.hpp>

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

namespace smt {

/// Exact rational with 64-bit numerator and denominator, always normalized
/// (gcd 1, positive denominator). Products are formed in 128 bits and checked
/// on the way back down.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "p/q" or a plain decimal such as "-0.125" exactly.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      return Rational(parse_int(text.substr(0, slash), 0), parse_int(text.substr(slash + 1), slash + 1));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(text, 0));
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 17) throw ParseError("too many decimal digits", dot + 1);
    digits.append(frac);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (digits == "-" || digits == "+" || digits.empty()) throw ParseError("malformed decimal", 0);
    return Rational(parse_int(digits, 0), den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static std::int64_t parse_int(std::string_view s, std::size_t offset) {
    if (s.empty()) throw ParseError("missing integer", offset);
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("missing digits", offset);
    __int128 v = 0;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw ParseError("invalid digit in number", offset + j);
      v = v * 10 + (s[j] - '0');
      if (v > INT64_MAX) throw ParseError("integer overflow", offset + j);
    }
    return static_cast<std::int64_t>(s[0] == '-' ? -v : v);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 num, __int128 den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX) throw DomainError("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact multiple of 1/2, stored as twice its value. Used for fractional matching numbers.
class HalfInteger {
public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(std::int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const noexcept { return twice_; }
  Rational rational() const { return Rational(twice_, 2); }
  std::string str() const { return rational().str(); }

  friend constexpr bool operator==(const HalfInteger&, const HalfInteger&) = default;
  friend constexpr auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
  friend std::ostream& operator<<(std::ostream& os, const HalfInteger& h) { return os << h.str(); }

private:
  std::int64_t twice_ = 0;
};

} // namespace smt
