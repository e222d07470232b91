#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>

#include "antipodal/errors.hpp"

namespace antipodal {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Components are 64-bit; every operation is carried out in 128-bit
/// intermediates, reduced, and checked on the way back. Anything that does
/// not fit throws ArithmeticOverflow instead of wrapping.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() noexcept = default;
  constexpr Rational(int_type n) noexcept : num_(n) {}  // NOLINT: implicit on purpose
  Rational(int_type n, int_type d) { assign(n, d); }

  [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
  [[nodiscard]] constexpr int_type den() const noexcept { return den_; }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational& operator+=(const Rational& o) {
    assign(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    assign(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    assign(wide(num_) * o.num_, wide(den_) * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    assign(wide(num_) * o.den_, wide(den_) * o.num_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    if (a.num_ == std::numeric_limits<int_type>::min()) throw ArithmeticOverflow("rational negation");
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  /// Largest integer not exceeding the value.
  [[nodiscard]] int_type floor() const noexcept {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using wide_type = __int128;

  static constexpr wide_type wide(int_type v) noexcept { return static_cast<wide_type>(v); }

  static wide_type gcd(wide_type a, wide_type b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      wide_type t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign(wide_type n, wide_type d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const wide_type g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr wide_type lo = std::numeric_limits<int_type>::min() + 1;
    constexpr wide_type hi = std::numeric_limits<int_type>::max();
    if (n < lo || n > hi || d > hi) throw ArithmeticOverflow("rational result exceeds 64-bit range");
    num_ = static_cast<int_type>(n);
    den_ = static_cast<int_type>(d);
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

}  // namespace antipodal

template <>
struct std::hash<antipodal::Rational> {
  std::size_t operator()(const antipodal::Rational& r) const noexcept {
    const std::size_t h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
