#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "surjvcsp/errors.hpp"

namespace surjvcsp {

/// Exact extended rational: a reduced fraction p/q with q >= 1, or +infinity.
///
/// Arithmetic is carried out in 128-bit intermediates and reduced; a result
/// that does not fit back into 64-bit numerator/denominator raises
/// ResourceError rather than silently losing exactness.
///
/// Conventions follow the VCSP literature: infinity absorbs addition, and
/// c * infinity = infinity for every c >= 0, including c = 0.
class Value {
 public:
  constexpr Value() = default;
  constexpr Value(std::int64_t integer) : num_(integer), den_(1) {}  // NOLINT
  Value(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw ArgumentError("Value: zero denominator");
    *this = from_wide(numerator, denominator);
  }

  static constexpr Value infinity() {
    Value v;
    v.num_ = 1;
    v.den_ = 0;
    return v;
  }

  constexpr bool is_finite() const { return den_ != 0; }
  constexpr bool is_infinite() const { return den_ == 0; }
  constexpr bool is_zero() const { return den_ != 0 && num_ == 0; }
  constexpr bool is_integer() const { return den_ == 1; }

  /// Numerator/denominator of a finite value.
  std::int64_t numerator() const {
    require_finite("numerator");
    return num_;
  }
  std::int64_t denominator() const {
    require_finite("denominator");
    return den_;
  }

  friend Value operator+(const Value& a, const Value& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    const __int128 g = gcd128(a.den_, b.den_);
    const __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                         static_cast<__int128>(b.num_) * (a.den_ / g);
    const __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
    return from_wide(num, den);
  }

  /// inf - finite = inf; anything - inf is undefined.
  friend Value operator-(const Value& a, const Value& b) {
    if (b.is_infinite()) throw ArgumentError("Value: subtraction of infinity");
    if (a.is_infinite()) return infinity();
    return a + (-b);
  }

  Value operator-() const {
    require_finite("negation");
    if (num_ == INT64_MIN) throw ResourceError("Value: overflow in negation");
    Value v = *this;
    v.num_ = -v.num_;
    return v;
  }

  /// Infinity times a non-negative value is infinity; times a negative value
  /// is undefined.
  friend Value operator*(const Value& a, const Value& b) {
    if (a.is_infinite() || b.is_infinite()) {
      const Value& other = a.is_infinite() ? b : a;
      if (other.is_finite() && other.num_ < 0)
        throw ArgumentError("Value: negative multiple of infinity");
      return infinity();
    }
    const __int128 g1 = gcd128(abs128(a.num_), b.den_);
    const __int128 g2 = gcd128(abs128(b.num_), a.den_);
    const __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    const __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    return from_wide(num, den);
  }

  /// Division by a finite non-zero value.
  friend Value operator/(const Value& a, const Value& b) {
    if (b.is_infinite() || b.is_zero())
      throw ArgumentError("Value: division by zero or infinity");
    if (a.is_infinite()) {
      if (b.num_ < 0) throw ArgumentError("Value: negative multiple of infinity");
      return infinity();
    }
    return a * Value::from_wide(b.den_, b.num_);
  }

  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator-=(const Value& o) { return *this = *this - o; }
  Value& operator*=(const Value& o) { return *this = *this * o; }
  Value& operator/=(const Value& o) { return *this = *this / o; }

  friend bool operator==(const Value& a, const Value& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// "inf", "P" or "P/Q" in lowest terms.
  std::string to_string() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Inverse of to_string; also accepts non-reduced fractions and a leading '+'.
  static std::optional<Value> parse(std::string_view text) {
    if (text == "inf" || text == "+inf") return infinity();
    const auto slash = text.find('/');
    const auto num = parse_int(text.substr(0, slash));
    if (!num) return std::nullopt;
    if (slash == std::string_view::npos) return Value(*num);
    const auto den = parse_int(text.substr(slash + 1));
    if (!den || *den <= 0) return std::nullopt;
    return Value(*num, *den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Value& v) {
    return os << v.to_string();
  }

 private:
  static __int128 abs128(__int128 x) { return x < 0 ? -x : x; }

  static __int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Value from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
    if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX)
      throw ResourceError("Value: rational overflow");
    Value v;
    v.num_ = static_cast<std::int64_t>(num);
    v.den_ = static_cast<std::int64_t>(den);
    return v;
  }

  static std::optional<std::int64_t> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return std::nullopt;
    __int128 acc = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      acc = acc * 10 + (s[i] - '0');
      if (acc > INT64_MAX) return std::nullopt;
    }
    return static_cast<std::int64_t>(negative ? -acc : acc);
  }

  void require_finite(const char* what) const {
    if (is_infinite()) throw ArgumentError(std::string("Value: ") + what + " of infinity");
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // 0 encodes +infinity
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }
inline Value max(const Value& a, const Value& b) { return a < b ? b : a; }

}  // namespace surjvcsp
