#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace facering {

/// Arbitrary-precision rational, always reduced with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_int(std::int64_t v) { return Rational(v); }
  /// Accepts "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  const mpq_class& value() const { return value_; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const;

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  mpq_class value_;
};

}  // namespace facering
