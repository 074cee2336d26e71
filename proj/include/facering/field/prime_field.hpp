#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace facering {

/// Residues modulo the Mersenne prime 2^61 - 1.
///
/// Every value is kept canonical in [0, p). Products go through a 128-bit
/// intermediate and are folded with the identity 2^61 = 1 (mod p), so no
/// division is ever needed outside of inversion.
class Fp {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr Fp() = default;

  /// `raw` must already be < kModulus.
  static constexpr Fp from_raw(std::uint64_t raw) {
    Fp r;
    r.value_ = raw;
    return r;
  }
  static constexpr Fp from_int(std::int64_t v) {
    if (v >= 0) return from_raw(static_cast<std::uint64_t>(v) % kModulus);
    // -(v+1) avoids overflow on INT64_MIN.
    const std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % kModulus;
    return from_raw(m == 0 ? 0 : kModulus - m);
  }
  static constexpr Fp zero() { return from_raw(0); }
  static constexpr Fp one() { return from_raw(1); }

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  static constexpr std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s >= kModulus ? s - kModulus : s;
  }
  static constexpr std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    const std::uint64_t lo = static_cast<std::uint64_t>(prod) & kModulus;
    const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    const std::uint64_t s = lo + hi;
    return s >= kModulus ? s - kModulus : s;
  }

  constexpr Fp operator+(Fp o) const { return from_raw(add_raw(value_, o.value_)); }
  constexpr Fp operator-(Fp o) const {
    return from_raw(value_ >= o.value_ ? value_ - o.value_ : value_ + kModulus - o.value_);
  }
  constexpr Fp operator-() const { return from_raw(value_ == 0 ? 0 : kModulus - value_); }
  constexpr Fp operator*(Fp o) const { return from_raw(mul_raw(value_, o.value_)); }
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = one();
    while (e != 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  /// Throws std::domain_error on zero.
  Fp inverse() const;

  constexpr bool operator==(const Fp&) const = default;
  constexpr auto operator<=>(const Fp&) const = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
};

static_assert(sizeof(Fp) == sizeof(std::uint64_t));

}  // namespace facering
