#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "facering/field/prime_field.hpp"
#include "facering/field/rational.hpp"

namespace facering {

template <class F>
concept ExactField = requires(F a, F b, std::int64_t i) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.inverse() } -> std::convertible_to<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::convertible_to<bool>;
  { F::zero() } -> std::convertible_to<F>;
  { F::one() } -> std::convertible_to<F>;
  { F::from_int(i) } -> std::convertible_to<F>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

enum class FieldMode { Prime, Rational };

std::string_view to_string(FieldMode mode);
/// "prime" or "rational"; throws std::invalid_argument otherwise.
FieldMode parse_field_mode(std::string_view text);

/// Maps an exact rational into F. For Fp this reduces p/q mod the prime and
/// throws std::domain_error when q vanishes there.
template <ExactField F>
F field_cast(const Rational& q);

template <>
inline Rational field_cast<Rational>(const Rational& q) {
  return q;
}
template <>
Fp field_cast<Fp>(const Rational& q);

static_assert(ExactField<Fp>);
static_assert(ExactField<Rational>);

}  // namespace facering
