#include "facering/field/field.hpp"

#include <cctype>
#include <stdexcept>

namespace facering {

Fp Fp::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_p");
  return pow(kModulus - 2);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_integer(num));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
      throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    }
    const mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(parse_integer(num), d);
  }
  return Rational(std::move(q));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string_view to_string(FieldMode mode) {
  return mode == FieldMode::Prime ? "prime" : "rational";
}

FieldMode parse_field_mode(std::string_view text) {
  if (text == "prime") return FieldMode::Prime;
  if (text == "rational") return FieldMode::Rational;
  throw std::invalid_argument("unknown field mode '" + std::string(text) + "'");
}

template <>
Fp field_cast<Fp>(const Rational& q) {
  const auto reduce = [](const mpz_class& z) {
    const unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), Fp::kModulus);
    return Fp::from_raw(r);
  };
  const Fp den = reduce(q.value().get_den());
  if (den.is_zero()) throw std::domain_error("denominator of " + q.to_string() + " vanishes mod p");
  return reduce(q.value().get_num()) / den;
}

}  // namespace facering
