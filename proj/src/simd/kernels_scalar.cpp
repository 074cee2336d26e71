#include "facering/field/prime_field.hpp"
#include "facering/simd/kernels.hpp"

namespace facering::simd::detail {

void axpy_scalar(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = Fp::add_raw(y[i], Fp::mul_raw(c, x[i]));
  }
}

void scale_scalar(std::uint64_t* x, std::uint64_t c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = Fp::mul_raw(c, x[i]);
}

std::uint64_t dot_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = Fp::add_raw(acc, Fp::mul_raw(a[i], b[i]));
  return acc;
}

}  // namespace facering::simd::detail
