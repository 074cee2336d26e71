#pragma once

// Row kernels over F_p, p = 2^61 - 1, used by every elimination routine.
//
// All inputs and outputs are canonical residues in [0, p). Each variant must
// produce bit-identical results (tests/test_simd.cpp).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace facering::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  /// y[i] = y[i] + c * x[i]  (mod p)
  void (*axpy)(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c, std::size_t n);
  /// x[i] = c * x[i]  (mod p)
  void (*scale)(std::uint64_t* x, std::uint64_t c, std::size_t n);
  /// sum_i a[i] * b[i]  (mod p)
  std::uint64_t (*dot)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Best available table. Honors FACERING_SIMD=scalar|avx2 from the
/// environment on first use.
const KernelTable& active_kernels();

/// Overrides the dispatch choice; returns false if `isa` is unavailable.
bool select_kernels(Isa isa);

namespace detail {
void axpy_scalar(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c, std::size_t n);
void scale_scalar(std::uint64_t* x, std::uint64_t c, std::size_t n);
std::uint64_t dot_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
#if defined(FACERING_HAVE_AVX2)
void axpy_avx2(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c, std::size_t n);
void scale_avx2(std::uint64_t* x, std::uint64_t c, std::size_t n);
std::uint64_t dot_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
#endif
}  // namespace detail

}  // namespace facering::simd
