// Compiled with -mavx2 only; callers reach these through the dispatch table.
#include <immintrin.h>

#include "facering/field/prime_field.hpp"
#include "facering/simd/kernels.hpp"

namespace facering::simd::detail {
namespace {

constexpr std::uint64_t kP = Fp::kModulus;

inline __m256i reduce_once(__m256i x, __m256i p, __m256i p_minus_one) {
  // Lanes stay below 2^63, so the signed compare is exact.
  const __m256i ge = _mm256_cmpgt_epi64(x, p_minus_one);
  return _mm256_sub_epi64(x, _mm256_and_si256(ge, p));
}

// Lane-wise a*b mod (2^61 - 1) from four 32x32->64 partial products.
//   a*b = hh*2^64 + (lh + hl)*2^32 + ll, and 2^61 = 1 (mod p).
inline __m256i mulmod(__m256i a, __m256i b) {
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kP));
  const __m256i p1 = _mm256_set1_epi64x(static_cast<long long>(kP - 1));
  const __m256i mask29 = _mm256_set1_epi64x((1LL << 29) - 1);

  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i ll = _mm256_mul_epu32(a, b);
  const __m256i lh = _mm256_mul_epu32(a, b_hi);
  const __m256i hl = _mm256_mul_epu32(a_hi, b);
  const __m256i hh = _mm256_mul_epu32(a_hi, b_hi);

  const __m256i mid = _mm256_add_epi64(lh, hl);
  const __m256i mid_lo = _mm256_slli_epi64(_mm256_and_si256(mid, mask29), 32);
  const __m256i mid_hi = _mm256_srli_epi64(mid, 29);

  __m256i sum = _mm256_slli_epi64(hh, 3);
  sum = _mm256_add_epi64(sum, mid_hi);
  sum = _mm256_add_epi64(sum, mid_lo);
  sum = _mm256_add_epi64(sum, _mm256_and_si256(ll, p));
  sum = _mm256_add_epi64(sum, _mm256_srli_epi64(ll, 61));

  const __m256i folded = _mm256_add_epi64(_mm256_and_si256(sum, p), _mm256_srli_epi64(sum, 61));
  return reduce_once(folded, p, p1);
}

inline __m256i addmod(__m256i a, __m256i b) {
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kP));
  const __m256i p1 = _mm256_set1_epi64x(static_cast<long long>(kP - 1));
  return reduce_once(_mm256_add_epi64(a, b), p, p1);
}

}  // namespace

void axpy_avx2(std::uint64_t* y, const std::uint64_t* x, std::uint64_t c, std::size_t n) {
  const __m256i cv = _mm256_set1_epi64x(static_cast<long long>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), addmod(yv, mulmod(xv, cv)));
  }
  for (; i < n; ++i) y[i] = Fp::add_raw(y[i], Fp::mul_raw(c, x[i]));
}

void scale_avx2(std::uint64_t* x, std::uint64_t c, std::size_t n) {
  const __m256i cv = _mm256_set1_epi64x(static_cast<long long>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), mulmod(xv, cv));
  }
  for (; i < n; ++i) x[i] = Fp::mul_raw(c, x[i]);
}

std::uint64_t dot_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = addmod(acc, mulmod(av, bv));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t s = 0;
  for (std::uint64_t lane : lanes) s = Fp::add_raw(s, lane);
  for (; i < n; ++i) s = Fp::add_raw(s, Fp::mul_raw(a[i], b[i]));
  return s;
}

}  // namespace facering::simd::detail
