#include <gtest/gtest.h>

#include <vector>

#include "facering/field/prime_field.hpp"
#include "facering/linalg/matrix.hpp"
#include "facering/linalg/random.hpp"
#include "facering/simd/kernels.hpp"

using namespace facering;
using simd::KernelTable;

namespace {

std::vector<std::uint64_t> random_row(SampleStream& s, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = s.next<Fp>().value();
  return v;
}

// Rows salted with the extreme residues 0, 1, p-1, p-2.
std::vector<std::uint64_t> edge_row(SampleStream& s, std::size_t n) {
  auto v = random_row(s, n);
  const std::uint64_t edges[] = {0, 1, Fp::kModulus - 1, Fp::kModulus - 2};
  for (std::size_t i = 0; i < n; i += 3) v[i] = edges[(i / 3) % 4];
  return v;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  const KernelTable* avx2 = simd::avx2_kernels();
  const KernelTable& scalar = simd::scalar_kernels();
};

}  // namespace

TEST(SimdDispatch, ScalarAlwaysAvailable) {
  EXPECT_EQ(simd::scalar_kernels().isa, simd::Isa::Scalar);
  EXPECT_TRUE(simd::select_kernels(simd::Isa::Scalar));
  EXPECT_EQ(simd::active_kernels().isa, simd::Isa::Scalar);
  if (simd::avx2_kernels() != nullptr) {
    EXPECT_TRUE(simd::select_kernels(simd::Isa::Avx2));
    EXPECT_EQ(simd::active_kernels().name, "avx2");
  } else {
    EXPECT_FALSE(simd::select_kernels(simd::Isa::Avx2));
  }
}

TEST(SimdScalar, AgreesWithFpOperators) {
  SampleStream s(3);
  const std::size_t n = 37;
  auto y = random_row(s, n);
  const auto x = random_row(s, n);
  const std::uint64_t c = s.next<Fp>().value();
  auto want = y;
  for (std::size_t i = 0; i < n; ++i) want[i] = (Fp::from_raw(y[i]) + Fp::from_raw(c) * Fp::from_raw(x[i])).value();
  simd::scalar_kernels().axpy(y.data(), x.data(), c, n);
  EXPECT_EQ(y, want);
}

TEST_P(KernelEquivalence, Axpy) {
  if (avx2 == nullptr) GTEST_SKIP() << "AVX2 unavailable";
  const std::size_t n = GetParam();
  SampleStream s(100 + n);
  for (int trial = 0; trial < 20; ++trial) {
    auto y1 = trial % 2 ? edge_row(s, n) : random_row(s, n);
    const auto x = trial % 2 ? edge_row(s, n) : random_row(s, n);
    const std::uint64_t c = trial == 0 ? Fp::kModulus - 1 : s.next<Fp>().value();
    auto y2 = y1;
    scalar.axpy(y1.data(), x.data(), c, n);
    avx2->axpy(y2.data(), x.data(), c, n);
    ASSERT_EQ(y1, y2) << "n=" << n << " trial=" << trial;
  }
}

TEST_P(KernelEquivalence, Scale) {
  if (avx2 == nullptr) GTEST_SKIP() << "AVX2 unavailable";
  const std::size_t n = GetParam();
  SampleStream s(200 + n);
  for (int trial = 0; trial < 20; ++trial) {
    auto x1 = edge_row(s, n);
    auto x2 = x1;
    const std::uint64_t c = s.next<Fp>().value();
    scalar.scale(x1.data(), c, n);
    avx2->scale(x2.data(), c, n);
    ASSERT_EQ(x1, x2);
  }
}

TEST_P(KernelEquivalence, Dot) {
  if (avx2 == nullptr) GTEST_SKIP() << "AVX2 unavailable";
  const std::size_t n = GetParam();
  SampleStream s(300 + n);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = trial % 2 ? edge_row(s, n) : random_row(s, n);
    const auto b = edge_row(s, n);
    ASSERT_EQ(scalar.dot(a.data(), b.data(), n), avx2->dot(a.data(), b.data(), n));
  }
}

INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence, ::testing::Values(0, 1, 3, 4, 5, 8, 15, 16, 17, 63, 64, 257));

TEST(SimdEndToEnd, RankIdenticalUnderBothIsas) {
  if (simd::avx2_kernels() == nullptr) GTEST_SKIP() << "AVX2 unavailable";
  SampleStream s(77);
  Matrix<Fp> a(30, 12), b(12, 40);
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 12; ++j) a(i, j) = s.next<Fp>();
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 40; ++j) b(i, j) = s.next<Fp>();
  const Matrix<Fp> m = a * b;
  simd::select_kernels(simd::Isa::Scalar);
  const auto k_scalar = kernel_basis(m);
  simd::select_kernels(simd::Isa::Avx2);
  const auto k_avx2 = kernel_basis(m);
  EXPECT_EQ(k_scalar, k_avx2);
  EXPECT_EQ(k_avx2.dim(), 28u);
}
