#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "facering/field/field.hpp"
#include "facering/linalg/random.hpp"

using namespace facering;

namespace {

// Reference arithmetic through GMP, independent of the Mersenne folding.
std::uint64_t mulmod_ref(std::uint64_t a, std::uint64_t b) {
  mpz_class x(std::to_string(a)), y(std::to_string(b)), p(std::to_string(Fp::kModulus));
  mpz_class r = (x * y) % p;
  return std::stoull(r.get_str());
}

}  // namespace

TEST(Fp, BasicArithmetic) {
  const Fp a = Fp::from_int(5), b = Fp::from_int(-3);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((b - a), Fp::from_int(-8));
  EXPECT_EQ((-Fp::zero()), Fp::zero());
  EXPECT_EQ(Fp::from_int(-1).value(), Fp::kModulus - 1);
  EXPECT_EQ(a * a.inverse(), Fp::one());
  EXPECT_THROW((void)Fp::zero().inverse(), std::domain_error);
}

TEST(Fp, MulMatchesBigIntegerReference) {
  SampleStream s(11);
  for (int i = 0; i < 2000; ++i) {
    const Fp a = s.next<Fp>(), b = s.next<Fp>();
    ASSERT_EQ((a * b).value(), mulmod_ref(a.value(), b.value()));
  }
  const Fp top = Fp::from_raw(Fp::kModulus - 1);
  EXPECT_EQ((top * top).value(), mulmod_ref(Fp::kModulus - 1, Fp::kModulus - 1));
}

TEST(Fp, FermatAndPow) {
  const Fp a = Fp::from_int(123456789);
  EXPECT_EQ(a.pow(Fp::kModulus - 1), Fp::one());
  EXPECT_EQ(a.pow(0), Fp::one());
  EXPECT_EQ(a.pow(3), a * a * a);
}

TEST(Rational, ReducedWithPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("10/4").to_string(), "5/2");
  EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
  EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).to_string(), "5/6");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW((void)Rational::zero().inverse(), std::domain_error);
}

TEST(FieldCast, RationalToPrime) {
  const Fp half = field_cast<Fp>(Rational(1, 2));
  EXPECT_EQ(half * Fp::from_int(2), Fp::one());
  EXPECT_EQ(field_cast<Fp>(Rational(-3)), Fp::from_int(-3));
}

TEST(FieldMode, ParseRoundTrip) {
  EXPECT_EQ(parse_field_mode("prime"), FieldMode::Prime);
  EXPECT_EQ(parse_field_mode("rational"), FieldMode::Rational);
  EXPECT_EQ(to_string(FieldMode::Rational), "rational");
  EXPECT_THROW(parse_field_mode("real"), std::invalid_argument);
}

TEST(SampleGeneric, EmptyAndDeterministic) {
  EXPECT_TRUE(sample_generic<Fp>(0, 5).empty());
  EXPECT_EQ(sample_generic<Fp>(3, 5), sample_generic<Fp>(3, 5));
  EXPECT_NE(sample_generic<Fp>(3, 5), sample_generic<Fp>(3, 6));
  for (const Fp& x : sample_generic<Fp>(100, 1)) EXPECT_LT(x.value(), Fp::kModulus);
}

TEST(SampleGeneric, MatchesGoldenFile) {
  std::ifstream in(std::string(FACERING_GOLDEN_DIR) + "/sample_generic.txt");
  ASSERT_TRUE(in) << "missing golden file";
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string kind;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    row >> kind >> seed >> n;
    if (kind == "fp") {
      const auto got = sample_generic<Fp>(n, seed);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t want = 0;
        row >> want;
        EXPECT_EQ(got[i].value(), want) << "seed " << seed << " index " << i;
      }
    } else {
      const auto got = sample_generic<Rational>(n, seed);
      for (std::size_t i = 0; i < n; ++i) {
        std::string want;
        row >> want;
        EXPECT_EQ(got[i], Rational::parse(want)) << "seed " << seed << " index " << i;
      }
    }
    ++checked;
  }
  EXPECT_EQ(checked, 6);
}

TEST(DeriveSeed, ChildrenDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(9, 4), derive_seed(9, 4));
}
