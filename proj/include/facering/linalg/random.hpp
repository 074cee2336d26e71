#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "facering/field/field.hpp"

namespace facering {

/// SplitMix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based split: child `index` of `parent`. Stable across runs and
/// independent of the order in which children are consumed.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(parent ^ splitmix64(index));
}

/// Deterministic source for field samples. Only the raw 64-bit stream of
/// std::mt19937_64 is used (its output is fixed by the standard); the
/// mapping to field elements is ours, so samples are identical everywhere.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  template <ExactField F>
  F next();

  template <ExactField F>
  std::vector<F> next_vector(std::size_t n) {
    std::vector<F> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(next<F>());
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform residue in [0, p): top 61 bits with rejection of the single value p.
template <>
inline Fp SampleStream::next<Fp>() {
  for (;;) {
    const std::uint64_t x = engine_() >> 3;
    if (x < Fp::kModulus) return Fp::from_raw(x);
  }
}

/// Small-height rational: numerator in [-32, 32], denominator in [1, 8].
template <>
inline Rational SampleStream::next<Rational>() {
  const auto num = static_cast<std::int64_t>(engine_() % 65) - 32;
  const auto den = static_cast<std::int64_t>(engine_() % 8) + 1;
  return Rational(num, den);
}

/// n independent generic scalars, deterministic in seed.
template <ExactField F>
std::vector<F> sample_generic(std::size_t n, std::uint64_t seed) {
  SampleStream stream(seed);
  return stream.next_vector<F>(n);
}

}  // namespace facering
