#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facering/linalg/matrix.hpp"

namespace facering {

/// Outcome of combining two maps A, B : X → Y as A + tB for sampled t.
template <ExactField F>
struct CombineResult {
  Matrix<F> combined;
  F t = F::zero();
  /// B(ker A) ∩ im A = 0, checked exactly.
  bool hypothesis = false;
  /// ker(A + tB) = ker A ∩ ker B for the returned t.
  bool kernel_equality = false;
  /// Samples of t rejected before the returned one.
  int resamples = 0;
  std::vector<std::string> notes;
};

/// Samples t != 0 and forms A + tB. Under the hypothesis, a t that breaks
/// kernel equality is resampled (up to `trials` draws). Without it, every
/// draw is a search for a counterexample to kernel equality, and the first
/// one found is returned. Throws DimensionError on a shape mismatch.
template <ExactField F>
CombineResult<F> generic_combine(const Matrix<F>& a, const Matrix<F>& b, std::uint64_t seed = 0, int trials = 3);

/// The hypothesis of generic_combine on its own.
template <ExactField F>
bool perturbation_hypothesis(const Matrix<F>& a, const Matrix<F>& b);

}  // namespace facering
