#include "facering/lefschetz/perturbation.hpp"

#include <algorithm>

#include "facering/linalg/random.hpp"

namespace facering {

template <ExactField F>
bool perturbation_hypothesis(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("generic_combine: shapes differ");
  return subspace_intersect(image_of(b, kernel_basis(a)), image(a)).is_zero();
}

template <ExactField F>
CombineResult<F> generic_combine(const Matrix<F>& a, const Matrix<F>& b, std::uint64_t seed, int trials) {
  CombineResult<F> out;
  out.hypothesis = perturbation_hypothesis(a, b);
  const Subspace<F> expected = subspace_intersect(kernel_basis(a), kernel_basis(b));
  SampleStream stream(seed);
  const int total = std::max(1, trials);
  for (int i = 0; i < total; ++i) {
    F t = stream.next<F>();
    while (t.is_zero()) t = stream.next<F>();
    out.t = t;
    out.combined = a + b.scaled(t);
    out.kernel_equality = kernel_basis(out.combined) == expected;
    if (out.kernel_equality == out.hypothesis) break;
    if (i + 1 < total) ++out.resamples;
  }
  if (out.hypothesis && !out.kernel_equality) {
    out.notes.push_back("kernel equality failed for all " + std::to_string(total) + " sampled t");
  } else if (out.hypothesis && out.resamples > 0) {
    out.notes.push_back("resampled t " + std::to_string(out.resamples) + " time(s)");
  } else if (!out.hypothesis) {
    out.notes.push_back(out.kernel_equality ? "hypothesis fails; no counterexample among the sampled t"
                                            : "hypothesis fails; kernel strictly larger than ker A ∩ ker B");
  }
  return out;
}

template CombineResult<Fp> generic_combine<Fp>(const Matrix<Fp>&, const Matrix<Fp>&, std::uint64_t, int);
template CombineResult<Rational> generic_combine<Rational>(const Matrix<Rational>&, const Matrix<Rational>&,
                                                           std::uint64_t, int);
template bool perturbation_hypothesis<Fp>(const Matrix<Fp>&, const Matrix<Fp>&);
template bool perturbation_hypothesis<Rational>(const Matrix<Rational>&, const Matrix<Rational>&);

}  // namespace facering
