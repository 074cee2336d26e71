#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "facering/artinian/graded_piece.hpp"
#include "facering/lefschetz/verdict.hpp"
#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/operators.hpp"

namespace facering::detail {

struct TrialOutcome {
  std::vector<DegreeRecord> degrees;
  std::vector<std::string> ell;
  std::vector<std::string> notes;
};

// Runs trials until one has every record ok. Improper sampled coordinates fail
// only their trial; improper stored ones and any other exception are ERROR.
Verdict run_trials(const std::string& check, const CheckOptions& options, bool stored_coords,
                   const std::function<TrialOutcome(std::uint64_t)>& trial);

inline int top_degree(const Complex& delta) { return delta.dim() + 1; }

template <ExactField F>
std::vector<std::string> render(const LinearForm<F>& ell) {
  std::vector<std::string> out;
  out.reserve(ell.size());
  for (const auto& c : ell) out.push_back(c.to_string());
  return out;
}

template <ExactField F>
Matrix<F> coords_for(const Complex& delta, SampleStream& stream) {
  auto g = realize<F>(delta, static_cast<std::size_t>(top_degree(delta)), stream);
  require_proper(delta, g.coords);
  return std::move(g.coords);
}

// The relative module shares the absolute one when ∂Δ is void.
template <ExactField F>
struct Modules {
  ArtinianModule<F> abs;
  ArtinianModule<F> rel;
};

template <ExactField F>
Modules<F> modules_for(const Complex& delta, const Matrix<F>& theta) {
  ArtinianModule<F> abs = module_of(delta, theta, false);
  if (boundary_complex(delta).is_void()) return {abs, abs};
  return {abs, module_of(delta, theta, true)};
}

inline std::vector<int> degrees_upto(int hi, std::optional<int> only) {
  if (only) {
    if (*only < 0 || *only > hi) {
      throw PreconditionError("degree " + std::to_string(*only) + " out of range 0.." + std::to_string(hi));
    }
    return {*only};
  }
  std::vector<int> ks;
  for (int k = 0; k <= hi; ++k) ks.push_back(k);
  return ks;
}

inline std::string power_label(int k, int m, const std::string& src, const std::string& dst) {
  return "A^" + std::to_string(k) + src + " -> A^" + std::to_string(k + m) + dst + " by ℓ^" + std::to_string(m);
}

template <class Fn>
auto dispatch(FieldMode mode, Fn&& fn) {
  if (mode == FieldMode::Prime) return fn(Fp::zero());
  return fn(Rational::zero());
}

// Both routes to the biased pairing property, per degree; they must agree.
template <ExactField F>
std::vector<DegreeRecord> biased_records(const Complex& delta, const Matrix<F>& theta, const std::vector<int>& ks) {
  const Modules<F> m = modules_for(delta, theta);
  const FundamentalClass<F> fc = fundamental_class(m.rel);
  const int d = top_degree(delta);
  std::vector<DegreeRecord> out;
  for (int k : ks) {
    const std::size_t inj = rank(restriction_matrix(m.rel.piece(k), m.abs.piece(k)));
    const std::size_t pair = rank(pairing_block(fc, m.rel.piece(k), m.rel.piece(d - k)));
    if (inj != pair) {
      throw std::logic_error("biased pairing: injectivity rank " + std::to_string(inj) + " and pairing rank " +
                             std::to_string(pair) + " disagree in degree " + std::to_string(k));
    }
    const std::size_t dim = m.rel.dim(k);
    out.push_back({k, inj, dim, m.abs.dim(k), "A^" + std::to_string(k) + "(Δ,∂Δ) -> A^" + std::to_string(k) + "(Δ)",
                   inj == dim});
    out.push_back({k, pair, dim, m.rel.dim(d - k),
                   "A^" + std::to_string(k) + "(Δ,∂Δ) x A^" + std::to_string(d - k) + "(Δ,∂Δ) -> R", pair == dim});
  }
  return out;
}

// Any exception escaping `body` becomes an ERROR verdict.
template <class Body>
Verdict guarded(const std::string& check, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return Verdict::error(check, e.what());
  }
}

}  // namespace facering::detail
