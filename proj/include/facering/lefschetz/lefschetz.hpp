#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facering/artinian/graded_piece.hpp"
#include "facering/lefschetz/verdict.hpp"
#include "facering/simplicial/complex.hpp"

namespace facering {

// Every checker follows the same genericity protocol. Trial t uses the seed
// derive_seed(options.seed, t): it realizes the complex (stored coordinates
// if present, otherwise samples) and, where needed, samples ℓ. The first
// successful trial returns HOLDS with a replayable witness; LIKELY_FAILS only
// after options.trials failures. Precondition failures are ERROR.

/// ·ℓ : A^i → A^{i+1} injective for all i <= d/2 - 1. Homology sphere required
/// in strict mode.
Verdict check_weak_lefschetz(const Complex& delta, const CheckOptions& options = {});

/// ·ℓ^{d-2k} : A^k(Δ,∂Δ) → A^{d-k}(Δ) bijective for every k <= d/2, computed
/// with the inclusion applied last; the other factoring order is computed too
/// and any disagreement is an ERROR.
Verdict check_hard_lefschetz(const Complex& delta, const CheckOptions& options = {});

/// Recomputes the hard Lefschetz records of one trial seed.
std::vector<DegreeRecord> replay_hard_lefschetz(const Complex& delta, FieldMode mode, std::uint64_t trial_seed);

/// The Gräbe pairing A^k(Δ,∂Δ) x A^{d-k}(Δ) → A^d(Δ,∂Δ) ≅ R is perfect in every
/// degree 0..d (Δ a homology sphere or ball).
Verdict check_graebe_pairing(const Complex& delta, const CheckOptions& options = {});

/// A^k(Δ,∂Δ) → A^k(Δ) injective for k <= d/2 (Δ a homology ball). Also
/// computes the rank of the pairing A^k(Δ,∂Δ) x A^{d-k}(Δ,∂Δ) → R; the two
/// ranks coincide by Gräbe duality and a mismatch is an ERROR.
/// `only_degree` restricts to one k.
Verdict check_biased_pairing(const Complex& delta, const CheckOptions& options = {},
                             std::optional<int> only_degree = std::nullopt);

/// The Poincaré pairing of the sphere Σ restricted to I^k x I^{d-k}, where
/// I = ker[A(Σ) → A(X)], has rank dim I^k, for each requested k <= d/2 (all
/// such k by default).
Verdict check_biased_poincare(const Complex& sigma, const Complex& x, const CheckOptions& options = {},
                              std::optional<int> only_degree = std::nullopt);

/// ker ·ℓ' = ∩_{v∈W} ker ·x_v on A^k(Δ) → A^{k+1}(Δ), ℓ' a generic
/// combination of the x_v, v ∈ W. Degrees k < d/2 by default.
Verdict check_transversal_prime(const Complex& delta, const std::vector<Vertex>& w, const CheckOptions& options = {},
                                std::optional<int> only_degree = std::nullopt);

/// Cone lemma I (dim A^k(Lk_v Δ) = dim A^k(St_v Δ), all k) and cone lemma II
/// (·x_v : A^k(St_v Δ) → A^{k+1}(St_v Δ, St_v Δ − v) bijective, all k).
Verdict cone_lemma_check(const Complex& delta, Vertex v, const CheckOptions& options = {});

/// For each k < d/2: rank of ·θ^{d-2k} : A^k(Δ,∂Δ) → A^{d-k}(Δ) equals rank of
/// ·x_n^{d-2k-1} : A^{k+1}(cone Δ, ∂ cone Δ) → A^{d-k}(cone Δ), where the cone
/// sits in R^{d+1} with generic heights h, apex e_{d+1}, and θ = h·x.
Verdict middle_reduction_check(const Complex& delta, const CheckOptions& options = {});

/// Biased pairing verdicts (per degree k, or all k <= d/2) agree before and
/// after a stellar subdivision at the interior face σ (dim σ >= 1).
Verdict stellar_invariance_check(const Complex& delta, const Face& sigma, const CheckOptions& options = {},
                                 std::optional<int> only_degree = std::nullopt);

/// For a sphere and each k <= d/2: ker ·ℓ^{d-2k} and im ·ℓ^{d-2k} are orthogonal
/// complements under the Poincaré pairing (dim ker + dim im = dim A^k and the
/// pairing block between them vanishes). `vertex_ell` uses ℓ = x_v instead of
/// a generic form, which makes the kernel nontrivial.
struct OrthogonalityReport {
  bool ok = true;
  std::vector<std::string> failures;
};
OrthogonalityReport orthogonality_check(const Complex& sphere, const CheckOptions& options = {},
                                        std::optional<Vertex> vertex_ell = std::nullopt);

/// Hard Lefschetz with deliberately degenerate coordinates: the vertices in
/// `triple` are placed in a common hyperplane through the origin (the third is
/// a combination of the first two). Reported as an observation only.
Verdict observe_degenerate_lefschetz(const Complex& delta, const std::vector<Vertex>& triple,
                                     const CheckOptions& options = {});

/// Interior faces (not in ∂Δ) of dimension >= 1.
std::vector<Face> interior_faces(const Complex& delta);

}  // namespace facering
