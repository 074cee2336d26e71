#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facering/simplicial/complex.hpp"

namespace facering {

/// Faces τ with τ ∪ σ ∈ Δ. Throws FaceNotFound if σ ∉ Δ.
Complex star(const Complex& delta, const Face& sigma);

/// {τ \ σ : σ ⊆ τ ∈ Δ}. When Δ carries coordinates, the link gets the
/// coordinates of a linear projection whose kernel is span(σ).
Complex link(const Complex& delta, const Face& sigma);

/// Maximal subcomplex avoiding σ. σ = ∅ gives the void complex.
Complex deletion(const Complex& delta, const Face& sigma);

/// (St_σ Δ, St_σ Δ − σ).
RelativePair star_pair(const Complex& delta, const Face& sigma);

/// Faces lying in both complexes (same universe required).
Complex intersection(const Complex& a, const Complex& b);
Complex complex_union(const Complex& a, const Complex& b);

/// A label not yet in the universe, derived from `base`.
std::string fresh_label(const Complex& delta, const std::string& base);

/// Facets F ∪ {apex}. With coordinates in R^l, the base moves to (v, 0) and
/// the apex defaults to e_{l+1}. Throws PreconditionError on a label clash.
Complex cone(const Complex& delta, const std::string& apex,
             std::optional<std::vector<Rational>> apex_coords = std::nullopt);

/// Two cones glued along Δ; apexes at ±e_{l+1} when coordinates are present.
Complex suspension(const Complex& delta, const std::string& north, const std::string& south);

/// Generated by the ridges lying in exactly one facet. Throws
/// PreconditionError for non-pure input.
Complex boundary_complex(const Complex& delta);

/// All faces of dimension <= k.
Complex skeleton(const Complex& delta, int k);

/// Two copies of a ball glued along the boundary; interior vertices get a
/// primed twin. Throws PreconditionError when the boundary is empty, the
/// input is not a homology ball, or the copies would share a facet.
Complex double_ball(const Complex& delta);

/// Lk u ∩ Lk v = Lk uv. On failure `violation` receives a minimal face of
/// (Lk u ∩ Lk v) \ Lk uv.
bool link_condition(const Complex& delta, Vertex u, Vertex v, Face* violation = nullptr);

struct ContractionResult {
  std::optional<Complex> complex;
  /// Set when the link condition fails.
  std::optional<Face> violation;
  bool ok() const { return complex.has_value(); }
};

/// Identifies the larger endpoint id into the smaller one. Refuses when the
/// link condition fails. With coordinates, the merged vertex sits at a generic
/// combination of the endpoints drawn from `seed`.
ContractionResult contract_edge(const Complex& delta, const Face& edge, std::uint64_t seed = 0);

/// Stellar subdivision at σ with a new vertex `label`. With coordinates the new
/// vertex is a generic combination of σ's vertices. Throws PreconditionError
/// for dim σ < 1 or σ ∉ Δ.
Complex stellar_subdivision(const Complex& delta, const Face& sigma, const std::string& label,
                            std::uint64_t seed = 0);

/// Drops unused labels (and their coordinate rows), keeping label order.
Complex compact(const Complex& delta);

}  // namespace facering
