#pragma once

#include <optional>
#include <span>
#include <string>

#include "facering/linalg/matrix.hpp"
#include "facering/linalg/random.hpp"
#include "facering/simplicial/complex.hpp"

namespace facering {

class ImproperCoordinates : public SimplicialError {
 public:
  ImproperCoordinates(std::string what, Face face) : SimplicialError(std::move(what)), face_(std::move(face)) {}
  const Face& face() const { return face_; }

 private:
  Face face_;
};

/// A complex with vertex coordinates over F: an (ambient x universe) matrix
/// whose column v is the position of vertex v. Row j read as a linear form
/// gives θ_j = Σ_v coords(j, v) x_v.
template <ExactField F>
struct Geometric {
  Complex complex;
  Matrix<F> coords;

  std::size_t ambient() const { return coords.rows(); }
};

/// Stored rational coordinates mapped into F (transposed to ambient x universe).
template <ExactField F>
Matrix<F> coordinate_matrix(const Complex& delta);

/// Stored coordinates when present (their length must equal `ambient`),
/// otherwise fresh samples from `stream`.
template <ExactField F>
Geometric<F> realize(const Complex& delta, std::size_t ambient, SampleStream& stream);

/// First face (by dimension, then lexicographically) of size <= ambient whose
/// vertex positions are linearly dependent.
template <ExactField F>
std::optional<Face> improper_face(const Complex& delta, const Matrix<F>& coords);

/// Throws ImproperCoordinates naming the offending face.
template <ExactField F>
void require_proper(const Complex& delta, const Matrix<F>& coords);

/// Coordinates after a linear projection R^l -> R^{l-|σ|} with kernel span(σ).
/// The rows form a basis of the annihilator of span(σ); any other choice
/// spans the same linear forms and hence gives the same Artinian reduction.
template <ExactField F>
Matrix<F> project_away(const Matrix<F>& coords, const Face& sigma);

/// Link with projected coordinates (see project_away).
template <ExactField F>
Geometric<F> geometric_link(const Geometric<F>& g, const Face& sigma);

/// Cone in R^{l+1}: base vertex v moves to (v, heights[v]) and the apex sits at
/// e_{l+1}. `heights` is indexed by the old universe.
template <ExactField F>
Geometric<F> geometric_cone(const Geometric<F>& g, const std::string& apex, std::span<const F> heights);

}  // namespace facering
