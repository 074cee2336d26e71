#include "facering/simplicial/geometric.hpp"

#include "facering/simplicial/operators.hpp"

namespace facering {

template <ExactField F>
Matrix<F> coordinate_matrix(const Complex& delta) {
  if (!delta.coords()) throw PreconditionError("complex '" + delta.name() + "' has no coordinates");
  const auto& table = *delta.coords();
  Matrix<F> m(delta.ambient_dim(), delta.universe_size());
  for (std::size_t v = 0; v < table.size(); ++v) {
    for (std::size_t j = 0; j < table[v].size(); ++j) m(j, v) = field_cast<F>(table[v][j]);
  }
  return m;
}

template <ExactField F>
Geometric<F> realize(const Complex& delta, std::size_t ambient, SampleStream& stream) {
  if (delta.coords()) {
    if (delta.ambient_dim() != ambient) {
      throw DimensionError("stored coordinates live in R^" + std::to_string(delta.ambient_dim()) +
                           ", expected R^" + std::to_string(ambient));
    }
    return {delta, coordinate_matrix<F>(delta)};
  }
  Matrix<F> m(ambient, delta.universe_size());
  for (std::size_t v = 0; v < delta.universe_size(); ++v) {
    for (std::size_t j = 0; j < ambient; ++j) m(j, v) = stream.next<F>();
  }
  return {delta, std::move(m)};
}

template <ExactField F>
std::optional<Face> improper_face(const Complex& delta, const Matrix<F>& coords) {
  const std::size_t l = coords.rows();
  for (int k = 0; k <= delta.dim() && static_cast<std::size_t>(k) < l; ++k) {
    for (const auto& face : delta.faces(k)) {
      Matrix<F> cols(face.size(), l);
      for (std::size_t i = 0; i < face.size(); ++i) {
        for (std::size_t j = 0; j < l; ++j) cols(i, j) = coords(j, face[i]);
      }
      if (rank(cols) != face.size()) return face;
    }
  }
  return std::nullopt;
}

template <ExactField F>
void require_proper(const Complex& delta, const Matrix<F>& coords) {
  if (auto bad = improper_face(delta, coords)) {
    throw ImproperCoordinates("improper coordinates: face " + delta.face_to_string(*bad) +
                                  " does not span a subspace of full dimension",
                              *bad);
  }
}

template <ExactField F>
Matrix<F> project_away(const Matrix<F>& coords, const Face& sigma) {
  const std::size_t l = coords.rows();
  Matrix<F> rows(sigma.size(), l);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = 0; j < l; ++j) rows(i, j) = coords(j, sigma[i]);
  }
  // Annihilator of span(σ): functionals w with w · v_s = 0 for all s ∈ σ.
  const Subspace<F> ann = kernel_basis(rows);
  const Matrix<F> w = Matrix<F>::from_rows(ann.basis(), l);
  return w * coords;
}

template <ExactField F>
Geometric<F> geometric_link(const Geometric<F>& g, const Face& sigma) {
  return {link(g.complex.with_coords(std::nullopt), sigma), project_away(g.coords, sigma)};
}

template <ExactField F>
Geometric<F> geometric_cone(const Geometric<F>& g, const std::string& apex, std::span<const F> heights) {
  if (heights.size() != g.complex.universe_size()) throw DimensionError("geometric_cone: one height per vertex");
  const Complex c = cone(g.complex.with_coords(std::nullopt), apex);
  const std::size_t l = g.ambient();
  Matrix<F> m(l + 1, c.universe_size());
  for (std::size_t v = 0; v < g.complex.universe_size(); ++v) {
    for (std::size_t j = 0; j < l; ++j) m(j, v) = g.coords(j, v);
    m(l, v) = heights[v];
  }
  m(l, c.vertex_id(apex)) = F::one();
  return {c, std::move(m)};
}

#define FACERING_INSTANTIATE_GEOMETRIC(F)                                                    \
  template Matrix<F> coordinate_matrix<F>(const Complex&);                                   \
  template Geometric<F> realize<F>(const Complex&, std::size_t, SampleStream&);              \
  template std::optional<Face> improper_face<F>(const Complex&, const Matrix<F>&);           \
  template void require_proper<F>(const Complex&, const Matrix<F>&);                         \
  template Matrix<F> project_away<F>(const Matrix<F>&, const Face&);                         \
  template Geometric<F> geometric_link<F>(const Geometric<F>&, const Face&);                 \
  template Geometric<F> geometric_cone<F>(const Geometric<F>&, const std::string&, std::span<const F>);

FACERING_INSTANTIATE_GEOMETRIC(Fp)
FACERING_INSTANTIATE_GEOMETRIC(Rational)

#undef FACERING_INSTANTIATE_GEOMETRIC

}  // namespace facering
