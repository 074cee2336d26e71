#include <stdexcept>

#include "facering/artinian/graded_piece.hpp"

namespace facering {
namespace {

// ℓ·R[src] must land in R[dst]: no product x_v m with v ∈ supp ℓ may have its
// support in dst.Γ while m's support is outside src.Γ.
template <ExactField F>
void require_compatible(const LinearForm<F>& ell, const GradedPiece<F>& src, const GradedPiece<F>& dst) {
  if (src.pair().total().labels() != dst.pair().total().labels()) {
    throw PreconditionError("pieces over different vertex universes");
  }
  if (!src.pair().total().same_faces(dst.pair().total())) {
    throw PreconditionError("incompatible pairs: multiplication needs the same Δ");
  }
  const Complex& src_sub = src.pair().sub();
  for (const auto& tau : dst.pair().sub().face_set()) {
    for (Vertex v : tau) {
      if (ell[v].is_zero()) continue;
      if (!src_sub.contains(tau) || !src_sub.contains(face_difference(tau, {v}))) {
        throw PreconditionError("incompatible pairs: products reach face " + src.pair().total().face_to_string(tau) +
                                " of the destination Γ");
      }
    }
  }
}

}  // namespace

template <ExactField F>
Matrix<F> multiplication_matrix(const LinearForm<F>& ell, const GradedPiece<F>& src, const GradedPiece<F>& dst) {
  if (dst.degree() != src.degree() + 1) {
    throw DimensionError("multiplication_matrix: degrees " + std::to_string(src.degree()) + " -> " +
                         std::to_string(dst.degree()));
  }
  if (ell.size() != src.pair().total().universe_size()) throw DimensionError("linear form has wrong length");
  require_compatible(ell, src, dst);
  Matrix<F> out(dst.dim(), src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    const Monomial& m = src.rep_monomial(i);
    Polynomial<F> p;
    for (Vertex v = 0; v < ell.size(); ++v) {
      if (!ell[v].is_zero()) p.emplace_back(multiply(m, v), ell[v]);
    }
    const auto col = dst.normal_form(p);
    for (std::size_t r = 0; r < col.size(); ++r) out(r, i) = col[r];
  }
  return out;
}

template <ExactField F>
Matrix<F> restriction_matrix(const GradedPiece<F>& src, const GradedPiece<F>& dst) {
  if (src.degree() != dst.degree()) throw DimensionError("restriction_matrix: degree mismatch");
  if (src.pair().total().labels() != dst.pair().total().labels()) {
    throw PreconditionError("pieces over different vertex universes");
  }
  Matrix<F> out(dst.dim(), src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    const auto col = dst.normal_form(Polynomial<F>{{src.rep_monomial(i), F::one()}});
    for (std::size_t r = 0; r < col.size(); ++r) out(r, i) = col[r];
  }
  return out;
}

template <ExactField F>
Matrix<F> power_map_matrix(const LinearForm<F>& ell, int k, int m, const ArtinianModule<F>& src,
                           const ArtinianModule<F>& dst, InclusionAt at) {
  if (m < 0) throw std::invalid_argument("power_map_matrix: negative exponent");
  const ArtinianModule<F>& walk = at == InclusionAt::Last ? src : dst;
  Matrix<F> acc = at == InclusionAt::First ? restriction_matrix(src.piece(k), dst.piece(k))
                                           : Matrix<F>::identity(src.dim(k));
  for (int i = 0; i < m; ++i) acc = multiplication_matrix(ell, walk.piece(k + i), walk.piece(k + i + 1)) * acc;
  if (at == InclusionAt::Last) acc = restriction_matrix(src.piece(k + m), dst.piece(k + m)) * acc;
  return acc;
}

template <ExactField F>
std::vector<F> multiply_classes(const GradedPiece<F>& pa, std::span<const F> a, const GradedPiece<F>& pb,
                                std::span<const F> b, const GradedPiece<F>& dst) {
  if (dst.degree() != pa.degree() + pb.degree()) throw DimensionError("multiply_classes: degree mismatch");
  Polynomial<F> prod;
  for (const auto& [ma, ca] : pa.lift(a)) {
    for (const auto& [mb, cb] : pb.lift(b)) prod.emplace_back(multiply(ma, mb), ca * cb);
  }
  return dst.normal_form(prod);
}

template <ExactField F>
FundamentalClass<F> fundamental_class(const ArtinianModule<F>& relative) {
  const int d = static_cast<int>(relative.ambient());
  auto top = relative.piece_ptr(d);
  if (top->dim() != 1) {
    throw PairingError("dim A^" + std::to_string(d) + "(Δ,∂Δ) = " + std::to_string(top->dim()) +
                       ", expected 1: not a homology ball/sphere or degenerate coordinates");
  }
  const auto& basis = top->basis();
  for (std::size_t i = basis.size(); i-- > 0;) {
    const auto cls = top->normal_form(Polynomial<F>{{basis[i], F::one()}});
    if (!cls[0].is_zero()) return FundamentalClass<F>{top, basis[i], cls[0].inverse()};
  }
  throw PairingError("no basis monomial has a nonzero top class");
}

template <ExactField F>
Matrix<F> pairing_block(const FundamentalClass<F>& fc, const GradedPiece<F>& left, const GradedPiece<F>& right) {
  if (left.degree() + right.degree() != fc.top->degree()) throw DimensionError("pairing_block: degrees do not add up");
  Matrix<F> out(left.dim(), right.dim());
  for (std::size_t i = 0; i < left.dim(); ++i) {
    for (std::size_t j = 0; j < right.dim(); ++j) {
      out(i, j) = fc.evaluate({{multiply(left.rep_monomial(i), right.rep_monomial(j)), F::one()}});
    }
  }
  return out;
}

template <ExactField F>
Matrix<F> pairing_matrix(const ArtinianModule<F>& relative, const ArtinianModule<F>& absolute, int k) {
  const int d = static_cast<int>(relative.ambient());
  return pairing_block(fundamental_class(relative), relative.piece(k), absolute.piece(d - k));
}

#define FACERING_INSTANTIATE_MAPS(F)                                                                         \
  template Matrix<F> multiplication_matrix<F>(const LinearForm<F>&, const GradedPiece<F>&,                   \
                                              const GradedPiece<F>&);                                        \
  template Matrix<F> restriction_matrix<F>(const GradedPiece<F>&, const GradedPiece<F>&);                    \
  template Matrix<F> power_map_matrix<F>(const LinearForm<F>&, int, int, const ArtinianModule<F>&,           \
                                         const ArtinianModule<F>&, InclusionAt);                             \
  template std::vector<F> multiply_classes<F>(const GradedPiece<F>&, std::span<const F>,                     \
                                              const GradedPiece<F>&, std::span<const F>,                     \
                                              const GradedPiece<F>&);                                        \
  template FundamentalClass<F> fundamental_class<F>(const ArtinianModule<F>&);                               \
  template Matrix<F> pairing_block<F>(const FundamentalClass<F>&, const GradedPiece<F>&, const GradedPiece<F>&); \
  template Matrix<F> pairing_matrix<F>(const ArtinianModule<F>&, const ArtinianModule<F>&, int);

FACERING_INSTANTIATE_MAPS(Fp)
FACERING_INSTANTIATE_MAPS(Rational)

#undef FACERING_INSTANTIATE_MAPS

}  // namespace facering
