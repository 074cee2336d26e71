#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "facering/artinian/monomial.hpp"
#include "facering/linalg/matrix.hpp"
#include "facering/simplicial/complex.hpp"

namespace facering {

/// Linear form Σ_v c_v x_v, indexed by vertex id over the whole universe.
template <ExactField F>
using LinearForm = std::vector<F>;

/// Sparse polynomial: monomials with coefficients (repeats are summed).
template <ExactField F>
using Polynomial = std::vector<std::pair<Monomial, F>>;

/// A^k(Ψ) = R^k[Ψ] / (Θ R^{k-1}[Ψ]) presented by the monomial basis of R^k[Ψ]
/// and the echelonized relation subspace. Coset representatives are the
/// monomials on the free (non-pivot) columns; class coordinates refer to them.
template <ExactField F>
class GradedPiece {
 public:
  /// `previous` is the monomial basis in degree k-1 (the relations are the
  /// products θ_j m for m in it).
  GradedPiece(const RelativePair& pair, const Matrix<F>& theta, int k, const std::vector<Monomial>& previous);

  const RelativePair& pair() const { return pair_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t relations_rank() const { return relations_.rank(); }
  std::size_t dim() const { return reps_.size(); }
  /// Basis column of each coset representative.
  const std::vector<std::size_t>& coset_reps() const { return reps_; }
  const Monomial& rep_monomial(std::size_t i) const { return basis_[reps_[i]]; }

  /// Column of m in the basis, or nullopt when m is zero in R[Ψ].
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Class coordinates of a vector given in basis coordinates.
  std::vector<F> normal_form(std::vector<F> coeffs) const;
  /// Class coordinates of a polynomial; monomials outside the basis vanish.
  std::vector<F> normal_form(const Polynomial<F>& p) const;
  /// The representative combination Σ c_i rep_i.
  Polynomial<F> lift(std::span<const F> cls) const;

 private:
  RelativePair pair_;
  int degree_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  RowEchelon<F> relations_;
  std::vector<std::size_t> reps_;
};

/// The graded module A*(Ψ) for a fixed coordinate matrix Θ (ambient x
/// universe). Pieces are built on first use and cached; the cache is guarded
/// so concurrent readers are safe. Copies share the cache.
template <ExactField F>
class ArtinianModule {
 public:
  /// Checks properness of Δ first and throws ImproperCoordinates naming the
  /// offending face.
  ArtinianModule(RelativePair pair, Matrix<F> theta);

  const RelativePair& pair() const;
  const Matrix<F>& theta() const;
  std::size_t ambient() const { return theta().rows(); }

  const GradedPiece<F>& piece(int k) const { return *piece_ptr(k); }
  std::shared_ptr<const GradedPiece<F>> piece_ptr(int k) const;
  std::size_t dim(int k) const { return piece(k).dim(); }
  /// dim A^k for k = 0..top.
  std::vector<std::size_t> dims(int top) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// dim A^k(Ψ), k = 0..d, where d = dim Δ + 1 must equal the ambient dimension.
template <ExactField F>
std::vector<std::size_t> artinian_dims(const RelativePair& pair, const Matrix<F>& theta);

/// Matrix (dst.dim x src.dim) of multiplication by ℓ on coset representatives.
/// Requires dst.degree = src.degree + 1, the same Δ, and ℓ·R[src] ⊆ R[dst]
/// (e.g. dst.Γ ⊆ src.Γ, or x_v into (St_v, St_v − v)).
template <ExactField F>
Matrix<F> multiplication_matrix(const LinearForm<F>& ell, const GradedPiece<F>& src, const GradedPiece<F>& dst);

/// Monomial-wise map of equal-degree pieces: m ↦ m when m is in dst's basis,
/// else 0, then reduced. Covers restriction A(Δ) → A(X) and the inclusion
/// A(Δ,∂Δ) → A(Δ).
template <ExactField F>
Matrix<F> restriction_matrix(const GradedPiece<F>& src, const GradedPiece<F>& dst);

enum class InclusionAt { Last, First };

/// ·ℓ^m from A^k(src) to A^{k+m}(dst), composed from single steps. With
/// InclusionAt::Last the powers are taken in src and the monomial-wise map to
/// dst comes last; InclusionAt::First maps to dst in degree k first.
template <ExactField F>
Matrix<F> power_map_matrix(const LinearForm<F>& ell, int k, int m, const ArtinianModule<F>& src,
                           const ArtinianModule<F>& dst, InclusionAt at = InclusionAt::Last);

/// Class of the product of two classes, reduced in `dst`.
template <ExactField F>
std::vector<F> multiply_classes(const GradedPiece<F>& pa, std::span<const F> a, const GradedPiece<F>& pb,
                                std::span<const F> b, const GradedPiece<F>& dst);

/// Functional on the one-dimensional top piece A^d(Δ,∂Δ), normalized to 1 on
/// the last basis monomial (in grevlex order) with a nonzero class.
template <ExactField F>
struct FundamentalClass {
  std::shared_ptr<const GradedPiece<F>> top;
  Monomial normalizer;
  F scale = F::one();  // value = scale * (class coordinate)

  F operator()(std::span<const F> cls) const { return scale * cls[0]; }
  F evaluate(const Polynomial<F>& p) const { return (*this)(top->normal_form(p)); }
};

class PairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws PairingError when dim A^d(Δ,∂Δ) != 1. `relative` must be the module
/// of (Δ, ∂Δ) with d = its ambient dimension.
template <ExactField F>
FundamentalClass<F> fundamental_class(const ArtinianModule<F>& relative);

/// P[i][j] = fc(m_i n_j) over the coset representatives of two pieces whose
/// degrees add up to the top degree.
template <ExactField F>
Matrix<F> pairing_block(const FundamentalClass<F>& fc, const GradedPiece<F>& left, const GradedPiece<F>& right);

/// P[i][j] = fc(m_i n_j) for representatives m_i of A^k(Δ,∂Δ) and n_j of
/// A^{d-k}(Δ).
template <ExactField F>
Matrix<F> pairing_matrix(const ArtinianModule<F>& relative, const ArtinianModule<F>& absolute, int k);

/// Coordinate matrix Θ of a complex (stored coordinates, or samples) as the
/// pair's module. `relative_to_boundary` uses (Δ, ∂Δ).
template <ExactField F>
ArtinianModule<F> module_of(const Complex& delta, const Matrix<F>& theta, bool relative_to_boundary = false);

}  // namespace facering
