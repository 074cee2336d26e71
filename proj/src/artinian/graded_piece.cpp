#include "facering/artinian/graded_piece.hpp"

#include <map>
#include <mutex>

#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/operators.hpp"

namespace facering {

template <ExactField F>
GradedPiece<F>::GradedPiece(const RelativePair& pair, const Matrix<F>& theta, int k,
                            const std::vector<Monomial>& previous)
    : pair_(pair), degree_(k), basis_(monomial_basis(pair, k)), relations_(basis_.size()) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  const std::size_t cols = basis_.size();
  const std::vector<Vertex> used = pair.total().vertices();
  for (const auto& m : previous) {
    if (relations_.rank() == cols) break;
    // x_u m for each vertex, looked up once and reused for every θ_j.
    std::vector<std::pair<std::size_t, Vertex>> targets;
    for (Vertex u : used) {
      if (auto idx = index_of(multiply(m, u))) targets.emplace_back(*idx, u);
    }
    if (targets.empty()) continue;
    for (std::size_t j = 0; j < theta.rows(); ++j) {
      std::vector<F> row(cols, F::zero());
      bool any = false;
      for (const auto& [idx, u] : targets) {
        const F& c = theta(j, u);
        if (c.is_zero()) continue;
        row[idx] += c;
        any = true;
      }
      if (any) relations_.insert(std::move(row));
      if (relations_.rank() == cols) break;
    }
  }
  reps_ = relations_.free_columns();
}

template <ExactField F>
std::optional<std::size_t> GradedPiece<F>::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <ExactField F>
std::vector<F> GradedPiece<F>::normal_form(std::vector<F> coeffs) const {
  if (coeffs.size() != basis_.size()) throw DimensionError("normal_form: wrong coefficient count");
  relations_.reduce(coeffs);
  std::vector<F> out;
  out.reserve(reps_.size());
  for (std::size_t c : reps_) out.push_back(coeffs[c]);
  return out;
}

template <ExactField F>
std::vector<F> GradedPiece<F>::normal_form(const Polynomial<F>& p) const {
  std::vector<F> coeffs(basis_.size(), F::zero());
  for (const auto& [m, c] : p) {
    if (auto idx = index_of(m)) coeffs[*idx] += c;
  }
  return normal_form(std::move(coeffs));
}

template <ExactField F>
Polynomial<F> GradedPiece<F>::lift(std::span<const F> cls) const {
  if (cls.size() != reps_.size()) throw DimensionError("lift: wrong class dimension");
  Polynomial<F> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (!cls[i].is_zero()) out.emplace_back(basis_[reps_[i]], cls[i]);
  }
  return out;
}

template <ExactField F>
struct ArtinianModule<F>::State {
  State(RelativePair p, Matrix<F> t) : pair(std::move(p)), theta(std::move(t)) {}
  RelativePair pair;
  Matrix<F> theta;
  std::mutex mutex;
  std::map<int, std::shared_ptr<const GradedPiece<F>>> pieces;
  std::map<int, std::vector<Monomial>> bases;
};

template <ExactField F>
ArtinianModule<F>::ArtinianModule(RelativePair pair, Matrix<F> theta) {
  if (theta.cols() != pair.total().universe_size()) {
    throw DimensionError("coordinate matrix has " + std::to_string(theta.cols()) + " columns for " +
                         std::to_string(pair.total().universe_size()) + " vertices");
  }
  require_proper(pair.total(), theta);
  state_ = std::make_shared<State>(std::move(pair), std::move(theta));
}

template <ExactField F>
const RelativePair& ArtinianModule<F>::pair() const {
  return state_->pair;
}

template <ExactField F>
const Matrix<F>& ArtinianModule<F>::theta() const {
  return state_->theta;
}

template <ExactField F>
std::shared_ptr<const GradedPiece<F>> ArtinianModule<F>::piece_ptr(int k) const {
  std::lock_guard lock(state_->mutex);
  auto it = state_->pieces.find(k);
  if (it != state_->pieces.end()) return it->second;
  auto prev = state_->bases.find(k - 1);
  if (prev == state_->bases.end()) {
    prev = state_->bases.emplace(k - 1, monomial_basis(state_->pair, k - 1)).first;
  }
  auto piece = std::make_shared<const GradedPiece<F>>(state_->pair, state_->theta, k, prev->second);
  state_->bases.emplace(k, piece->basis());
  state_->pieces.emplace(k, piece);
  return piece;
}

template <ExactField F>
std::vector<std::size_t> ArtinianModule<F>::dims(int top) const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) out.push_back(dim(k));
  return out;
}

template <ExactField F>
std::vector<std::size_t> artinian_dims(const RelativePair& pair, const Matrix<F>& theta) {
  const int d = pair.total().dim() + 1;
  if (theta.rows() != static_cast<std::size_t>(d)) {
    throw DimensionError("ambient dimension " + std::to_string(theta.rows()) + " does not match d = " +
                         std::to_string(d));
  }
  return ArtinianModule<F>(pair, theta).dims(d);
}

template <ExactField F>
ArtinianModule<F> module_of(const Complex& delta, const Matrix<F>& theta, bool relative_to_boundary) {
  if (!relative_to_boundary) return ArtinianModule<F>(RelativePair::absolute(delta), theta);
  return ArtinianModule<F>(RelativePair(delta, boundary_complex(delta)), theta);
}

#define FACERING_INSTANTIATE_PIECE(F)                                                               \
  template class GradedPiece<F>;                                                                    \
  template class ArtinianModule<F>;                                                                 \
  template std::vector<std::size_t> artinian_dims<F>(const RelativePair&, const Matrix<F>&);        \
  template ArtinianModule<F> module_of<F>(const Complex&, const Matrix<F>&, bool);

FACERING_INSTANTIATE_PIECE(Fp)
FACERING_INSTANTIATE_PIECE(Rational)

#undef FACERING_INSTANTIATE_PIECE

}  // namespace facering
