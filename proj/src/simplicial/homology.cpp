#include "facering/simplicial/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "facering/linalg/matrix.hpp"
#include "facering/simplicial/operators.hpp"

namespace facering {
namespace {

// Rank of ∂_k : C_k -> C_{k-1}, k >= 0, with C_{-1} spanned by the empty face.
template <ExactField F>
std::size_t boundary_rank(const Complex& delta, int k) {
  const auto& cells = delta.faces(k);
  const auto& faces = delta.faces(k - 1);
  if (cells.empty() || faces.empty()) return 0;
  std::unordered_map<Face, std::size_t, FaceHash> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
  RowEchelon<F> ech(faces.size());
  for (const auto& cell : cells) {
    std::vector<F> col(faces.size(), F::zero());
    for (std::size_t drop = 0; drop < cell.size(); ++drop) {
      Face f = cell;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      col[index.at(f)] = (drop % 2 == 0) ? F::one() : -F::one();
    }
    ech.insert(std::move(col));
    if (ech.rank() == faces.size()) break;
  }
  return ech.rank();
}

template <ExactField F>
std::vector<std::size_t> betti_impl(const Complex& delta) {
  if (delta.is_void()) return {};
  const int top = delta.dim();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);  // ranks[k+1] = rank ∂_k
  for (int k = 0; k <= top; ++k) ranks[static_cast<std::size_t>(k + 1)] = boundary_rank<F>(delta, k);
  std::vector<std::size_t> betti;
  for (int k = -1; k <= top; ++k) {
    const std::size_t cells = delta.faces(k).size();
    betti.push_back(cells - ranks[static_cast<std::size_t>(k + 1)] - ranks[static_cast<std::size_t>(k + 2)]);
  }
  return betti;
}

// Number of facets containing each ridge.
std::unordered_map<Face, int, FaceHash> ridge_degrees(const Complex& delta) {
  std::unordered_map<Face, int, FaceHash> deg;
  for (const auto& ridge : delta.faces(delta.dim() - 1)) deg.emplace(ridge, 0);
  for (const auto& facet : delta.facets()) {
    for (std::size_t drop = 0; drop < facet.size(); ++drop) {
      Face r = facet;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
      ++deg[r];
    }
  }
  return deg;
}

}  // namespace

std::vector<std::size_t> reduced_betti(const Complex& delta, FieldMode field) {
  return field == FieldMode::Prime ? betti_impl<Fp>(delta) : betti_impl<Rational>(delta);
}

std::vector<std::size_t> reduced_homology(const Complex& delta, FieldMode field) {
  auto b = reduced_betti(delta, field);
  if (b.empty()) return b;
  b.erase(b.begin());
  return b;
}

long euler_characteristic(const Complex& delta) {
  long chi = 0;
  for (int k = 0; k <= delta.dim(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(delta.faces(k).size());
  }
  return chi;
}

bool is_homology_sphere(const Complex& delta) {
  if (delta.is_void() || !delta.is_pure()) return false;
  const int m = delta.dim();
  if (m >= 0) {
    for (const auto& [ridge, count] : ridge_degrees(delta)) {
      if (count != 2) return false;
    }
  }
  const auto b = reduced_betti(delta);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != (i + 1 == b.size() ? 1u : 0u)) return false;
  }
  return true;
}

bool is_homology_ball(const Complex& delta) {
  if (delta.is_void() || !delta.is_pure() || delta.dim() < 0) return false;
  bool has_boundary = false;
  for (const auto& [ridge, count] : ridge_degrees(delta)) {
    if (count < 1 || count > 2) return false;
    has_boundary |= count == 1;
  }
  if (!has_boundary) return false;
  const auto b = reduced_betti(delta);
  if (std::any_of(b.begin(), b.end(), [](std::size_t x) { return x != 0; })) return false;
  const Complex bd = boundary_complex(delta);
  return bd.dim() == delta.dim() - 1 && is_homology_sphere(bd);
}

bool is_homology_manifold(const Complex& delta) {
  if (delta.is_void() || !delta.is_pure()) return false;
  const int m = delta.dim();
  for (Vertex v : delta.vertices()) {
    const Complex lk = link(delta.with_coords(std::nullopt), {v});
    if (lk.dim() != m - 1) return false;
    if (!is_homology_sphere(lk) && !is_homology_ball(lk)) return false;
  }
  return true;
}

}  // namespace facering
