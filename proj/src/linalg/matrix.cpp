#include "facering/linalg/matrix.hpp"

#include <algorithm>

namespace facering {

template <ExactField F>
Matrix<F> Matrix<F>::from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged row in Matrix::from_rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

template <ExactField F>
Matrix<F> Matrix<F>::from_columns(const std::vector<std::vector<F>>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("ragged column in Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

template <ExactField F>
std::vector<F> Matrix<F>::column(std::size_t c) const {
  std::vector<F> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <ExactField F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

template <ExactField F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw DimensionError("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const F& a = (*this)(r, k);
      if (a.is_zero()) continue;
      rowops::axpy<F>(out.row(r), o.row(k), a);
    }
  }
  return out;
}

template <ExactField F>
Matrix<F> Matrix<F>::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

template <ExactField F>
Matrix<F> Matrix<F>::scaled(const F& c) const {
  Matrix out = *this;
  for (auto& e : out.data_) e *= c;
  return out;
}

template <ExactField F>
std::vector<F> Matrix<F>::apply(std::span<const F> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  std::vector<F> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = rowops::dot<F>(row(r), v);
  return out;
}

template <ExactField F>
bool Matrix<F>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const F& e) { return e.is_zero(); });
}

template <ExactField F>
void RowEchelon<F>::reduce(std::span<F> v) const {
  if (rows_.empty()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero() || row_of_pivot_[c] < 0) continue;
    const auto& row = rows_[static_cast<std::size_t>(row_of_pivot_[c])];
    const F factor = -v[c];
    rowops::axpy<F>(v.subspan(c), std::span<const F>(row).subspan(c), factor);
  }
}

template <ExactField F>
bool RowEchelon<F>::insert(std::vector<F> v) {
  if (v.size() != cols_) throw DimensionError("RowEchelon::insert: wrong vector length");
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](const F& e) { return !e.is_zero(); });
  if (it == v.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  rowops::scale<F>(std::span<F>(v).subspan(pivot), v[pivot].inverse());
  for (auto& row : rows_) {
    if (row[pivot].is_zero()) continue;
    const F factor = -row[pivot];
    rowops::axpy<F>(std::span<F>(row).subspan(pivot), std::span<const F>(v).subspan(pivot), factor);
  }
  row_of_pivot_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  pivot_of_row_.push_back(pivot);
  rows_.push_back(std::move(v));
  return true;
}

template <ExactField F>
std::vector<std::size_t> RowEchelon<F>::pivot_columns() const {
  std::vector<std::size_t> p = pivot_of_row_;
  std::sort(p.begin(), p.end());
  return p;
}

template <ExactField F>
std::vector<std::size_t> RowEchelon<F>::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row_of_pivot_[c] < 0) out.push_back(c);
  }
  return out;
}

template <ExactField F>
std::vector<std::vector<F>> RowEchelon<F>::sorted_rows() const {
  std::vector<std::vector<F>> out;
  out.reserve(rows_.size());
  for (std::size_t c : pivot_columns()) out.push_back(row_for_pivot(c));
  return out;
}

template <ExactField F>
Subspace<F> Subspace<F>::span(std::size_t ambient, const std::vector<std::vector<F>>& vectors) {
  RowEchelon<F> ech(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionError("Subspace::span: vector length differs from ambient");
    ech.insert(v);
  }
  Subspace s(ambient);
  s.basis_ = ech.sorted_rows();
  return s;
}

template <ExactField F>
Subspace<F> Subspace<F>::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    std::vector<F> e(ambient, F::zero());
    e[i] = F::one();
    s.basis_.push_back(std::move(e));
  }
  return s;
}

template <ExactField F>
bool Subspace<F>::contains(std::span<const F> v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
  std::vector<F> w(v.begin(), v.end());
  for (const auto& b : basis_) {
    const auto p = static_cast<std::size_t>(
        std::find_if(b.begin(), b.end(), [](const F& e) { return !e.is_zero(); }) - b.begin());
    if (!w[p].is_zero()) rowops::axpy<F>(w, b, -w[p]);
  }
  return std::all_of(w.begin(), w.end(), [](const F& e) { return e.is_zero(); });
}

template <ExactField F>
Subspace<F> Subspace<F>::operator+(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw DimensionError("subspace sum: ambient mismatch");
  std::vector<std::vector<F>> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(ambient_, all);
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  RowEchelon<F> ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ech.insert(std::vector<F>(m.row(r).begin(), m.row(r).end()));
    if (ech.rank() == m.cols()) break;
  }
  return ech.rank();
}

template <ExactField F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  RowEchelon<F> ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(std::vector<F>(m.row(r).begin(), m.row(r).end()));
  std::vector<std::vector<F>> vectors;
  const auto pivots = ech.pivot_columns();
  for (std::size_t f : ech.free_columns()) {
    std::vector<F> v(m.cols(), F::zero());
    v[f] = F::one();
    for (std::size_t p : pivots) v[p] = -ech.row_for_pivot(p)[f];
    vectors.push_back(std::move(v));
  }
  return Subspace<F>::span(m.cols(), vectors);
}

template <ExactField F>
Subspace<F> image(const Matrix<F>& m) {
  const Matrix<F> t = m.transpose();
  std::vector<std::vector<F>> cols;
  cols.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) cols.emplace_back(t.row(r).begin(), t.row(r).end());
  return Subspace<F>::span(m.rows(), cols);
}

template <ExactField F>
Subspace<F> image_of(const Matrix<F>& m, const Subspace<F>& u) {
  if (u.ambient() != m.cols()) throw DimensionError("image_of: subspace not in the source");
  std::vector<std::vector<F>> images;
  for (const auto& b : u.basis()) images.push_back(m.apply(b));
  return Subspace<F>::span(m.rows(), images);
}

template <ExactField F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient() != v.ambient()) {
    throw DimensionError("subspace_intersect: ambient dimensions " + std::to_string(u.ambient()) +
                         " and " + std::to_string(v.ambient()));
  }
  // Zassenhaus: rows (u | u) and (v | 0); reduced rows with zero left half
  // carry a basis of the intersection in their right half.
  const std::size_t n = u.ambient();
  RowEchelon<F> ech(2 * n);
  for (const auto& b : u.basis()) {
    std::vector<F> row(2 * n, F::zero());
    std::copy(b.begin(), b.end(), row.begin());
    std::copy(b.begin(), b.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    ech.insert(std::move(row));
  }
  for (const auto& b : v.basis()) {
    std::vector<F> row(2 * n, F::zero());
    std::copy(b.begin(), b.end(), row.begin());
    ech.insert(std::move(row));
  }
  std::vector<std::vector<F>> meet;
  for (std::size_t p : ech.pivot_columns()) {
    if (p < n) continue;
    const auto& row = ech.row_for_pivot(p);
    meet.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace<F>::span(n, meet);
}

template <ExactField F>
Matrix<F> basis_columns(const Subspace<F>& u) {
  return Matrix<F>::from_columns(u.basis(), u.ambient());
}

#define FACERING_INSTANTIATE_LINALG(F)                                   \
  template class Matrix<F>;                                              \
  template class RowEchelon<F>;                                          \
  template class Subspace<F>;                                            \
  template std::size_t rank<F>(const Matrix<F>&);                        \
  template Subspace<F> kernel_basis<F>(const Matrix<F>&);                \
  template Subspace<F> image<F>(const Matrix<F>&);                       \
  template Subspace<F> image_of<F>(const Matrix<F>&, const Subspace<F>&); \
  template Subspace<F> subspace_intersect<F>(const Subspace<F>&, const Subspace<F>&); \
  template Matrix<F> basis_columns<F>(const Subspace<F>&);

FACERING_INSTANTIATE_LINALG(Fp)
FACERING_INSTANTIATE_LINALG(Rational)

#undef FACERING_INSTANTIATE_LINALG

}  // namespace facering
