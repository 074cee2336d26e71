#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "facering/field/field.hpp"
#include "facering/simd/kernels.hpp"

namespace facering {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace rowops {

// y += c * x over the whole span.
template <ExactField F>
inline void axpy(std::span<F> y, std::span<const F> x, const F& c) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}
template <ExactField F>
inline void scale(std::span<F> x, const F& c) {
  for (auto& e : x) e *= c;
}
template <ExactField F>
inline F dot(std::span<const F> a, std::span<const F> b) {
  F acc = F::zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

// Fp rows go through the dispatched SIMD kernels; Fp is a bare uint64_t.
inline std::uint64_t* raw(std::span<Fp> s) { return reinterpret_cast<std::uint64_t*>(s.data()); }
inline const std::uint64_t* raw(std::span<const Fp> s) {
  return reinterpret_cast<const std::uint64_t*>(s.data());
}
template <>
inline void axpy<Fp>(std::span<Fp> y, std::span<const Fp> x, const Fp& c) {
  if (c.is_zero()) return;
  simd::active_kernels().axpy(raw(y), raw(x), c.value(), y.size());
}
template <>
inline void scale<Fp>(std::span<Fp> x, const Fp& c) {
  simd::active_kernels().scale(raw(x), c.value(), x.size());
}
template <>
inline Fp dot<Fp>(std::span<const Fp> a, std::span<const Fp> b) {
  return Fp::from_raw(simd::active_kernels().dot(raw(a), raw(b), a.size()));
}

}  // namespace rowops

/// Dense row-major matrix over an exact field. A matrix of a linear map
/// X -> Y has dim Y rows and dim X columns.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<std::vector<F>>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<F> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const F> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<F> column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const F& c) const;
  std::vector<F> apply(std::span<const F> v) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept fully reduced: each row is 1 at its pivot and 0 at every other
/// pivot column, and zero before its pivot. Pivots are the first nonzero entry
/// in plain column order.
template <ExactField F>
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols = 0) : cols_(cols), row_of_pivot_(cols, -1) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Subtracts the unique combination of rows that zeroes every pivot column.
  void reduce(std::span<F> v) const;
  /// Returns true when `v` was independent of the current rows.
  bool insert(std::vector<F> v);

  bool is_pivot(std::size_t col) const { return row_of_pivot_[col] >= 0; }
  const std::vector<F>& row_for_pivot(std::size_t col) const {
    return rows_[static_cast<std::size_t>(row_of_pivot_[col])];
  }
  std::vector<std::size_t> pivot_columns() const;
  std::vector<std::size_t> free_columns() const;
  /// Rows ordered by pivot column.
  std::vector<std::vector<F>> sorted_rows() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

/// Finite-dimensional subspace of F^n stored by its reduced echelon basis, so
/// two equal subspaces always have identical bases.
template <ExactField F>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<std::vector<F>>& basis() const { return basis_; }

  bool contains(std::span<const F> v) const;
  Subspace operator+(const Subspace& o) const;
  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::vector<F>> basis_;
};

template <ExactField F>
std::size_t rank(const Matrix<F>& m);

/// Right null space {v : m v = 0}.
template <ExactField F>
Subspace<F> kernel_basis(const Matrix<F>& m);

/// Column space of m.
template <ExactField F>
Subspace<F> image(const Matrix<F>& m);

/// Image of a subspace of the source under m.
template <ExactField F>
Subspace<F> image_of(const Matrix<F>& m, const Subspace<F>& u);

/// Throws DimensionError on ambient mismatch.
template <ExactField F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& v);

/// Matrix whose columns are the basis vectors of u (ambient x dim).
template <ExactField F>
Matrix<F> basis_columns(const Subspace<F>& u);

}  // namespace facering
