#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quotmaps/errors.hpp"
#include "quotmaps/fp.hpp"
#include "quotmaps/rational.hpp"
#include "quotmaps/tpoly.hpp"

namespace quot {

/// Dense row-major matrix over a commutative ring.
template <class R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Rows must be nonempty and of equal length.
  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("from_rows needs a nonempty matrix");
    Matrix m(rows.size(), rows[0].size(), rows[0][0]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DomainError("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const R> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix out(row_idx.size(), col_idx.size(), data_.at(0));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<R> data_;
};

template <class R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows() || a.cols() == 0) throw DomainError("matrix shapes do not chain");
  Matrix<R> out(a.rows(), b.cols(), zero_like(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Row vector times matrix.
template <class R>
std::vector<R> row_times(std::span<const R> v, const Matrix<R>& m) {
  if (v.size() != m.rows() || v.empty()) throw DomainError("vector length does not match matrix rows");
  std::vector<R> out(m.cols(), zero_like(v[0]));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  return out;
}

/// Exact rank. Over Q: fraction-free (Bareiss) elimination on an integer copy.
/// Over F_p: Gaussian elimination. Over Q[t]: Bareiss in Q[t], giving the rank over Q(t).
std::size_t rank(const Matrix<Rational>& m);
std::size_t rank(const Matrix<Fp>& m);
std::size_t rank(const Matrix<TPoly>& m);

Rational determinant(const Matrix<Rational>& m);
Fp determinant(const Matrix<Fp>& m);
TPoly determinant(const Matrix<TPoly>& m);

/// Cofactor expansion; division-free, for rings without exact division (symbolic entries).
template <class R>
R laplace_determinant(const Matrix<R>& m);

/// All r x r minors, row subsets outer and column subsets inner, both colex.
std::vector<Rational> all_minors(const Matrix<Rational>& m, std::size_t r, unsigned jobs = 1);
std::vector<Fp> all_minors(const Matrix<Fp>& m, std::size_t r, unsigned jobs = 1);
std::vector<TPoly> all_minors(const Matrix<TPoly>& m, std::size_t r, unsigned jobs = 1);

template <class R>
std::vector<std::vector<std::string>> serialize(const Matrix<R>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

namespace detail {

template <class R>
R laplace_rec(const Matrix<R>& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row + 1 == m.rows()) return m(row, cols[0]);
  R acc = zero_like(m(0, 0));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const R& entry = m(row, cols[k]);
    if (is_zero(entry)) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + k);
    R minor = laplace_rec(m, cols, row + 1);
    cols.insert(cols.begin() + k, c);
    if (is_zero(minor)) continue;
    if (k % 2 == 0) acc += entry * minor;
    else acc -= entry * minor;
  }
  return acc;
}

}  // namespace detail

template <class R>
R laplace_determinant(const Matrix<R>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DomainError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return detail::laplace_rec(m, cols, 0);
}

}  // namespace quot
