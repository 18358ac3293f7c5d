#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hyplat/errors.hpp"

namespace hyplat {

/// Dense matrix over an exact scalar type. Scalars must provide +,-,*,
/// unary -, == and is_zero(); division is required only by the solvers.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  auto operator<=>(const Matrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (auto c = data_[i] <=> o.data_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out(i, j) += a * o(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix map(const std::function<T(const T&)>& f) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = f(x);
    return out;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (i == j) {
          if (!(x - x.one_like()).is_zero()) return false;
        } else if (!x.is_zero()) {
          return false;
        }
      }
    return true;
  }

  Matrix submatrix(const std::vector<std::size_t>& ri,
                   const std::vector<std::size_t>& ci) const {
    Matrix out(ri.size(), ci.size(), zero_like());
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j)
        out(i, j) = (*this)(ri[i], ci[j]);
    return out;
  }

  T zero_like() const {
    if (!data_.empty()) return data_[0].zero_like();
    throw InternalError("zero_like on empty matrix");
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;

  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InternalError("matrix shape mismatch");
  }
};

/// Row-reduce in place over a commutative field (entries need operator/).
/// Returns the pivot columns. Reductions run left to right, producing a
/// reduced row echelon form.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    T inv_pivot = m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) / inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {x : m x = 0}, as columns of the result.
template <class T>
Matrix<T> nullspace(Matrix<T> m) {
  const T zero = m.zero_like();
  const T one = zero.one_like();
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> out(m.cols(), free_cols.size(), zero);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    out(fc, k) = one;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out(pivots[r], k) = -m(r, fc);
  }
  return out;
}

/// Solve a X = b for X (a square and invertible); throws DomainError if
/// singular.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw InternalError("solve: shape mismatch");
  std::size_t n = a.rows(), w = b.cols();
  Matrix<T> aug(n, n + w, a.zero_like());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < w; ++j) aug(i, n + j) = b(i, j);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] >= n)
    throw DomainError("matrix is singular");
  Matrix<T> x(n, w, a.zero_like());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < w; ++j) x(i, j) = aug(i, n + j);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows(), a.zero_like(),
                                      a.zero_like().one_like()));
}

}  // namespace hyplat
