#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cgseries/errors.hpp"

namespace cgs {

// Small dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : r_(rows), c_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * c_, data_.begin() + (i + 1) * c_);
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  // Delete row i and column j.
  Matrix minor_matrix(std::size_t i, std::size_t j) const {
    Matrix out(r_ - 1, c_ - 1);
    for (std::size_t a = 0, oa = 0; a < r_; ++a) {
      if (a == i) continue;
      for (std::size_t b = 0, ob = 0; b < c_; ++b) {
        if (b == j) continue;
        out(oa, ob++) = (*this)(a, b);
      }
      ++oa;
    }
    return out;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) out(a, b) = (*this)(rows[a], cols[b]);
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.c_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& v : m.data_) v = s * v;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> data_;
};

// First (i, j) where a and b differ, or {-1, -1}.
template <class T>
std::pair<int, int> first_difference(const Matrix<T>& a, const Matrix<T>& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return {static_cast<int>(i), static_cast<int>(j)};
  return {-1, -1};
}

// Gauss-Jordan inverse over an exact field; throws SingularMatrix.
template <class T>
Matrix<T> inverse(Matrix<T> a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == T{}) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const T p = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == T{}) continue;
      const T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Determinant by Gaussian elimination over an exact field.
template <class T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == T{}) ++piv;
    if (piv == n) return T{};
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const T p = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == T{}) continue;
      const T f = a(r, col) * p;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace cgs
