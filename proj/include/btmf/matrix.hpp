#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "btmf/field.hpp"
#include "btmf/poly.hpp"

namespace btmf {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using FqMatrix = Matrix<FiniteField::Elem>;
using PolyMatrix = Matrix<FqPoly>;
using LaurentMatrix = Matrix<FqLaurent>;

// Product over a commutative ring whose zero is `zero`.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  return c;
}

// Laplace expansion; intended for r <= 6.
template <class T>
T determinant(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T det = zero;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == zero) continue;
    Matrix<T> minor(n - 1, n - 1, zero);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    T term = m(0, j) * determinant(minor, zero, one);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// adj(m) with m * adj(m) = det(m) * I.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n, zero);
  if (n == 1) {
    adj(0, 0) = one;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<T> minor(n - 1, n - 1, zero);
      for (std::size_t a = 0, aa = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, bb = 0; b < n; ++b) {
          if (b == j) continue;
          minor(aa, bb++) = m(a, b);
        }
        ++aa;
      }
      T c = determinant(minor, zero, one);
      adj(j, i) = ((i + j) % 2 == 0) ? c : zero - c;
    }
  return adj;
}

// ---- linear algebra over a finite field ----
std::size_t rank(const FiniteField& F, FqMatrix m);
FiniteField::Elem determinant(const FiniteField& F, FqMatrix m);
// nonzero c with m * c = 0, if any
std::optional<std::vector<FiniteField::Elem>> kernel_vector(const FiniteField& F, FqMatrix m);

PolyMatrix identity_poly(const FiniteField& F, std::size_t n);
LaurentMatrix to_laurent(const PolyMatrix& m);

}  // namespace btmf
