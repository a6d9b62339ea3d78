#pragma once

#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bezier_ifs {

/// Dense row-major matrix over a ring S. Sizes of interest are small
/// (degree <= 16), so there is no blocking or sparsity.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, from_int<S>(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int<S>(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Conjugation by the anti-diagonal permutation: (i,j) -> (n-1-i, m-1-j).
  Matrix reflect() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(rows_ - 1 - i, cols_ - 1 - j) = (*this)(i, j);
    return r;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const S&>()))> {
    Matrix<decltype(f(std::declval<const S&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if constexpr (is_exact_v<S>) {
          if (aik == from_int<S>(0)) continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: shapes differ");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Entrywise comparison; exact for exact scalars.
template <class S>
bool matrices_close(const Matrix<S>& a, const Matrix<S>& b, double tol = 0.0) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!scalar_close(a(i, j), b(i, j), tol)) return false;
  return true;
}

/// M * x for a column vector x.
template <class S>
std::vector<S> mul_column(const Matrix<S>& m, std::span<const S> x) {
  if (x.size() != m.cols()) throw DomainError("matrix-vector product: size mismatch");
  std::vector<S> y(m.rows(), from_int<S>(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

/// x * M for a row vector x.
template <class S>
std::vector<S> mul_row(std::span<const S> x, const Matrix<S>& m) {
  if (x.size() != m.rows()) throw DomainError("vector-matrix product: size mismatch");
  std::vector<S> y(m.cols(), from_int<S>(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  return y;
}

/// Inverse by Gauss-Jordan elimination.
///
/// Double path: partial pivoting, pivots below kPivotTolerance are singular.
/// Exact path: a pivot must be a unit of Z[1/2][i]; if no unit pivot exists
/// in a column the inverse may leave the dyadics and NotDyadicError is thrown.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  Matrix<S> a = m;
  Matrix<S> inv = Matrix<S>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = 0.0;
    for (std::size_t r = col; r < n; ++r) {
      if (!invertible(a(r, col))) continue;
      const double mag = magnitude(a(r, col));
      if (piv == n || mag > best) {
        piv = r;
        best = mag;
      }
    }
    if (piv == n) {
      if constexpr (is_exact_v<S>) {
        for (std::size_t r = col; r < n; ++r) {
          if (!scalar_is_zero(a(r, col))) {
            throw NotDyadicError("exact inverse leaves Z[1/2][i] at column " + std::to_string(col));
          }
        }
      }
      throw ConstructionError("singular matrix: no pivot in column " + std::to_string(col));
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const S r = reciprocal(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * r;
      inv(col, j) = inv(col, j) * r;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const S f = a(row, col);
      if (scalar_is_zero(f)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(row, j) -= f * a(col, j);
        inv(row, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace bezier_ifs
