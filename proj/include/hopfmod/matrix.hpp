// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfmod/poly.hpp"
#include "hopfmod/rational.hpp"

namespace hopfmod {

// Dense row-major matrix over one scalar kind.
template <class T>
class Matrix {
 public:
  Matrix() : zero_(zero_like(T{})) {}
  Matrix(size_t r, size_t c, const T& like) : r_(r), c_(c), zero_(zero_like(like)), e_(r * c, zero_) {}
  Matrix(size_t r, size_t c) : Matrix(r, c, T{}) {}

  static Matrix identity(size_t n, const T& like) {
    Matrix m(n, n, like);
    for (size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& like) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c, like);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw MathError("ragged matrix rows");
      for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const T& zero() const { return zero_; }
  T& operator()(size_t i, size_t j) { return e_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return e_[i * c_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw MathError("matrix shape mismatch in product");
    Matrix m(r_, o.c_, zero_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (size_t j = 0; j < o.c_; ++j) m(i, j) = m(i, j) + a * o(k, j);
      }
    return m;
  }
  Matrix operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix shape mismatch in sum");
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix shape mismatch in difference");
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
  }
  Matrix scale(const T& a) const {
    Matrix m = *this;
    for (auto& x : m.e_) x = x * a;
    return m;
  }
  Matrix transpose() const {
    Matrix m(c_, r_, zero_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  bool operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (!(e_[i] == o.e_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Matrix m(nr, nc, zero_);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  std::vector<T> column(size_t j) const {
    std::vector<T> v;
    for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<T> row(size_t i) const { return std::vector<T>(e_.begin() + i * c_, e_.begin() + (i + 1) * c_); }

  template <class U, class F>
  Matrix<U> map(F f, const U& like) const {
    Matrix<U> m(r_, c_, like);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  size_t r_ = 0, c_ = 0;
  T zero_;
  std::vector<T> e_;
};

using QMatrix = Matrix<Rational>;

QMatrix qmatrix(const std::vector<std::vector<long>>& rows);
QMatrix qmatrix_from_strings(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> to_strings(const QMatrix& m);

// Fraction-free Bareiss elimination after clearing row denominators.
Rational det_bareiss(const QMatrix& m);
QMatrix inverse(const QMatrix& m);
// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
QPoly charpoly(const QMatrix& a);
bool all_p_integral(const QMatrix& m, unsigned long p);
long min_valuation(const QMatrix& m, unsigned long p);

// Laplace expansion along rows with memoization over column subsets; valid over
// any commutative ring, O(n 2^n) ring operations.
template <class T>
T det_expansion(const Matrix<T>& m) {
  size_t n = m.rows();
  if (n != m.cols()) throw MathError("determinant of non-square matrix");
  if (n == 0) return one_like(m.zero());
  if (n > 20) throw MathError("matrix too large for cofactor expansion");
  // f[S] = det of the submatrix with rows n-|S|.. and column set S.
  std::vector<T> f(size_t(1) << n, m.zero());
  f[0] = one_like(m.zero());
  for (size_t s = 1; s < f.size(); ++s) {
    size_t k = static_cast<size_t>(__builtin_popcountll(s));
    size_t row = n - k;
    T acc = m.zero();
    int sign_pos = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      const T& a = m(row, j);
      if (!is_zero(a) && !is_zero(f[s & ~(size_t(1) << j)])) {
        T term = a * f[s & ~(size_t(1) << j)];
        if (sign_pos % 2 == 0)
          acc = acc + term;
        else
          acc = acc - term;
      }
      ++sign_pos;
    }
    f[s] = acc;
  }
  return f.back();
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

}  // namespace hopfmod
