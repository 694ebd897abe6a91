// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_MATRIX_HPP
#define GARSIDE_MATRIX_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "garside/integer.hpp"
#include "garside/polynomial.hpp"

namespace garside {

// Dense matrix over Z, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Integer(0)) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Integer& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) {
    return !(a == b);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: shape");
    IntMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Integer& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  std::vector<Integer> apply(const std::vector<Integer>& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matvec: shape");
    std::vector<Integer> r(rows_, Integer(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

inline Integer dot(const std::vector<Integer>& a,
                   const std::vector<Integer>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: shape");
  Integer r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

// Characteristic polynomial det(x*I - A) by the Berkowitz vector recursion.
// Division free, so every intermediate value stays in Z.
inline IntPolynomial charpoly(const IntMatrix& A) {
  const int n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("charpoly: square required");
  if (n == 0) return IntPolynomial::constant(1);

  // Coefficient vector of the charpoly of the leading r x r block, stored
  // descending: c[0] x^r + c[1] x^(r-1) + ... + c[r].
  std::vector<Integer> c{Integer(1), -A.at(0, 0)};

  for (int r = 1; r < n; ++r) {
    // Toeplitz column for the (r+1) x (r+1) block: t[0] = 1, t[1] = -a,
    // t[k+2] = -(R M^k S) where a = A[r][r], R = row A[r][0..r-1],
    // S = col A[0..r-1][r], M = leading r x r block.
    std::vector<Integer> t(r + 2);
    t[0] = 1;
    t[1] = -A.at(r, r);
    std::vector<Integer> v(r);  // M^k S
    for (int i = 0; i < r; ++i) v[i] = A.at(i, r);
    for (int k = 0; k + 2 <= r + 1; ++k) {
      Integer s = 0;
      for (int i = 0; i < r; ++i) s += A.at(r, i) * v[i];
      t[k + 2] = -s;
      if (k + 3 <= r + 1) {
        std::vector<Integer> w(r, Integer(0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (A.at(i, j) != 0) w[i] += A.at(i, j) * v[j];
        v = std::move(w);
      }
    }
    // c_new = t (*) c, lower-triangular Toeplitz times vector.
    std::vector<Integer> nc(r + 2, Integer(0));
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min<int>(i, r); ++j) nc[i] += t[i - j] * c[j];
    c = std::move(nc);
  }

  std::vector<Integer> asc(c.rbegin(), c.rend());
  return IntPolynomial(std::move(asc));
}

// Determinant by fraction-free Gaussian elimination (Bareiss).
inline Integer determinant(IntMatrix A) {
  const int n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("determinant: square");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer v = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        A.at(i, j) = v / prev;  // exact by Bareiss
      }
    prev = A.at(k, k);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : -A.at(n - 1, n - 1);
}

// Exact rank over Q (entries in Z), by fraction-free elimination.
inline int matrix_rank_exact(IntMatrix A) {
  const int m = A.rows(), n = A.cols();
  int rank = 0;
  Integer prev = 1;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (A.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < n; ++j) std::swap(A.at(row, j), A.at(p, j));
    for (int i = row + 1; i < m; ++i)
      for (int j = col + 1; j < n; ++j) {
        Integer v = A.at(i, j) * A.at(row, col) - A.at(i, col) * A.at(row, j);
        A.at(i, j) = v / prev;
      }
    for (int i = row + 1; i < m; ++i) A.at(i, col) = 0;
    prev = A.at(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace garside

#endif  // GARSIDE_MATRIX_HPP
