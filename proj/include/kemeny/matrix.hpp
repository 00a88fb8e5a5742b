#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kemeny/numeric.hpp"

namespace kemeny {

// Minimal dense row-major matrix shared by the float and the exact rational
// paths. Only the operations the walk computations need.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  T* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }
  const T* row(int i) const { return data_.data() + static_cast<size_t>(i) * cols_; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix operator*(const T& s) const {
    Matrix out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& x) const {
    std::vector<T> y(rows_, T(0));
    for (int i = 0; i < rows_; ++i) {
      const T* r = row(i);
      T acc(0);
      for (int j = 0; j < cols_; ++j) acc += r[j] * x[j];
      y[i] = std::move(acc);
    }
    return y;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

// Pivot choice: largest magnitude for floating point, first nonzero for
// exact rationals (any nonzero pivot is exact; magnitude scans cost gcd work).
template <typename T>
int find_pivot(const Matrix<T>& a, int col, int from_row) {
  if constexpr (is_exact_v<T>) {
    for (int i = from_row; i < a.rows(); ++i)
      if (a(i, col) != 0) return i;
    return -1;
  } else {
    int best = -1;
    T best_abs(0);
    for (int i = from_row; i < a.rows(); ++i) {
      T v = scalar_abs(a(i, col));
      if (v > best_abs) {
        best_abs = v;
        best = i;
      }
    }
    return best;
  }
}

template <typename T>
void swap_rows(Matrix<T>& a, int i, int j) {
  if (i == j) return;
  T* ri = a.row(i);
  T* rj = a.row(j);
  for (int c = 0; c < a.cols(); ++c) std::swap(ri[c], rj[c]);
}

}  // namespace detail

// Gauss-Jordan inverse. Throws on singular input.
template <typename T>
Matrix<T> inverse(Matrix<T> a) {
  if (a.rows() != a.cols()) throw std::logic_error("inverse: matrix not square");
  const int n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = detail::find_pivot(a, k, k);
    if (p < 0 || a(p, k) == T(0)) throw std::runtime_error("inverse: singular matrix");
    detail::swap_rows(a, k, p);
    detail::swap_rows(inv, k, p);
    T piv = a(k, k);
    T* ak = a.row(k);
    T* ik = inv.row(k);
    for (int j = 0; j < n; ++j) {
      ak[j] /= piv;
      ik[j] /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      T f = a(i, k);
      if (f == T(0)) continue;
      T* ai = a.row(i);
      T* ii = inv.row(i);
      for (int j = 0; j < n; ++j) {
        ai[j] -= f * ak[j];
        ii[j] -= f * ik[j];
      }
    }
  }
  return inv;
}

// Solves a x = b by elimination on a working copy.
template <typename T>
std::vector<T> solve(Matrix<T> a, std::vector<T> b) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
    throw std::logic_error("solve: shape mismatch");
  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    int p = detail::find_pivot(a, k, k);
    if (p < 0 || a(p, k) == T(0)) throw std::runtime_error("solve: singular matrix");
    detail::swap_rows(a, k, p);
    std::swap(b[k], b[p]);
    T* ak = a.row(k);
    for (int i = k + 1; i < n; ++i) {
      T f = a(i, k) / ak[k];
      if (f == T(0)) continue;
      T* ai = a.row(i);
      for (int j = k; j < n; ++j) ai[j] -= f * ak[j];
      b[i] -= f * b[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    T acc = b[i];
    const T* ai = a.row(i);
    for (int j = i + 1; j < n; ++j) acc -= ai[j] * b[j];
    b[i] = acc / ai[i];
  }
  return b;
}

// LU determinant with partial pivoting; returns 0 on rank deficiency.
inline double determinant(Matrix<double> a) {
  if (a.rows() != a.cols()) throw std::logic_error("determinant: matrix not square");
  const int n = a.rows();
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = detail::find_pivot(a, k, k);
    if (p < 0 || a(p, k) == 0.0) return 0.0;
    if (p != k) {
      detail::swap_rows(a, k, p);
      det = -det;
    }
    double* ak = a.row(k);
    det *= ak[k];
    for (int i = k + 1; i < n; ++i) {
      double f = a(i, k) / ak[k];
      if (f == 0.0) continue;
      double* ai = a.row(i);
      for (int j = k; j < n; ++j) ai[j] -= f * ak[j];
    }
  }
  return det;
}

// Fraction-free (Bareiss) determinant of an integer matrix. Every
// intermediate entry stays integral, so there is no rounding and no
// rational normalization overhead.
inline BigInt bareiss_determinant(Matrix<BigInt> a) {
  if (a.rows() != a.cols()) throw std::logic_error("determinant: matrix not square");
  const int n = a.rows();
  if (n == 0) return BigInt(1);
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return BigInt(0);
      detail::swap_rows(a, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace kemeny
