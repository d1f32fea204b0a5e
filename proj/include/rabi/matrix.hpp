// Copyright 2026 The rabisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rabi {

using cplx = std::complex<double>;

// Dense square matrix, row-major storage. Dimensions here are tiny (n = 2..5
// for the closed forms, n <~ 100 for the spectral path), so no attempt is made
// at blocking or expression templates.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  explicit Matrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("Matrix: dim must be >= 1");
    data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), T{});
  }

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = T{1};
    return m;
  }

  int dim() const { return dim_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(c);
  }

  int dim_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<cplx>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Matrix product: dimension mismatch");
  const int n = a.dim();
  Matrix<T> out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Matrix difference: dimension mismatch");
  Matrix<T> out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = m(j, i);
  return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = cplx(m(i, j), 0.0);
  return out;
}

// Entrywise max magnitude.
template <typename T>
double max_abs(const Matrix<T>& m) {
  double v = 0.0;
  for (const T& x : m.data()) v = std::max(v, std::abs(x));
  return v;
}

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double v = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) v = std::max(v, std::abs(a(i, j) - b(i, j)));
  return v;
}

// Induced 1-norm (max absolute column sum).
template <typename T>
double one_norm(const Matrix<T>& m) {
  double v = 0.0;
  for (int j = 0; j < m.dim(); ++j) {
    double col = 0.0;
    for (int i = 0; i < m.dim(); ++i) col += std::abs(m(i, j));
    v = std::max(v, col);
  }
  return v;
}

template <typename T>
bool all_finite(const Matrix<T>& m) {
  for (const T& x : m.data()) {
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(x)) return false;
    } else {
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    }
  }
  return true;
}

// ||U U^dag - 1||_max
inline double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u * adjoint(u), ComplexMatrix::identity(u.dim()));
}

// ||H - H^dag||_max
inline double hermiticity_defect(const ComplexMatrix& h) {
  return max_abs_diff(h, adjoint(h));
}

// ||W^T W - 1||_max
inline double orthogonality_defect(const RealMatrix& w) {
  return max_abs_diff(transpose(w) * w, RealMatrix::identity(w.dim()));
}

// LU with partial pivoting; fine for the n <= ~8 matrices this library handles.
inline cplx determinant(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix lu = m;
  cplx det(1.0, 0.0);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (std::abs(lu(pivot, col)) == 0.0) return cplx(0.0, 0.0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(pivot, j), lu(col, j));
      det = -det;
    }
    det *= lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx f = lu(r, col) / lu(col, col);
      for (int j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

}  // namespace rabi
