// Copyright 2026 The tiq Authors.
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

#ifndef TIQ_COMPLEX_MATRIX_HPP
#define TIQ_COMPLEX_MATRIX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace tiq {

using cplx = std::complex<double>;

// Dense row-major complex matrix with a fixed 4x4 capacity. Everything in
// this toolkit lives on one or two qubits, so the largest operator is 4x4;
// a fixed-capacity value type keeps the simulation hot paths allocation-free.
class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  ComplexMatrix() : rows_(0), cols_(0) {}

  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows > kMaxDim || cols > kMaxDim) {
      throw std::invalid_argument("ComplexMatrix: dimension exceeds 4");
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  cplx& at(std::size_t r, std::size_t c) {
    check_index(r, c);
    return (*this)(r, c);
  }
  const cplx& at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    return (*this)(r, c);
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) {
      throw std::invalid_argument("ComplexMatrix: incompatible shapes");
    }
    ComplexMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          out(i, j) += aik * o(k, j);
        }
      }
    }
    return out;
  }

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    check_same_shape(o);
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    check_same_shape(o);
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }

  ComplexMatrix operator*(cplx s) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) out.a_[i] = a_[i] * s;
    return out;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) a_[i] += o.a_[i];
    return *this;
  }

  ComplexMatrix dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        out(j, i) = std::conj((*this)(i, j));
      }
    }
    return out;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs_diff(const ComplexMatrix& o) const {
    check_same_shape(o);
    double m = 0.0;
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
      m = std::max(m, std::abs(a_[i] - o.a_[i]));
    }
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
      m = std::max(m, std::abs(a_[i]));
    }
    return m;
  }

  // Equality is always tolerance-explicit; there is no operator==.
  bool approx_equal(const ComplexMatrix& o, double tol) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return max_abs_diff(o) <= tol;
  }

  bool is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    return (dagger() * *this).approx_equal(identity(rows_), tol);
  }

  bool is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    return approx_equal(dagger(), tol);
  }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
      throw std::out_of_range("ComplexMatrix: index out of range");
    }
  }
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("ComplexMatrix: shape mismatch");
    }
  }

  std::size_t rows_, cols_;
  std::array<cplx, kMaxDim * kMaxDim> a_{};
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

// Kronecker product; the FIRST factor acts on the more significant qubit.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

// exp(-i (ax X + ay Y + az Z)) in closed form: cos(r) I - i sin(r) (a-hat . sigma),
// r = |a|. Returns the identity for r = 0.
inline ComplexMatrix mat_exp_2x2_pauli(double ax, double ay, double az) {
  ComplexMatrix u(2, 2);
  const double r = std::sqrt(ax * ax + ay * ay + az * az);
  if (r == 0.0) return ComplexMatrix::identity(2);
  const double c = std::cos(r), s = std::sin(r);
  const double nx = ax / r, ny = ay / r, nz = az / r;
  u(0, 0) = cplx(c, -s * nz);
  u(0, 1) = cplx(-s * ny, -s * nx);
  u(1, 0) = cplx(s * ny, -s * nx);
  u(1, 1) = cplx(c, s * nz);
  return u;
}

// True when a == z * b for some unit complex z (states and gates that differ
// by global phase are physically identical).
inline bool approx_equal_up_to_phase(const ComplexMatrix& a,
                                     const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Align phases on the largest entry of b, then compare directly.
  std::size_t br = 0, bc = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        br = i;
        bc = j;
      }
    }
  }
  if (best <= tol) return a.max_abs() <= tol;
  const cplx ratio = a(br, bc) / b(br, bc);
  const double mag = std::abs(ratio);
  if (mag == 0.0) return false;
  const cplx z = ratio / mag;  // unit-modulus phase alignment
  return a.approx_equal(b * z, tol);
}

}  // namespace tiq

#endif  // TIQ_COMPLEX_MATRIX_HPP
