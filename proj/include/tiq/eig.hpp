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

#ifndef TIQ_EIG_HPP
#define TIQ_EIG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "tiq/complex_matrix.hpp"

namespace tiq {

struct EigResult {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // orthonormal eigenvectors as columns
};

// Eigendecomposition of a complex Hermitian matrix (dimension <= 4) by the
// cyclic Jacobi method with complex plane rotations. Small dimensions make
// Jacobi both simple and numerically excellent: it converges quadratically
// and produces orthonormal eigenvectors by construction.
inline EigResult eig_herm(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || n != m.cols()) {
    throw std::invalid_argument("eig_herm: matrix must be square");
  }
  if (!m.is_hermitian(1e-10)) {
    throw std::invalid_argument("eig_herm: matrix is not Hermitian");
  }

  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // Symmetrize exactly so rounding in the input cannot bias the iteration.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const cplx mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
    a(i, i) = a(i, i).real();
  }

  const double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    }
    if (off <= 1e-15 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double zmag = std::abs(apq);
        if (zmag <= 1e-300) continue;
        const cplx phase = apq / zmag;  // e^{i phi}
        // Rotation angle from the real symmetric reduction of the (p,q) block.
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (app - aqq) / (2.0 * zmag);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;  // complex sine carrying the phase of a_pq

        // A <- R^dagger A R with R = [[c, -sp],[conj(sp), c]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + std::conj(sp) * akq;
          a(k, q) = -sp * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + sp * aqk;
          a(q, k) = -std::conj(sp) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + std::conj(sp) * vkq;
          v(k, q) = -sp * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigResult out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace tiq

#endif  // TIQ_EIG_HPP
