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

#ifndef TIQ_DENSITY_MATRIX_HPP
#define TIQ_DENSITY_MATRIX_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "tiq/complex_matrix.hpp"
#include "tiq/pauli.hpp"
#include "tiq/rng.hpp"

namespace tiq {

// Density operator on 1 or 2 qubits. Hermitian, unit trace; qubit 0 is the
// top wire / most significant bit (see PauliString).
struct DensityMatrix {
  int n_qubits = 1;
  ComplexMatrix mat;

  std::size_t dim() const { return std::size_t{1} << n_qubits; }
};

inline DensityMatrix dm_new(int n_qubits, std::size_t basis_index) {
  if (n_qubits < 1 || n_qubits > 2) {
    throw std::invalid_argument("dm_new: n_qubits must be 1 or 2");
  }
  const std::size_t d = std::size_t{1} << n_qubits;
  if (basis_index >= d) {
    throw std::out_of_range("dm_new: basis index out of range");
  }
  DensityMatrix dm;
  dm.n_qubits = n_qubits;
  dm.mat = ComplexMatrix(d, d);
  dm.mat(basis_index, basis_index) = 1.0;
  return dm;
}

// Tensors a k-qubit unitary onto the given target qubits of an n-qubit
// register (identity elsewhere). The i-th qubit listed in `targets` carries
// the i-th qubit (most significant first) of the small matrix.
inline ComplexMatrix embed_unitary(const ComplexMatrix& u,
                                   const std::vector<int>& targets,
                                   int n_qubits) {
  const std::size_t k = targets.size();
  const std::size_t du = std::size_t{1} << k;
  const std::size_t d = std::size_t{1} << n_qubits;
  if (u.rows() != du || u.cols() != du) {
    throw std::invalid_argument("embed_unitary: matrix/target size mismatch");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits) {
      throw std::invalid_argument("embed_unitary: target out of range");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("embed_unitary: duplicate target");
      }
    }
  }

  // Bit position of register qubit q in a basis index (qubit 0 is the MSB).
  auto bit_of = [&](int q) { return n_qubits - 1 - q; };

  ComplexMatrix big(d, d);
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t col = 0; col < d; ++col) {
      // Off-target bits must match; on-target bits index the small matrix.
      bool same_rest = true;
      std::size_t ur = 0, uc = 0;
      for (int q = 0; q < n_qubits; ++q) {
        const std::size_t rb = (row >> bit_of(q)) & 1u;
        const std::size_t cb = (col >> bit_of(q)) & 1u;
        bool on_target = false;
        for (std::size_t i = 0; i < k; ++i) {
          if (targets[i] == q) {
            ur |= rb << (k - 1 - i);
            uc |= cb << (k - 1 - i);
            on_target = true;
            break;
          }
        }
        if (!on_target && rb != cb) {
          same_rest = false;
          break;
        }
      }
      if (same_rest) big(row, col) = u(ur, uc);
    }
  }
  return big;
}

inline DensityMatrix apply_unitary(const DensityMatrix& dm,
                                   const ComplexMatrix& u,
                                   const std::vector<int>& targets) {
  if (!u.is_unitary(1e-10)) {
    throw std::invalid_argument("apply_unitary: matrix is not unitary");
  }
  const ComplexMatrix big = embed_unitary(u, targets, dm.n_qubits);
  DensityMatrix out = dm;
  out.mat = big * dm.mat * big.dagger();
  return out;
}

// Traces out qubit `q` of a 2-qubit state, returning the 2x2 marginal of the
// other qubit.
inline ComplexMatrix partial_trace_qubit(const DensityMatrix& dm, int q) {
  if (dm.n_qubits != 2) {
    throw std::invalid_argument("partial_trace_qubit: need a 2-qubit state");
  }
  auto bit_of = [&](int qq) { return 1 - qq; };  // qubit 0 = MSB of 2 bits
  const int keep = 1 - q;
  ComplexMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t t = 0; t < 2; ++t) {
        const std::size_t row = (i << bit_of(keep)) | (t << bit_of(q));
        const std::size_t col = (j << bit_of(keep)) | (t << bit_of(q));
        out(i, j) += dm.mat(row, col);
      }
    }
  }
  return out;
}

// Depolarizing channel on the listed qubits: with probability p the marginal
// on those qubits is replaced by the maximally mixed state, leaving the other
// qubits' state intact. On the full register this is rho -> (1-p) rho + p I/d.
inline DensityMatrix apply_depolarizing(const DensityMatrix& dm, double p,
                                        const std::vector<int>& targets) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("apply_depolarizing: p out of [0, 1]");
  }
  for (int t : targets) {
    if (t < 0 || t >= dm.n_qubits) {
      throw std::invalid_argument("apply_depolarizing: target out of range");
    }
  }
  DensityMatrix out = dm;
  if (targets.size() == static_cast<std::size_t>(dm.n_qubits)) {
    const std::size_t d = dm.dim();
    const cplx tr = dm.mat.trace();
    out.mat = dm.mat * cplx(1.0 - p);
    for (std::size_t i = 0; i < d; ++i) {
      out.mat(i, i) += p * tr / static_cast<double>(d);
    }
    return out;
  }
  if (dm.n_qubits == 2 && targets.size() == 1) {
    const int q = targets[0];
    const ComplexMatrix rest = partial_trace_qubit(dm, q);
    ComplexMatrix mixed =
        (q == 0) ? kron(ComplexMatrix::identity(2) * cplx(0.5), rest)
                 : kron(rest, ComplexMatrix::identity(2) * cplx(0.5));
    out.mat = dm.mat * cplx(1.0 - p) + mixed * cplx(p);
    return out;
  }
  throw std::invalid_argument("apply_depolarizing: unsupported target set");
}

inline double expectation(const DensityMatrix& dm, const PauliString& pauli) {
  if (pauli.n_qubits() != static_cast<std::size_t>(dm.n_qubits)) {
    throw std::invalid_argument("expectation: Pauli length != qubit count");
  }
  const cplx t = (pauli.to_matrix() * dm.mat).trace();
  if (std::abs(t.imag()) >= 1e-9) {
    throw std::runtime_error("expectation: non-negligible imaginary part");
  }
  return t.real();
}

inline double population(const DensityMatrix& dm, std::size_t basis_index) {
  if (basis_index >= dm.dim()) {
    throw std::out_of_range("population: basis index out of range");
  }
  return dm.mat(basis_index, basis_index).real();
}

// Multinomial sample of measurement outcomes in the computational basis,
// via inverse-CDF over the diagonal. Deterministic for a fixed seed. Tiny
// negative diagonal entries (numerical noise) are clamped to zero.
inline std::vector<long> sample_counts(const DensityMatrix& dm, long shots,
                                       std::uint64_t rng_seed) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  const std::size_t d = dm.dim();
  std::vector<double> probs(d);
  double norm = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    probs[i] = std::max(0.0, dm.mat(i, i).real());
    norm += probs[i];
  }
  for (auto& p : probs) p /= norm;

  Rng rng(rng_seed);
  std::vector<long> counts(d, 0);
  for (long s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    double cum = 0.0;
    std::size_t k = d - 1;  // fall through to the last bin on rounding
    for (std::size_t i = 0; i < d; ++i) {
      cum += probs[i];
      if (u < cum) {
        k = i;
        break;
      }
    }
    ++counts[k];
  }
  return counts;
}

}  // namespace tiq

#endif  // TIQ_DENSITY_MATRIX_HPP
