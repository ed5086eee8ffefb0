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

#ifndef TIQ_PAULI_HPP
#define TIQ_PAULI_HPP

#include <stdexcept>
#include <string>

#include "tiq/complex_matrix.hpp"

namespace tiq {

inline ComplexMatrix pauli_i() { return ComplexMatrix::identity(2); }

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// A tensor product of single-qubit Pauli operators, written as a string over
// {I, X, Y, Z}. The FIRST character acts on qubit 0, which is the TOP wire of
// every circuit diagram in this toolkit and the most significant bit of basis
// indices (|q0 q1> has index q0*2 + q1).
struct PauliString {
  std::string label;

  PauliString() = default;
  explicit PauliString(std::string l) : label(std::move(l)) {
    for (char c : label) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw std::invalid_argument("PauliString: invalid character");
      }
    }
  }

  std::size_t n_qubits() const { return label.size(); }

  ComplexMatrix to_matrix() const {
    if (label.empty() || label.size() > 2) {
      throw std::invalid_argument("PauliString: supported sizes are 1 and 2");
    }
    ComplexMatrix m = char_matrix(label[0]);
    for (std::size_t i = 1; i < label.size(); ++i) {
      m = kron(m, char_matrix(label[i]));
    }
    return m;
  }

  static ComplexMatrix char_matrix(char c) {
    switch (c) {
      case 'I': return pauli_i();
      case 'X': return pauli_x();
      case 'Y': return pauli_y();
      case 'Z': return pauli_z();
      default: throw std::invalid_argument("PauliString: invalid character");
    }
  }
};

}  // namespace tiq

#endif  // TIQ_PAULI_HPP
