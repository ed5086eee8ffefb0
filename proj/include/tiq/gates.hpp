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

#ifndef TIQ_GATES_HPP
#define TIQ_GATES_HPP

#include <cmath>
#include <vector>

#include "tiq/complex_matrix.hpp"
#include "tiq/density_matrix.hpp"

namespace tiq {

// Coherent error parameters of the native single-qubit gates: fractional
// over-rotation epsilon, rotation-axis phase error phi (radians), and the
// detuning-to-Rabi-frequency ratio delta/Omega. Only the product
// (delta/Omega) * |theta| of a gate's detuning and duration is physical, so
// the ratio is the natural stored quantity.
struct SqNoiseParams {
  double epsilon = 0.0;
  double phase = 0.0;
  double detuning_ratio = 0.0;
};

// Noise parameters of the Molmer-Sorensen (XX) gate: mean thermal phonon
// number nbar, a static over-rotation offset in radians, a two-qubit
// depolarizing probability, and the Lamb-Dicke parameter eta governing the
// Debye-Waller reduction of the effective Rabi frequency.
struct MsNoiseParams {
  enum class Mode { analytic, sampled };
  double nbar = 0.0;
  double overrotation = 0.0;
  double depol_p = 0.0;
  double eta = 0.62;
  Mode mode = Mode::analytic;
};

// Parameters of a perfectly calibrated MS gate. Note eta = 0: with the
// default Lamb-Dicke parameter even the zero-phonon term is Debye-Waller
// shortened, so a true no-noise channel must switch that scaling off too.
inline MsNoiseParams ideal_ms_params() {
  MsNoiseParams p;
  p.eta = 0.0;
  return p;
}

enum class GateKind { RX, RY, RZ, XX };

struct GateOp {
  GateKind kind;
  double angle;
  int t0;       // first target qubit
  int t1 = -1;  // second target qubit (XX only)
};

using GateSeq = std::vector<GateOp>;

// Rotation convention throughout: R_sigma(theta) = exp(-i theta sigma / 2).

inline ComplexMatrix rx(double theta) {
  return mat_exp_2x2_pauli(theta / 2.0, 0.0, 0.0);
}

inline ComplexMatrix ry(double theta) {
  return mat_exp_2x2_pauli(0.0, theta / 2.0, 0.0);
}

inline ComplexMatrix rz(double theta) {
  return mat_exp_2x2_pauli(0.0, 0.0, theta / 2.0);
}

// XX(theta) = exp(-i (theta/2) X (x) X) = cos(theta/2) I - i sin(theta/2) XX.
inline ComplexMatrix xx(double theta) {
  ComplexMatrix m = ComplexMatrix::identity(4) * cplx(std::cos(theta / 2.0));
  const cplx ms(0.0, -std::sin(theta / 2.0));
  m(0, 3) += ms;
  m(1, 2) += ms;
  m(2, 1) += ms;
  m(3, 0) += ms;
  return m;
}

// Noisy X rotation:
//   exp(-i [ (1+eps) (theta/2) (cos(phi) X + sin(phi) Y)
//            + (delta/Omega) (|theta|/2) Z ]).
// The rotation term scales with the signed angle (amplitude miscalibration
// inverts with the drive), while the detuning term scales with |theta|: it
// accumulates over the physical pulse duration regardless of drive sign.
// This asymmetry is exactly why a G followed by its Hermitian-conjugate
// decomposition cancels eps and phi but not delta.
inline ComplexMatrix noisy_rx(double theta, const SqNoiseParams& p) {
  if (!(std::abs(p.epsilon) < 1.0)) {
    throw std::invalid_argument("noisy_rx: |epsilon| must be < 1");
  }
  const double amp = (1.0 + p.epsilon) * theta / 2.0;
  return mat_exp_2x2_pauli(amp * std::cos(p.phase), amp * std::sin(p.phase),
                           p.detuning_ratio * std::abs(theta) / 2.0);
}

// Noisy Y rotation; the axis error tilts toward X (cos(phi) Y + sin(phi) X).
inline ComplexMatrix noisy_ry(double theta, const SqNoiseParams& p) {
  if (!(std::abs(p.epsilon) < 1.0)) {
    throw std::invalid_argument("noisy_ry: |epsilon| must be < 1");
  }
  const double amp = (1.0 + p.epsilon) * theta / 2.0;
  return mat_exp_2x2_pauli(amp * std::sin(p.phase), amp * std::cos(p.phase),
                           p.detuning_ratio * std::abs(theta) / 2.0);
}

constexpr double kPi = 3.14159265358979323846;

// Hadamard from native rotations. Listed in temporal (application) order;
// the matrix product Ry(-pi/2) * Rx(pi) equals H up to global phase.
inline GateSeq h_native(int qubit) {
  return {{GateKind::RX, kPi, qubit}, {GateKind::RY, -kPi / 2.0, qubit}};
}

// Hermitian-conjugated Hadamard decomposition: the same gates reversed with
// negated angles. Composes to H as well (H is self-adjoint), but its
// primitive coherent errors cancel those of h_native pairwise.
inline GateSeq h_inverse(int qubit) {
  return {{GateKind::RY, kPi / 2.0, qubit}, {GateKind::RX, -kPi, qubit}};
}

// CNOT from the native MS interaction (temporal order):
//   Ry(pi/2) on control; XX(pi/2); Rx(-pi/2) on both; Ry(-pi/2) on control.
inline GateSeq cnot_native(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("cnot_native: control == target");
  }
  return {{GateKind::RY, kPi / 2.0, control},
          {GateKind::XX, kPi / 2.0, control, target},
          {GateKind::RX, -kPi / 2.0, control},
          {GateKind::RX, -kPi / 2.0, target},
          {GateKind::RY, -kPi / 2.0, control}};
}

// Hermitian-conjugated CNOT decomposition (CNOT is self-adjoint):
//   Ry(pi/2) on control; Rx(pi/2) on both; XX(-pi/2); Ry(-pi/2) on control.
inline GateSeq cnot_inverse(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("cnot_inverse: control == target");
  }
  return {{GateKind::RY, kPi / 2.0, control},
          {GateKind::RX, kPi / 2.0, control},
          {GateKind::RX, kPi / 2.0, target},
          {GateKind::XX, -kPi / 2.0, control, target},
          {GateKind::RY, -kPi / 2.0, control}};
}

// Symmetric rotation-error injection: the magnitude shifts by delta while the
// sign of the rotation is preserved, so a gate programmed as XX(pi/2) becomes
// XX(pi/2 + delta) and its inverse XX(-pi/2) becomes XX(-(pi/2 + delta)).
// This mimics an amplitude miscalibration of the shared drive.
inline double inject_rotation_error(double theta, double delta) {
  const double sign = theta < 0.0 ? -1.0 : 1.0;
  return sign * (std::abs(theta) + delta);
}

// Composes a gate sequence into a single unitary on an n-qubit register,
// applying the single-qubit noise model to RX/RY. RZ is ideal (virtual
// frame rotation) and XX is taken ideal here; XX noise is a channel, not a
// unitary, and lives in ms_channel.hpp.
inline ComplexMatrix seq_unitary(const GateSeq& seq, int n_qubits,
                                 const SqNoiseParams& p = {}) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << n_qubits);
  for (const GateOp& g : seq) {
    ComplexMatrix m;
    std::vector<int> targets;
    switch (g.kind) {
      case GateKind::RX: m = noisy_rx(g.angle, p); targets = {g.t0}; break;
      case GateKind::RY: m = noisy_ry(g.angle, p); targets = {g.t0}; break;
      case GateKind::RZ: m = rz(g.angle); targets = {g.t0}; break;
      case GateKind::XX: m = xx(g.angle); targets = {g.t0, g.t1}; break;
    }
    u = embed_unitary(m, targets, n_qubits) * u;
  }
  return u;
}

}  // namespace tiq

#endif  // TIQ_GATES_HPP
