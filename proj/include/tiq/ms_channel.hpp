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

#ifndef TIQ_MS_CHANNEL_HPP
#define TIQ_MS_CHANNEL_HPP

#include <cmath>
#include <vector>

#include "tiq/density_matrix.hpp"
#include "tiq/gates.hpp"
#include "tiq/rng.hpp"

namespace tiq {

// Laguerre polynomial L_n(x) by the three-term recurrence.
inline double laguerre(int n, double x) {
  if (n == 0) return 1.0;
  double lm1 = 1.0, l = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
    lm1 = l;
    l = next;
  }
  return l;
}

// Thermal phonon occupation probabilities P(n) = nbar^n / (1+nbar)^(n+1),
// truncated once the cumulative mass reaches 1 - 1e-9.
inline std::vector<double> thermal_weights(double nbar) {
  if (nbar < 0.0) throw std::invalid_argument("thermal_weights: nbar < 0");
  if (nbar == 0.0) return {1.0};
  std::vector<double> w;
  const double ratio = nbar / (1.0 + nbar);
  double p = 1.0 / (1.0 + nbar);
  double cum = 0.0;
  while (cum < 1.0 - 1e-9) {
    w.push_back(p);
    cum += p;
    p *= ratio;
  }
  return w;
}

// Debye-Waller reduction of the effective Rabi frequency for phonon number n
// (single effective mode): DW(n) = exp(-eta^2/2) L_n(eta^2).
inline double debye_waller(int n, double eta) {
  const double e2 = eta * eta;
  return std::exp(-e2 / 2.0) * laguerre(n, e2);
}

// Noisy Molmer-Sorensen gate as a quantum channel: a thermal mixture of
// XX unitaries whose angles are scaled by the phonon-dependent Debye-Waller
// factor (shot-to-shot coherent error), followed by two-qubit depolarizing
// noise (residual spin-motion entanglement):
//
//   rho -> (1-p) sum_n P(n) U_n rho U_n^dagger + p I/4,
//   U_n = xx( sign(theta) (|theta| + overrotation) DW(n) ).
//
// The over-rotation offset follows the sign of the programmed angle, exactly
// like inject_rotation_error: the miscalibration is symmetric between a gate
// and its inverse.
struct MsChannel {
  double theta = 0.0;
  MsNoiseParams params;
  std::vector<double> weights;  // thermal P(n), truncated
  std::vector<double> angles;   // effective XX angle per phonon number

  // Applies the analytic (exact-mixture) channel.
  DensityMatrix apply_analytic(const DensityMatrix& dm, int q0, int q1) const {
    DensityMatrix out = dm;
    out.mat = ComplexMatrix(dm.mat.rows(), dm.mat.cols());
    for (std::size_t n = 0; n < weights.size(); ++n) {
      const DensityMatrix term = apply_unitary(dm, xx(angles[n]), {q0, q1});
      out.mat += term.mat * cplx(weights[n] / total_weight());
    }
    return apply_depolarizing(out, params.depol_p, {q0, q1});
  }

  // Draws one phonon number from the (truncated, renormalized) thermal
  // distribution and returns the corresponding effective angle. Used by the
  // sampled mode, which applies U_n as a unitary once per shot.
  double draw_angle(Rng& rng) const {
    const double u = rng.uniform() * total_weight();
    double cum = 0.0;
    for (std::size_t n = 0; n < weights.size(); ++n) {
      cum += weights[n];
      if (u < cum) return angles[n];
    }
    return angles.back();
  }

  double total_weight() const {
    double t = 0.0;
    for (double w : weights) t += w;
    return t;
  }
};

inline MsChannel noisy_xx_channel(double theta, const MsNoiseParams& p) {
  if (p.depol_p < 0.0 || p.depol_p > 1.0) {
    throw std::invalid_argument("noisy_xx_channel: depol_p out of [0, 1]");
  }
  if (p.eta < 0.0 || p.eta >= 1.0) {
    throw std::invalid_argument("noisy_xx_channel: eta out of [0, 1)");
  }
  MsChannel ch;
  ch.theta = theta;
  ch.params = p;
  ch.weights = thermal_weights(p.nbar);
  const double sign = theta < 0.0 ? -1.0 : 1.0;
  const double magnitude = std::abs(theta) + p.overrotation;
  ch.angles.resize(ch.weights.size());
  for (std::size_t n = 0; n < ch.weights.size(); ++n) {
    ch.angles[n] = sign * magnitude * debye_waller(static_cast<int>(n), p.eta);
  }
  return ch;
}

// Average gate fidelity of the channel against an ideal two-qubit unitary V:
//   F_avg = (d F_e + 1) / (d + 1),  d = 4,
// with the entanglement fidelity of the mixture-plus-depolarizing channel
//   F_e = (1-p) sum_n P(n) |Tr(V^dagger U_n)|^2 / d^2 + p / d^2.
// (The fully-depolarized component contributes F_e = 1/d^2 regardless of V.)
inline double avg_gate_fidelity(const MsChannel& ch,
                                const ComplexMatrix& ideal) {
  if (ideal.rows() != 4 || ideal.cols() != 4) {
    throw std::invalid_argument("avg_gate_fidelity: need a 4x4 ideal unitary");
  }
  const double d = 4.0;
  const ComplexMatrix vdag = ideal.dagger();
  double fe_coherent = 0.0;
  const double norm = ch.total_weight();
  for (std::size_t n = 0; n < ch.weights.size(); ++n) {
    const cplx tr = (vdag * xx(ch.angles[n])).trace();
    fe_coherent += (ch.weights[n] / norm) * std::norm(tr) / (d * d);
  }
  const double fe =
      (1.0 - ch.params.depol_p) * fe_coherent + ch.params.depol_p / (d * d);
  return (d * fe + 1.0) / (d + 1.0);
}

}  // namespace tiq

#endif  // TIQ_MS_CHANNEL_HPP
