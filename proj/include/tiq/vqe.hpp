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

#ifndef TIQ_VQE_HPP
#define TIQ_VQE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "tiq/circuit.hpp"
#include "tiq/eig.hpp"

namespace tiq {

// --- Hamiltonian ---------------------------------------------------------------

struct PauliHamiltonian {
  std::vector<std::pair<double, PauliString>> terms;  // (coefficient, string)
};

// Two-qubit tapered H2 Hamiltonian at the study's bond distance, in Hartree.
inline PauliHamiltonian h2_hamiltonian() {
  PauliHamiltonian h;
  h.terms = {
      {0.304794, PauliString("II")},  {0.3555426, PauliString("IZ")},
      {-0.485486, PauliString("ZI")}, {0.581232, PauliString("ZZ")},
      {0.089500, PauliString("XX")},  {0.089500, PauliString("YY")},
  };
  return h;
}

inline ComplexMatrix hamiltonian_matrix(const PauliHamiltonian& h) {
  ComplexMatrix m(4, 4);
  for (const auto& [coef, pauli] : h.terms) {
    if (pauli.n_qubits() != 2) {
      throw std::invalid_argument("hamiltonian_matrix: need 2-qubit strings");
    }
    m = m + cplx(coef) * pauli.to_matrix();
  }
  return m;
}

inline double exact_ground_energy(const PauliHamiltonian& h) {
  return eig_herm(hamiltonian_matrix(h)).values.front();
}

// --- Expectation sets ------------------------------------------------------------

struct ExpectationSet {
  double iz = 0.0;  // <Z> on qubit 1 (bottom wire)
  double zi = 0.0;  // <Z> on qubit 0 (top wire)
  double zz = 0.0;
  double xx = 0.0;
  double yy = 0.0;
};

// Clamps every expectation into [-1, 1]; sets *clamped when anything moved.
inline ExpectationSet clamp_expectations(const ExpectationSet& e,
                                         bool* clamped = nullptr) {
  ExpectationSet out = e;
  bool moved = false;
  for (double* v : {&out.iz, &out.zi, &out.zz, &out.xx, &out.yy}) {
    const double c = std::clamp(*v, -1.0, 1.0);
    if (c != *v) moved = true;
    *v = c;
  }
  if (clamped != nullptr) *clamped = moved;
  return out;
}

// Energy from measured expectations: sum of c_P <P> with <II> = 1. Raw
// estimates are used as-is; clamping is purification's concern.
inline double energy(const ExpectationSet& e, const PauliHamiltonian& h) {
  double sum = 0.0;
  for (const auto& [coef, pauli] : h.terms) {
    const std::string& s = pauli.label;
    double val = 0.0;
    if (s == "II") {
      val = 1.0;
    } else if (s == "IZ") {
      val = e.iz;
    } else if (s == "ZI") {
      val = e.zi;
    } else if (s == "ZZ") {
      val = e.zz;
    } else if (s == "XX") {
      val = e.xx;
    } else if (s == "YY") {
      val = e.yy;
    } else {
      throw std::invalid_argument("energy: unsupported Pauli term " + s);
    }
    sum += coef * val;
  }
  return sum;
}

// --- Ansatz ---------------------------------------------------------------------

// Tapered one-parameter H2 ansatz. Wire 0 is the top wire, wire 1 the
// bottom. Both CNOTs are bracketed as hard blocks so randomized compiling can
// twirl them; in hidden-inverse mode the second CNOT uses the inverse pulse
// construction.
inline Circuit ansatz(double alpha, CompileMode mode) {
  if (!(std::abs(alpha) <= kPi / 2)) {
    throw std::invalid_argument("ansatz: |alpha| must be <= pi/2");
  }
  Circuit c;
  c.n_qubits = 2;
  c.mode = mode;
  c.append({GateKind::RX, kPi, 1});  // X on the bottom wire
  c.append({GateKind::RY, kPi / 2, 1});
  c.append({GateKind::RX, -kPi / 2, 0});
  c.append_hard_block(cnot_native(1, 0), 1, 0);
  c.append({GateKind::RZ, alpha, 0});
  if (mode == CompileMode::hidden_inverse) {
    c.append_hard_block(cnot_inverse(1, 0), 1, 0);
  } else {
    c.append_hard_block(cnot_native(1, 0), 1, 0);
  }
  c.append({GateKind::RX, kPi / 2, 0});
  c.append({GateKind::RY, -kPi / 2, 1});
  return c;
}

// --- Measurement -----------------------------------------------------------------

enum class MeasureBasis { ZZ, XX, YY };

struct BasisEstimates {
  MeasureBasis basis = MeasureBasis::ZZ;
  double parity = 0.0;  // two-qubit parity in the rotated frame
  double z_q0 = 0.0;    // single-qubit <Z> of the top wire (ZZ basis only)
  double z_q1 = 0.0;    // single-qubit <Z> of the bottom wire (ZZ basis only)
};

namespace detail {

// Measurement-frame rotation mapping the requested Pauli onto Z on both
// qubits. These rotations are ideal: they belong to the measurement model,
// not to the characterized gate set.
inline ComplexMatrix basis_rotation(MeasureBasis basis) {
  switch (basis) {
    case MeasureBasis::ZZ: return ComplexMatrix::identity(4);
    case MeasureBasis::XX: return kron(ry(-kPi / 2), ry(-kPi / 2));
    case MeasureBasis::YY: return kron(rx(kPi / 2), rx(kPi / 2));
  }
  throw std::logic_error("basis_rotation: invalid basis");
}

inline BasisEstimates estimates_from_probs(MeasureBasis basis,
                                           const std::array<double, 4>& p) {
  BasisEstimates e;
  e.basis = basis;
  // Outcome index is q0 * 2 + q1.
  e.parity = p[0] - p[1] - p[2] + p[3];
  e.z_q0 = p[0] + p[1] - p[2] - p[3];
  e.z_q1 = p[0] - p[1] + p[2] - p[3];
  return e;
}

}  // namespace detail

// Runs the circuit and measures the chosen two-qubit Pauli basis. With
// shots = 0 the exact (infinite-shot) expectations are returned, which
// requires the analytic MS mode. With shots > 0, counts are drawn; in the
// sampled MS mode every shot is its own phonon-number trajectory, as in
// hardware.
inline BasisEstimates measure_set(const Circuit& c, const SqNoiseParams& sq,
                                  const MsNoiseParams& ms, int shots,
                                  std::uint64_t rng_seed, MeasureBasis basis) {
  if (c.n_qubits != 2) {
    throw std::invalid_argument("measure_set: need a 2-qubit circuit");
  }
  if (shots < 0) throw std::invalid_argument("measure_set: negative shots");
  const ComplexMatrix rot = detail::basis_rotation(basis);

  if (shots == 0) {
    if (ms.mode == MsNoiseParams::Mode::sampled) {
      throw std::invalid_argument(
          "measure_set: analytic estimates require the analytic MS mode");
    }
    DensityMatrix dm = simulate(c, sq, ms, dm_new(2, 0));
    dm = apply_unitary(dm, rot, {0, 1});
    std::array<double, 4> p{};
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = population(dm, i);
    return detail::estimates_from_probs(basis, p);
  }

  std::array<std::int64_t, 4> counts{};
  if (ms.mode == MsNoiseParams::Mode::analytic) {
    DensityMatrix dm = simulate(c, sq, ms, dm_new(2, 0));
    dm = apply_unitary(dm, rot, {0, 1});
    const auto drawn = sample_counts(dm, shots, derive_seed(rng_seed, 0, 0));
    for (int i = 0; i < 4; ++i) counts[static_cast<std::size_t>(i)] = drawn[static_cast<std::size_t>(i)];
  } else {
    Rng rng(derive_seed(rng_seed, 0, 1));
    for (int s = 0; s < shots; ++s) {
      DensityMatrix dm = simulate(c, sq, ms, dm_new(2, 0), &rng);
      dm = apply_unitary(dm, rot, {0, 1});
      const auto one = sample_counts(dm, 1, rng.next_u64());
      for (int i = 0; i < 4; ++i) counts[static_cast<std::size_t>(i)] += one[static_cast<std::size_t>(i)];
    }
  }
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) {
    p[static_cast<std::size_t>(i)] =
        static_cast<double>(counts[static_cast<std::size_t>(i)]) / shots;
  }
  return detail::estimates_from_probs(basis, p);
}

// Full expectation set from (at most) three basis runs: ZZ supplies the
// parity plus both single-qubit Z values; XX and YY supply their parities.
inline ExpectationSet measure_expectations(const Circuit& c,
                                           const SqNoiseParams& sq,
                                           const MsNoiseParams& ms, int shots,
                                           std::uint64_t rng_seed) {
  ExpectationSet e;
  const BasisEstimates z =
      measure_set(c, sq, ms, shots, derive_seed(rng_seed, 0, 0),
                  MeasureBasis::ZZ);
  e.zz = z.parity;
  e.zi = z.z_q0;
  e.iz = z.z_q1;
  e.xx = measure_set(c, sq, ms, shots, derive_seed(rng_seed, 1, 0),
                     MeasureBasis::XX)
             .parity;
  e.yy = measure_set(c, sq, ms, shots, derive_seed(rng_seed, 2, 0),
                     MeasureBasis::YY)
             .parity;
  return e;
}

// --- Randomized compiling ---------------------------------------------------------

// Averaged expectations over m Pauli-twirled compilations of the ansatz,
// sampled without replacement from all 256 frames, shots_total split evenly
// across them (the per-basis expectations are averaged; energy is linear, so
// this equals averaging per-twirl energies). shots_total = 0 averages exact
// per-twirl expectations.
inline ExpectationSet rc_expectations(double alpha, const SqNoiseParams& sq,
                                      const MsNoiseParams& ms, int shots_total,
                                      int m_circuits, std::uint64_t rng_seed,
                                      CompileMode mode = CompileMode::standard) {
  if (m_circuits < 1) {
    throw std::invalid_argument("rc_expectations: m_circuits < 1");
  }
  if (shots_total < 0 || shots_total % m_circuits != 0) {
    throw std::invalid_argument(
        "rc_expectations: m_circuits must divide shots_total");
  }
  const std::vector<Circuit> all = enumerate_twirls(ansatz(alpha, mode));
  if (static_cast<std::size_t>(m_circuits) > all.size()) {
    throw std::invalid_argument("rc_expectations: m_circuits exceeds 256");
  }
  const std::vector<Circuit> chosen =
      sample_twirls(all, static_cast<std::size_t>(m_circuits),
                    derive_seed(rng_seed, 0, 3));
  const int shots_each = shots_total / m_circuits;

  ExpectationSet avg;
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    const ExpectationSet e = measure_expectations(
        chosen[t], sq, ms, shots_each, derive_seed(rng_seed, t, 1));
    avg.iz += e.iz;
    avg.zi += e.zi;
    avg.zz += e.zz;
    avg.xx += e.xx;
    avg.yy += e.yy;
  }
  const double inv = 1.0 / m_circuits;
  avg.iz *= inv;
  avg.zi *= inv;
  avg.zz *= inv;
  avg.xx *= inv;
  avg.yy *= inv;
  return avg;
}

inline double rc_energy(double alpha, const SqNoiseParams& sq,
                        const MsNoiseParams& ms, int shots_total,
                        int m_circuits, std::uint64_t rng_seed,
                        CompileMode mode = CompileMode::standard) {
  return energy(
      rc_expectations(alpha, sq, ms, shots_total, m_circuits, rng_seed, mode),
      h2_hamiltonian());
}

// --- Purification ------------------------------------------------------------------

// Projects the measured state onto the dominant eigenvector of the 2x2
// one-particle-sector density matrix
//   rho = [ (1-<IZ>)/2        (<XX>+<YY>)/4 ]
//         [ (<XX>+<YY>)/4     (1-<ZI>)/2    ]
// and reads the expectations back from the resulting rank-1 projector.
// The diagonal entries are probabilities and are clamped to [0, 1] first; rho
// is deliberately NOT trace-normalized (the eigenvector direction is
// scale-invariant, and trace deviations are part of the noise signal). The
// purified state lives in span{|01>, |10>}, where ZZ is identically -1.
// Degenerate eigenvalues break the tie toward the eigenvector with the larger
// first component; *degenerate reports that this happened.
inline ExpectationSet purify(const ExpectationSet& e,
                             bool* degenerate = nullptr) {
  const double a = std::clamp((1.0 - e.iz) / 2.0, 0.0, 1.0);
  const double d = std::clamp((1.0 - e.zi) / 2.0, 0.0, 1.0);
  const double c = (e.xx + e.yy) / 4.0;

  const double half_gap = (a - d) / 2.0;
  const double disc = std::hypot(half_gap, c);
  if (degenerate != nullptr) *degenerate = (disc == 0.0);

  double v0, v1;
  if (disc == 0.0) {
    v0 = 1.0;  // every vector is an eigenvector; take the canonical one
    v1 = 0.0;
  } else if (c == 0.0) {
    v0 = a >= d ? 1.0 : 0.0;
    v1 = 1.0 - v0;
  } else {
    // Eigenvector of the larger eigenvalue lambda = (a+d)/2 + disc; choose
    // the component formula that avoids cancellation.
    const double lambda = (a + d) / 2.0 + disc;
    if (a >= d) {
      v0 = lambda - d;
      v1 = c;
    } else {
      v0 = c;
      v1 = lambda - a;
    }
    const double norm = std::hypot(v0, v1);
    v0 /= norm;
    v1 /= norm;
  }

  ExpectationSet out;
  const double p00 = v0 * v0;
  const double p11 = v1 * v1;
  const double p01 = v0 * v1;
  out.iz = 1.0 - 2.0 * p00;
  out.zi = 1.0 - 2.0 * p11;
  out.xx = 2.0 * p01;
  out.yy = 2.0 * p01;
  out.zz = -1.0;
  return out;
}

// --- Landscape --------------------------------------------------------------------

enum class Mitigation { none, rc };

struct LandscapePoint {
  double alpha = 0.0;
  double energy = 0.0;
  CompileMode mode = CompileMode::standard;
  Mitigation mitigation = Mitigation::none;
  bool purified = false;
  int shots = 0;  // 0 marks an analytic (infinite-shot) value
};

// n symmetric alpha values covering [-pi/2, pi/2] inclusive.
inline std::vector<double> uniform_alphas(int n) {
  if (n < 2) throw std::invalid_argument("uniform_alphas: n < 2");
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] =
        (kPi / 2) * (2.0 * i - (n - 1)) / (n - 1);
  }
  return a;
}

// Sweeps the energy landscape: for every alpha, a raw and a purified point
// under the requested compilation mode and mitigation. shots = 0 gives the
// analytic curve; randomized compiling then averages all 256 frames exactly,
// while sampled runs use the experiment's 10-circuit randomization.
inline std::vector<LandscapePoint> landscape(
    const std::vector<double>& alphas, CompileMode mode, Mitigation mitigation,
    const SqNoiseParams& sq, const MsNoiseParams& ms, int shots,
    std::uint64_t seed, int rc_m_circuits = 10) {
  const PauliHamiltonian h = h2_hamiltonian();
  std::vector<LandscapePoint> points;
  points.reserve(alphas.size() * 2);
  for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
    const double alpha = alphas[ai];
    const std::uint64_t point_seed = derive_seed(seed, ai, 0);
    ExpectationSet exps;
    if (mitigation == Mitigation::rc) {
      const int m = shots == 0 ? 256 : rc_m_circuits;
      exps = rc_expectations(alpha, sq, ms, shots, m, point_seed, mode);
    } else {
      exps = measure_expectations(ansatz(alpha, mode), sq, ms, shots,
                                  point_seed);
    }
    LandscapePoint raw;
    raw.alpha = alpha;
    raw.energy = energy(exps, h);
    raw.mode = mode;
    raw.mitigation = mitigation;
    raw.purified = false;
    raw.shots = shots;
    points.push_back(raw);

    LandscapePoint pur = raw;
    pur.energy = energy(purify(exps), h);
    pur.purified = true;
    points.push_back(pur);
  }
  return points;
}

inline std::string write_landscape_csv(const std::vector<LandscapePoint>& pts) {
  std::string out = "alpha_rad,energy_hartree,mode,mitigation,purified,shots\n";
  char buf[160];
  for (const LandscapePoint& p : pts) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%s,%d,%d\n", p.alpha,
                  p.energy,
                  p.mode == CompileMode::hidden_inverse ? "hi" : "default",
                  p.mitigation == Mitigation::rc ? "rc" : "none",
                  p.purified ? 1 : 0, p.shots);
    out += buf;
  }
  return out;
}

inline std::string exact_energy_json(const PauliHamiltonian& h) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "{\"ground_energy_hartree\": %.17g}\n",
                exact_ground_energy(h));
  return buf;
}

}  // namespace tiq

#endif  // TIQ_VQE_HPP
