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

#ifndef TIQ_CIRCUIT_HPP
#define TIQ_CIRCUIT_HPP

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "tiq/gates.hpp"
#include "tiq/ms_channel.hpp"

namespace tiq {

// Instruction kinds. RX/RY/RZ/XX are physical native gates. FX/FY/FZ are
// ideal Pauli frame changes inserted by randomized compiling; they are exempt
// from the single-qubit noise model (in hardware they merge into adjacent
// low-error single-qubit gates). BARRIER_OPEN/CLOSE bracket a hard two-qubit
// gate block; BARRIER_OPEN records the block's (control, target).
enum class OpKind {
  RX,
  RY,
  RZ,
  XX,
  FX,
  FY,
  FZ,
  BARRIER_OPEN,
  BARRIER_CLOSE
};

struct Instruction {
  OpKind kind;
  double angle = 0.0;
  int t0 = 0;
  int t1 = -1;
};

enum class CompileMode { standard, hidden_inverse };

struct Circuit {
  int n_qubits = 1;
  std::vector<Instruction> ins;
  CompileMode mode = CompileMode::standard;

  void append(const GateOp& g) {
    switch (g.kind) {
      case GateKind::RX: ins.push_back({OpKind::RX, g.angle, g.t0}); break;
      case GateKind::RY: ins.push_back({OpKind::RY, g.angle, g.t0}); break;
      case GateKind::RZ: ins.push_back({OpKind::RZ, g.angle, g.t0}); break;
      case GateKind::XX:
        ins.push_back({OpKind::XX, g.angle, g.t0, g.t1});
        break;
    }
  }

  void append(const GateSeq& seq) {
    for (const GateOp& g : seq) append(g);
  }

  // Appends a gate sequence bracketed as a hard block for twirling.
  void append_hard_block(const GateSeq& seq, int control, int target) {
    ins.push_back({OpKind::BARRIER_OPEN, 0.0, control, target});
    append(seq);
    ins.push_back({OpKind::BARRIER_CLOSE, 0.0, control, target});
  }
};

namespace detail {

// Per-call cache of gate matrices: circuits repeat the same few angles
// hundreds of times, and the closed-form exponential dominates otherwise.
class GateMatrixCache {
 public:
  const ComplexMatrix& get(OpKind kind, double angle, const SqNoiseParams& p) {
    for (const auto& e : entries_) {
      if (e.kind == kind && e.angle == angle) return e.mat;
    }
    entries_.push_back({kind, angle, build(kind, angle, p)});
    return entries_.back().mat;
  }

 private:
  struct Entry {
    OpKind kind;
    double angle;
    ComplexMatrix mat;
  };

  static ComplexMatrix build(OpKind kind, double angle,
                             const SqNoiseParams& p) {
    switch (kind) {
      case OpKind::RX: return noisy_rx(angle, p);
      case OpKind::RY: return noisy_ry(angle, p);
      case OpKind::RZ: return rz(angle);
      case OpKind::FX: return pauli_x();
      case OpKind::FY: return pauli_y();
      case OpKind::FZ: return pauli_z();
      default: throw std::logic_error("GateMatrixCache: not a 1-qubit gate");
    }
  }

  std::vector<Entry> entries_;
};

}  // namespace detail

// Simulates the circuit on a density matrix, left to right. RX/RY carry the
// single-qubit noise model; RZ is ideal (virtual frame rotation); XX is the
// noisy MS channel built from `ms`. In MsNoiseParams::Mode::sampled a phonon
// number is drawn per XX instruction from `rng` (one trajectory, as in a
// single experimental shot); analytic mode applies the exact mixture.
inline DensityMatrix simulate(const Circuit& c, const SqNoiseParams& sq,
                              const MsNoiseParams& ms,
                              const DensityMatrix& initial,
                              Rng* rng = nullptr) {
  if (initial.n_qubits != c.n_qubits) {
    throw std::invalid_argument("simulate: register size mismatch");
  }
  DensityMatrix dm = initial;
  detail::GateMatrixCache cache;
  for (const Instruction& in : c.ins) {
    switch (in.kind) {
      case OpKind::BARRIER_OPEN:
      case OpKind::BARRIER_CLOSE:
        break;
      case OpKind::XX: {
        const MsChannel ch = noisy_xx_channel(in.angle, ms);
        if (ms.mode == MsNoiseParams::Mode::sampled) {
          if (rng == nullptr) {
            throw std::invalid_argument(
                "simulate: sampled MS mode requires an RNG");
          }
          const double a = ch.draw_angle(*rng);
          dm = apply_unitary(dm, xx(a), {in.t0, in.t1});
          dm = apply_depolarizing(dm, ms.depol_p, {in.t0, in.t1});
        } else {
          dm = ch.apply_analytic(dm, in.t0, in.t1);
        }
        break;
      }
      default: {
        const ComplexMatrix& u = cache.get(in.kind, in.angle, sq);
        dm = apply_unitary(dm, u, {in.t0});
        break;
      }
    }
  }
  return dm;
}

// Noiseless unitary of the circuit (barriers skipped, frame Paulis ideal).
inline ComplexMatrix ideal_unitary(const Circuit& c) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.n_qubits);
  for (const Instruction& in : c.ins) {
    ComplexMatrix m;
    std::vector<int> targets{in.t0};
    switch (in.kind) {
      case OpKind::BARRIER_OPEN:
      case OpKind::BARRIER_CLOSE: continue;
      case OpKind::RX: m = rx(in.angle); break;
      case OpKind::RY: m = ry(in.angle); break;
      case OpKind::RZ: m = rz(in.angle); break;
      case OpKind::FX: m = pauli_x(); break;
      case OpKind::FY: m = pauli_y(); break;
      case OpKind::FZ: m = pauli_z(); break;
      case OpKind::XX:
        m = xx(in.angle);
        targets = {in.t0, in.t1};
        break;
    }
    u = embed_unitary(m, targets, c.n_qubits) * u;
  }
  return u;
}

// One instruction per line: KIND angle targets. Angles print with 17
// significant digits so serialization round-trips doubles exactly.
inline std::string serialize(const Circuit& c) {
  static const char* names[] = {"RX", "RY", "RZ", "XX", "FX",
                                "FY", "FZ", "BARRIER_OPEN", "BARRIER_CLOSE"};
  std::string out;
  char buf[96];
  for (const Instruction& in : c.ins) {
    const char* name = names[static_cast<int>(in.kind)];
    if (in.kind == OpKind::BARRIER_OPEN || in.kind == OpKind::BARRIER_CLOSE) {
      std::snprintf(buf, sizeof buf, "%s %d %d\n", name, in.t0, in.t1);
    } else if (in.t1 >= 0) {
      std::snprintf(buf, sizeof buf, "%s %.17g %d %d\n", name, in.angle, in.t0,
                    in.t1);
    } else {
      std::snprintf(buf, sizeof buf, "%s %.17g %d\n", name, in.angle, in.t0);
    }
    out += buf;
  }
  return out;
}

// --- Pauli twirling ---------------------------------------------------------

// The ideal CNOT unitary with the given control and target wires.
inline ComplexMatrix cnot_matrix(int control, int target) {
  ComplexMatrix c(4, 4);
  auto bit_of = [](int q) { return 1 - q; };  // qubit 0 = MSB
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t cb = (i >> bit_of(control)) & 1u;
    std::size_t j = i;
    if (cb) j ^= std::size_t{1} << bit_of(target);
    c(j, i) = 1.0;
  }
  return c;
}

// Conjugates a two-qubit Pauli through the ideal CNOT:
// CNOT P CNOT^dagger = sign * P'. Computed by projecting the conjugated
// matrix back onto the Pauli basis, which is immune to sign-table mistakes.
inline std::pair<PauliString, int> conjugate_pauli_through_cnot(
    const PauliString& p, int control, int target) {
  if (p.n_qubits() != 2) {
    throw std::invalid_argument(
        "conjugate_pauli_through_cnot: need a 2-qubit Pauli");
  }
  const ComplexMatrix c = cnot_matrix(control, target);
  const ComplexMatrix q = c * p.to_matrix() * c.dagger();
  static const char* kChars = "IXYZ";
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const std::string label{kChars[a], kChars[b]};
      const cplx coef =
          (PauliString(label).to_matrix().dagger() * q).trace() * cplx(0.25);
      if (std::abs(std::abs(coef.real()) - 1.0) < 1e-9 &&
          std::abs(coef.imag()) < 1e-9) {
        return {PauliString(label), coef.real() > 0 ? 1 : -1};
      }
    }
  }
  throw std::logic_error("conjugate_pauli_through_cnot: not a signed Pauli");
}

// One twirl frame: for every hard block, the random Pauli applied before it
// and the correction after it. The correction is the conjugation of the
// random Pauli through the block's ideal CNOT, so the twirled circuit's
// noiseless unitary equals the original's up to global phase (the conjugation
// sign folds into that phase and is dropped after verification).
struct TwirlFrame {
  std::vector<std::pair<PauliString, PauliString>> blocks;  // (pre, post)
};

inline std::vector<std::pair<std::size_t, std::size_t>> find_hard_blocks(
    const Circuit& c) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t open = 0;
  bool in_block = false;
  for (std::size_t i = 0; i < c.ins.size(); ++i) {
    if (c.ins[i].kind == OpKind::BARRIER_OPEN) {
      if (in_block) throw std::invalid_argument("nested hard blocks");
      open = i;
      in_block = true;
    } else if (c.ins[i].kind == OpKind::BARRIER_CLOSE) {
      if (!in_block) throw std::invalid_argument("unmatched barrier close");
      blocks.emplace_back(open, i);
      in_block = false;
    }
  }
  if (in_block) throw std::invalid_argument("unmatched barrier open");
  return blocks;
}

namespace detail {

inline PauliString frame_pauli(std::size_t idx) {
  static const char* kChars = "IXYZ";
  return PauliString(
      {kChars[(idx / 4) % 4], kChars[idx % 4]});  // char 0 acts on qubit 0
}

inline void insert_frame_ops(std::vector<Instruction>& out,
                             const PauliString& p) {
  for (std::size_t q = 0; q < p.label.size(); ++q) {
    switch (p.label[q]) {
      case 'I': break;
      case 'X': out.push_back({OpKind::FX, 0.0, static_cast<int>(q)}); break;
      case 'Y': out.push_back({OpKind::FY, 0.0, static_cast<int>(q)}); break;
      case 'Z': out.push_back({OpKind::FZ, 0.0, static_cast<int>(q)}); break;
    }
  }
}

}  // namespace detail

// Rewrites the circuit with the frame's Paulis inserted just inside each hard
// block's barriers.
inline Circuit apply_twirl_frame(const Circuit& c, const TwirlFrame& frame) {
  const auto blocks = find_hard_blocks(c);
  if (frame.blocks.size() != blocks.size()) {
    throw std::invalid_argument("apply_twirl_frame: frame/block count mismatch");
  }
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.mode = c.mode;
  std::size_t b = 0;
  for (std::size_t i = 0; i < c.ins.size(); ++i) {
    if (b < blocks.size() && i == blocks[b].second) {
      detail::insert_frame_ops(out.ins, frame.blocks[b].second);
      out.ins.push_back(c.ins[i]);
      ++b;
    } else {
      out.ins.push_back(c.ins[i]);
      if (b < blocks.size() && i == blocks[b].first) {
        detail::insert_frame_ops(out.ins, frame.blocks[b].first);
      }
    }
  }
  return out;
}

// All 16^k twirl frames of a circuit with k hard blocks (k <= 2: 16 or 256
// frames; beyond that enumeration is the wrong tool).
inline std::vector<TwirlFrame> enumerate_twirl_frames(const Circuit& c) {
  const auto blocks = find_hard_blocks(c);
  const std::size_t k = blocks.size();
  if (k > 2) {
    throw std::invalid_argument("enumerate_twirl_frames: more than 2 hard blocks");
  }
  if (c.n_qubits != 2 && k > 0) {
    throw std::invalid_argument("enumerate_twirl_frames: twirling needs 2 qubits");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 16;

  std::vector<TwirlFrame> frames;
  frames.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    TwirlFrame f;
    std::size_t rest = idx;
    // Most significant digit indexes the first block.
    std::vector<std::size_t> digits(k, 0);
    for (std::size_t b_i = k; b_i-- > 0;) {
      digits[b_i] = rest % 16;
      rest /= 16;
    }
    for (std::size_t b_i = 0; b_i < k; ++b_i) {
      const PauliString pre = detail::frame_pauli(digits[b_i]);
      const Instruction& open = c.ins[blocks[b_i].first];
      const PauliString post =
          conjugate_pauli_through_cnot(pre, open.t0, open.t1).first;
      f.blocks.emplace_back(pre, post);
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

inline std::vector<Circuit> enumerate_twirls(const Circuit& c) {
  std::vector<Circuit> out;
  for (const TwirlFrame& f : enumerate_twirl_frames(c)) {
    out.push_back(apply_twirl_frame(c, f));
  }
  return out;
}

// Uniform sample of m circuits without replacement (partial Fisher-Yates),
// deterministic under the seed.
template <typename T>
inline std::vector<T> sample_without_replacement(const std::vector<T>& all,
                                                 std::size_t m,
                                                 std::uint64_t seed) {
  if (m > all.size()) {
    throw std::invalid_argument("sample: m exceeds population size");
  }
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(seed);
  std::vector<T> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng.index(idx.size() - i);
    std::swap(idx[i], idx[j]);
    out.push_back(all[idx[i]]);
  }
  return out;
}

inline std::vector<Circuit> sample_twirls(const std::vector<Circuit>& all,
                                          std::size_t m, std::uint64_t seed) {
  return sample_without_replacement(all, m, seed);
}

}  // namespace tiq

#endif  // TIQ_CIRCUIT_HPP
