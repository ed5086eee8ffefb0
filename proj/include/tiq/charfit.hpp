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

#ifndef TIQ_CHARFIT_HPP
#define TIQ_CHARFIT_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tiq/circuit.hpp"

namespace tiq {

// --- Sweep specification ----------------------------------------------------

// Which rotation pair the sweep exercises: X(Theta) Z(Phi) or Y(Theta) Z(Phi).
enum class SweepAxis { XZ, YZ };

// Whether each repetition closes with the native Hadamard or its hidden
// inverse. The native variant amplifies coherent errors; the inverse variant
// cancels them, isolating detuning.
enum class SweepCompile { native, inverse };

struct SweepSpec {
  SweepAxis axis = SweepAxis::XZ;
  SweepCompile compile = SweepCompile::inverse;
  int reps = 100;
  int n_points = 21;
  double half_range = kPi / 36.0;  // sweep covers [-half_range, +half_range]
  int shots = 200;
  std::uint64_t ordering_seed = 0;  // randomizes the grid visit order
};

inline void validate(const SweepSpec& s) {
  if (s.n_points < 2) throw std::invalid_argument("SweepSpec: n_points < 2");
  if (s.reps < 1) throw std::invalid_argument("SweepSpec: reps < 1");
  if (!(s.half_range > 0)) {
    throw std::invalid_argument("SweepSpec: half_range must be positive");
  }
  if (s.shots < 1) throw std::invalid_argument("SweepSpec: shots < 1");
}

// i-th of n grid values, symmetric about zero so that the k-th value is the
// exact negation of the (n-1-k)-th and the midpoint of an odd grid is 0.0.
inline double grid_value(const SweepSpec& s, int i) {
  return s.half_range * (2.0 * i - (s.n_points - 1)) / (s.n_points - 1);
}

// --- Phase-space maps ---------------------------------------------------------

enum class Provenance { simulated, ingested };

struct GridRecord {
  double theta = 0.0;
  double phi = 0.0;
  double p0 = 0.0;
  int shots = 0;  // 0 marks an analytic (infinite-shot) value
};

struct PhaseSpaceMap {
  std::vector<GridRecord> records;  // row-major: theta outer, phi inner
  Provenance provenance = Provenance::simulated;
};

// --- Sweep circuits and the forward model ------------------------------------

namespace detail {

// One repetition of the sweep pattern as a gate sequence on qubit 0.
inline GateSeq sweep_block(const SweepSpec& s, double theta, double phi) {
  GateSeq seq = h_native(0);
  seq.push_back({s.axis == SweepAxis::XZ ? GateKind::RX : GateKind::RY, theta,
                 0});
  seq.push_back({GateKind::RZ, phi, 0});
  const GateSeq closing =
      s.compile == SweepCompile::native ? h_native(0) : h_inverse(0);
  seq.insert(seq.end(), closing.begin(), closing.end());
  return seq;
}

inline ComplexMatrix mat_pow(ComplexMatrix base, unsigned e) {
  ComplexMatrix acc = ComplexMatrix::identity(base.rows());
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

// Fast forward model: the whole sweep circuit is unitary (only coherent
// noise), so the final state is (U_block)^reps |0> and p0 is one squared
// amplitude. Agrees with the density-matrix simulator to machine precision
// (asserted in the test suite); used inside fitting loops where the full
// simulator would dominate runtime.
inline ComplexMatrix sweep_state(const SweepSpec& s, double theta, double phi,
                                 const SqNoiseParams& p) {
  const ComplexMatrix u =
      mat_pow(seq_unitary(sweep_block(s, theta, phi), 1, p),
              static_cast<unsigned>(s.reps));
  ComplexMatrix psi(2, 1);
  psi(0, 0) = u(0, 0);
  psi(1, 0) = u(1, 0);
  return psi;
}

inline double predict_p0_fast(const SweepSpec& s, double theta, double phi,
                              const SqNoiseParams& p) {
  const ComplexMatrix psi = sweep_state(s, theta, phi, p);
  return std::norm(psi(0, 0));
}

inline DensityMatrix sweep_density(const SweepSpec& s, double theta,
                                   double phi, const SqNoiseParams& p) {
  const ComplexMatrix psi = sweep_state(s, theta, phi, p);
  DensityMatrix dm;
  dm.n_qubits = 1;
  dm.mat = ComplexMatrix(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      dm.mat(i, j) = psi(i, 0) * std::conj(psi(j, 0));
    }
  }
  return dm;
}

}  // namespace detail

inline Circuit build_sweep_circuit(const SweepSpec& s, double theta,
                                   double phi) {
  validate(s);
  Circuit c;
  c.n_qubits = 1;
  c.mode = s.compile == SweepCompile::inverse ? CompileMode::hidden_inverse
                                              : CompileMode::standard;
  const GateSeq block = detail::sweep_block(s, theta, phi);
  for (int r = 0; r < s.reps; ++r) c.append(block);
  return c;
}

// Analytic (infinite-shot) probability of measuring |0> after the sweep
// circuit under the given single-qubit noise. Z(Phi) is a virtual frame
// rotation and stays ideal.
inline double predict_p0(const SweepSpec& s, double theta, double phi,
                         const SqNoiseParams& p) {
  const Circuit c = build_sweep_circuit(s, theta, phi);
  const DensityMatrix dm = simulate(c, p, MsNoiseParams{}, dm_new(1, 0));
  return population(dm, 0);
}

enum class GridMode { analytic, sampled };

// Runs the full n x n sweep. Points are visited in a randomized order (as the
// experiment does, to decorrelate slow drifts) but every per-point sample seed
// derives from the point's grid index, so the output is independent of visit
// order. Sampled mode records spec.shots per point; analytic mode records
// shots = 0.
inline PhaseSpaceMap run_grid(const SweepSpec& s, const SqNoiseParams& p,
                              GridMode mode, std::uint64_t rng_seed) {
  validate(s);
  const int n = s.n_points;
  PhaseSpaceMap map;
  map.provenance = Provenance::simulated;
  map.records.resize(static_cast<std::size_t>(n) * n);

  std::vector<std::size_t> order(map.records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  order = sample_without_replacement(order, order.size(), s.ordering_seed);

  for (const std::size_t idx : order) {
    const int i = static_cast<int>(idx) / n;
    const int j = static_cast<int>(idx) % n;
    GridRecord rec;
    rec.theta = grid_value(s, i);
    rec.phi = grid_value(s, j);
    if (mode == GridMode::analytic) {
      // The forward model can land a few ulps outside [0, 1]; recorded values
      // are probabilities and must survive the ingest validation round trip.
      rec.p0 = std::clamp(detail::predict_p0_fast(s, rec.theta, rec.phi, p),
                          0.0, 1.0);
      rec.shots = 0;
    } else {
      const DensityMatrix dm = detail::sweep_density(s, rec.theta, rec.phi, p);
      const auto counts =
          sample_counts(dm, s.shots, derive_seed(rng_seed, idx, 0));
      rec.p0 = static_cast<double>(counts[0]) / s.shots;
      rec.shots = s.shots;
    }
    map.records[idx] = rec;
  }
  return map;
}

// --- Levenberg-Marquardt fit ---------------------------------------------------

// Box bounds on the magnitude of each fitted parameter.
struct FitBounds {
  double epsilon = 0.2;
  double phase = 0.2;
  double detuning_ratio = 0.2;
};

struct FitResult {
  SqNoiseParams params;
  double residual_norm = 0.0;         // Euclidean norm of the residual vector
  std::array<double, 9> covariance{};  // row-major 3x3
  bool covariance_available = false;
  int iterations = 0;
  bool converged = false;
  std::string message;  // set when degenerate input or singular covariance
};

namespace detail {

// Solves a 3x3 linear system in place by Gaussian elimination with partial
// pivoting. Returns false when the matrix is numerically singular.
inline bool solve3(std::array<std::array<double, 3>, 3> a,
                   std::array<double, 3> b, std::array<double, 3>& x) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-300) return false;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = 2; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < 3; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return true;
}

inline bool invert3(const std::array<std::array<double, 3>, 3>& a,
                    std::array<std::array<double, 3>, 3>& inv) {
  for (int col = 0; col < 3; ++col) {
    std::array<double, 3> e{0.0, 0.0, 0.0};
    e[col] = 1.0;
    std::array<double, 3> x{};
    if (!solve3(a, e, x)) return false;
    for (int r = 0; r < 3; ++r) inv[r][col] = x[r];
  }
  return true;
}

inline double param_get(const SqNoiseParams& p, int k) {
  return k == 0 ? p.epsilon : (k == 1 ? p.phase : p.detuning_ratio);
}

inline void param_set(SqNoiseParams& p, int k, double v) {
  (k == 0 ? p.epsilon : (k == 1 ? p.phase : p.detuning_ratio)) = v;
}

inline SqNoiseParams clamp_params(SqNoiseParams p, const FitBounds& b) {
  const double lim[3] = {b.epsilon, b.phase, b.detuning_ratio};
  for (int k = 0; k < 3; ++k) {
    const double v = param_get(p, k);
    param_set(p, k, std::clamp(v, -lim[k], lim[k]));
  }
  return p;
}

inline double sum_sq(const std::vector<double>& r) {
  double s = 0.0;
  for (const double v : r) s += v * v;
  return s;
}

// Core Levenberg-Marquardt loop over an arbitrary residual vector.
// Forward-difference Jacobian with step 1e-6; damping lambda * diag(J^T J)
// multiplied by 10 on a rejected step and divided by 10 on an accepted one;
// terminates when the proposed step norm drops below 1e-10 or after 200
// iterations. The covariance is sigma^2 (J^T J)^-1 at the optimum with
// sigma^2 = SSR / (N - 3).
template <typename ResidualFn>
FitResult lm_engine(ResidualFn&& residuals, std::size_t n_rec,
                    const SqNoiseParams& initial, const FitBounds& bounds) {
  FitResult out;
  out.params = detail::clamp_params(initial, bounds);

  std::vector<double> r(n_rec);
  residuals(out.params, r);
  double ssr = sum_sq(r);

  const double kStep = 1e-6;
  std::vector<std::array<double, 3>> jac(n_rec);
  std::vector<double> r_pert(n_rec), r_trial(n_rec);

  auto fill_jacobian = [&](const SqNoiseParams& q,
                           const std::vector<double>& r0) {
    for (int k = 0; k < 3; ++k) {
      SqNoiseParams qk = q;
      detail::param_set(qk, k, detail::param_get(qk, k) + kStep);
      residuals(qk, r_pert);
      for (std::size_t i = 0; i < n_rec; ++i) {
        jac[i][k] = (r_pert[i] - r0[i]) / kStep;
      }
    }
  };
  auto normal_matrix = [&](std::array<std::array<double, 3>, 3>& jtj,
                           std::array<double, 3>& jtr,
                           const std::vector<double>& r0) {
    jtj = {};
    jtr = {};
    for (std::size_t i = 0; i < n_rec; ++i) {
      for (int a = 0; a < 3; ++a) {
        jtr[a] += jac[i][a] * r0[i];
        for (int b = 0; b < 3; ++b) jtj[a][b] += jac[i][a] * jac[i][b];
      }
    }
  };

  double lambda = 1e-3;
  while (out.iterations < 200) {
    ++out.iterations;
    fill_jacobian(out.params, r);
    std::array<std::array<double, 3>, 3> jtj;
    std::array<double, 3> jtr;
    normal_matrix(jtj, jtr, r);

    std::array<std::array<double, 3>, 3> damped = jtj;
    for (int k = 0; k < 3; ++k) damped[k][k] += lambda * jtj[k][k];
    std::array<double, 3> rhs{-jtr[0], -jtr[1], -jtr[2]};
    std::array<double, 3> delta{};
    if (!detail::solve3(damped, rhs, delta)) {
      lambda *= 10.0;
      continue;
    }
    const double step_norm = std::sqrt(delta[0] * delta[0] +
                                       delta[1] * delta[1] +
                                       delta[2] * delta[2]);

    SqNoiseParams trial = out.params;
    for (int k = 0; k < 3; ++k) {
      detail::param_set(trial, k, detail::param_get(trial, k) + delta[k]);
    }
    trial = detail::clamp_params(trial, bounds);
    residuals(trial, r_trial);
    const double trial_ssr = sum_sq(r_trial);
    if (trial_ssr < ssr) {
      assert(trial_ssr <= ssr);  // accepted SSR is monotone non-increasing
      out.params = trial;
      std::swap(r, r_trial);
      ssr = trial_ssr;
      lambda /= 10.0;
    } else {
      lambda *= 10.0;
    }
    if (step_norm < 1e-10) {
      out.converged = true;
      break;
    }
  }

  out.residual_norm = std::sqrt(ssr);

  fill_jacobian(out.params, r);
  std::array<std::array<double, 3>, 3> jtj;
  std::array<double, 3> jtr;
  normal_matrix(jtj, jtr, r);
  std::array<std::array<double, 3>, 3> inv;
  if (detail::invert3(jtj, inv)) {
    const double sigma2 = ssr / static_cast<double>(n_rec - 3);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        out.covariance[static_cast<std::size_t>(a) * 3 + b] =
            sigma2 * inv[a][b];
      }
    }
    out.covariance_available = true;
  } else {
    out.message = "covariance unavailable: singular normal matrix at optimum";
  }
  return out;
}

}  // namespace detail

// Fits (epsilon, phase, detuning_ratio) to an observed phase-space map by
// Levenberg-Marquardt on the analytic forward model; see detail::lm_engine
// for the algorithm parameters.
inline FitResult lm_fit(const PhaseSpaceMap& map, const SweepSpec& spec,
                        const SqNoiseParams& initial,
                        const FitBounds& bounds = {}) {
  validate(spec);
  const std::size_t n_expected =
      static_cast<std::size_t>(spec.n_points) * spec.n_points;
  if (map.records.size() != n_expected) {
    throw std::invalid_argument("lm_fit: grid incomplete for the given spec");
  }

  bool degenerate = true;
  for (const GridRecord& rec : map.records) {
    if (rec.p0 != map.records.front().p0) {
      degenerate = false;
      break;
    }
  }
  auto residuals = [&](const SqNoiseParams& q, std::vector<double>& r) {
    for (std::size_t i = 0; i < map.records.size(); ++i) {
      const GridRecord& rec = map.records[i];
      r[i] = rec.p0 - detail::predict_p0_fast(spec, rec.theta, rec.phi, q);
    }
  };
  if (degenerate) {
    FitResult out;
    out.params = detail::clamp_params(initial, bounds);
    std::vector<double> r(map.records.size());
    residuals(out.params, r);
    out.residual_norm = std::sqrt(detail::sum_sq(r));
    out.converged = false;
    out.message = "degenerate grid: every observed p0 is identical";
    return out;
  }
  return detail::lm_engine(residuals, map.records.size(), initial, bounds);
}

// Joint fit over several sweep variants (e.g. inverse-XZ plus inverse-YZ):
// the residual vectors are concatenated, so every map constrains the same
// three parameters.
inline FitResult lm_fit_joint(
    const std::vector<std::pair<PhaseSpaceMap, SweepSpec>>& sets,
    const SqNoiseParams& initial, const FitBounds& bounds = {}) {
  if (sets.empty()) {
    throw std::invalid_argument("lm_fit_joint: no maps given");
  }
  std::size_t total = 0;
  for (const auto& [map, spec] : sets) {
    validate(spec);
    const std::size_t n_expected =
        static_cast<std::size_t>(spec.n_points) * spec.n_points;
    if (map.records.size() != n_expected) {
      throw std::invalid_argument(
          "lm_fit_joint: grid incomplete for its spec");
    }
    total += map.records.size();
  }
  const double first = sets.front().first.records.front().p0;
  bool degenerate = true;
  for (const auto& [map, spec] : sets) {
    for (const GridRecord& rec : map.records) {
      if (rec.p0 != first) {
        degenerate = false;
        break;
      }
    }
    if (!degenerate) break;
  }
  auto residuals = [&](const SqNoiseParams& q, std::vector<double>& r) {
    std::size_t k = 0;
    for (const auto& [map, spec] : sets) {
      for (const GridRecord& rec : map.records) {
        r[k++] = rec.p0 - detail::predict_p0_fast(spec, rec.theta, rec.phi, q);
      }
    }
  };
  if (degenerate) {
    FitResult out;
    out.params = detail::clamp_params(initial, bounds);
    std::vector<double> r(total);
    residuals(out.params, r);
    out.residual_norm = std::sqrt(detail::sum_sq(r));
    out.converged = false;
    out.message = "degenerate grid: every observed p0 is identical";
    return out;
  }
  return detail::lm_engine(residuals, total, initial, bounds);
}

// --- Serialization ------------------------------------------------------------

inline std::string write_grid_csv(const PhaseSpaceMap& map) {
  std::string out = "theta_rad,phi_rad,p0,shots\n";
  char buf[160];
  for (const GridRecord& r : map.records) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d\n", r.theta, r.phi,
                  r.p0, r.shots);
    out += buf;
  }
  return out;
}

// Parses and validates a grid CSV. Every rejected input carries a distinct
// line-numbered diagnostic so a bad experimental file points at its own flaw.
inline PhaseSpaceMap ingest_grid(std::istream& in) {
  auto fail = [](int line, const std::string& what) {
    throw std::runtime_error("grid csv line " + std::to_string(line) + ": " +
                             what);
  };
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) {
    throw std::runtime_error("grid csv: empty input");
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "theta_rad,phi_rad,p0,shots") {
    fail(lineno, "expected header 'theta_rad,phi_rad,p0,shots'");
  }

  PhaseSpaceMap map;
  map.provenance = Provenance::ingested;
  std::set<std::pair<double, double>> seen;
  std::set<double> thetas, phis;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::array<std::string, 4> field;
    std::size_t start = 0;
    int nf = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        if (nf >= 4) fail(lineno, "expected 4 comma-separated fields");
        field[nf++] = line.substr(start, i - start);
        start = i + 1;
      }
    }
    if (nf != 4) fail(lineno, "expected 4 comma-separated fields");

    auto parse_num = [&](const std::string& s, const char* name) {
      double v = 0.0;
      const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        fail(lineno, std::string("malformed ") + name + " value '" + s + "'");
      }
      return v;
    };
    GridRecord rec;
    rec.theta = parse_num(field[0], "theta_rad");
    rec.phi = parse_num(field[1], "phi_rad");
    rec.p0 = parse_num(field[2], "p0");
    const double shots_v = parse_num(field[3], "shots");
    if (shots_v < 0 || shots_v != std::floor(shots_v)) {
      fail(lineno, "shots must be a non-negative integer");
    }
    rec.shots = static_cast<int>(shots_v);

    if (rec.p0 < 0.0 || rec.p0 > 1.0) {
      fail(lineno, "p0 out of range [0, 1]: " + field[2]);
    }
    if (!seen.insert({rec.theta, rec.phi}).second) {
      fail(lineno, "duplicate grid point (" + field[0] + ", " + field[1] + ")");
    }
    thetas.insert(rec.theta);
    phis.insert(rec.phi);
    map.records.push_back(rec);
  }

  const std::size_t nt = thetas.size(), np = phis.size();
  if (map.records.empty() || nt != np || map.records.size() != nt * np) {
    throw std::runtime_error(
        "grid csv: incomplete grid: found " +
        std::to_string(map.records.size()) + " points over " +
        std::to_string(nt) + " theta and " + std::to_string(np) +
        " phi values; expected a complete square grid");
  }
  return map;
}

// JSON form of a fit result. Keys and layout are part of the tool's public
// contract; covariance is null when the normal matrix was singular.
inline std::string fit_result_to_json(const FitResult& f) {
  char buf[128];
  std::string out = "{\n";
  auto add_num = [&](const char* key, double v, bool comma = true) {
    std::snprintf(buf, sizeof buf, "  \"%s\": %.17g%s\n", key, v,
                  comma ? "," : "");
    out += buf;
  };
  add_num("epsilon", f.params.epsilon);
  add_num("phase", f.params.phase);
  add_num("detuning_ratio", f.params.detuning_ratio);
  add_num("residual_norm", f.residual_norm);
  if (f.covariance_available) {
    out += "  \"covariance\": [";
    for (int i = 0; i < 9; ++i) {
      std::snprintf(buf, sizeof buf, "%s%.17g", i ? ", " : "",
                    f.covariance[static_cast<std::size_t>(i)]);
      out += buf;
    }
    out += "],\n";
  } else {
    out += "  \"covariance\": null,\n";
  }
  std::snprintf(buf, sizeof buf, "  \"iterations\": %d,\n", f.iterations);
  out += buf;
  out += std::string("  \"converged\": ") + (f.converged ? "true" : "false") +
         "\n}\n";
  return out;
}

}  // namespace tiq

#endif  // TIQ_CHARFIT_HPP
