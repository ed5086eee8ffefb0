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

#ifndef TIQ_DRIFT_HPP
#define TIQ_DRIFT_HPP

#include <string>
#include <utility>
#include <vector>

#include "tiq/charfit.hpp"

namespace tiq {

// Calibration-drift scenarios: parameters wandering naturally, freshly
// recalibrated hardware, and deliberate amplitude / phase error injection
// ramps used to validate that the fit tracks a known truth.
enum class DriftScenario { natural, recalibrated, amp_injected, phase_injected };

struct DriftSeries {
  DriftScenario scenario = DriftScenario::natural;
  std::vector<std::pair<int, FitResult>> runs;  // (run_index, fit), increasing
};

// Per-run ground-truth schedules for each scenario. Injected scenarios ramp
// the targeted parameter linearly from its base value to base + ramp across
// the runs; recalibrated resets every parameter to zero.
inline std::vector<SqNoiseParams> build_drift_schedule(DriftScenario scenario,
                                                       int n_runs,
                                                       const SqNoiseParams& base,
                                                       double ramp) {
  if (n_runs < 1) {
    throw std::invalid_argument("build_drift_schedule: n_runs < 1");
  }
  std::vector<SqNoiseParams> schedule;
  schedule.reserve(static_cast<std::size_t>(n_runs));
  for (int r = 0; r < n_runs; ++r) {
    const double t = n_runs == 1 ? 0.0 : static_cast<double>(r) / (n_runs - 1);
    SqNoiseParams p = base;
    switch (scenario) {
      case DriftScenario::natural:
        break;
      case DriftScenario::recalibrated:
        p = SqNoiseParams{};
        break;
      case DriftScenario::amp_injected:
        p.epsilon = base.epsilon + ramp * t;
        break;
      case DriftScenario::phase_injected:
        p.phase = base.phase + ramp * t;
        break;
    }
    schedule.push_back(p);
  }
  return schedule;
}

// Runs the full characterization protocol once per run: generate a sampled
// phase-space map under that run's true parameters, then fit it from a cold
// start. Each run draws from its own derived seed so the series is
// reproducible and insensitive to evaluation order.
inline DriftSeries track_drift(DriftScenario scenario, int n_runs,
                               const std::vector<SqNoiseParams>& truth_schedule,
                               int shots, std::uint64_t seed,
                               const SweepSpec& base_spec = {}) {
  if (n_runs < 1) throw std::invalid_argument("track_drift: n_runs < 1");
  if (truth_schedule.size() != static_cast<std::size_t>(n_runs)) {
    throw std::invalid_argument(
        "track_drift: truth_schedule length must equal n_runs");
  }
  DriftSeries series;
  series.scenario = scenario;
  for (int r = 0; r < n_runs; ++r) {
    SweepSpec spec = base_spec;
    spec.shots = shots;
    spec.ordering_seed = derive_seed(seed, static_cast<std::uint64_t>(r), 1);
    const PhaseSpaceMap map =
        run_grid(spec, truth_schedule[static_cast<std::size_t>(r)],
                 GridMode::sampled,
                 derive_seed(seed, static_cast<std::uint64_t>(r), 0));
    series.runs.emplace_back(r, lm_fit(map, spec, SqNoiseParams{}));
  }
  return series;
}

inline std::string write_drift_csv(const DriftSeries& series) {
  std::string out = "run,epsilon,phase,detuning_ratio,residual_norm\n";
  char buf[160];
  for (const auto& [run, fit] : series.runs) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", run,
                  fit.params.epsilon, fit.params.phase,
                  fit.params.detuning_ratio, fit.residual_norm);
    out += buf;
  }
  return out;
}

}  // namespace tiq

#endif  // TIQ_DRIFT_HPP
