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

// Command-line front end: characterization sweeps and fits, drift tracking,
// VQE landscapes, MS-gate fidelity and the exact ground energy. Exit codes:
// 0 success, 2 input validation error, 3 numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tiq/charfit.hpp"
#include "tiq/config.hpp"
#include "tiq/drift.hpp"
#include "tiq/ms_channel.hpp"
#include "tiq/svg.hpp"
#include "tiq/vqe.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw tiq::ConfigError("cannot open output file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

tiq::NoiseConfig load_config_or_default(const std::string& path) {
  if (path.empty()) return tiq::NoiseConfig{};
  return tiq::load_noise_config(path);
}

struct CharacterizeArgs {
  std::string axis = "xz";
  std::string compile = "inverse";
  int reps = 100;
  int points = 21;
  double range = tiq::kPi / 36.0;
  int shots = 200;
  bool sampled = false;
  std::string noise_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t ordering_seed = 0;
  std::string out_path;
  std::string svg_path;
  bool fit = false;
  bool joint = false;
  std::string fit_out;
  std::string ingest_path;
};

tiq::SweepSpec spec_from(const CharacterizeArgs& a) {
  tiq::SweepSpec spec;
  spec.axis = a.axis == "yz" ? tiq::SweepAxis::YZ : tiq::SweepAxis::XZ;
  spec.compile = a.compile == "native" ? tiq::SweepCompile::native
                                       : tiq::SweepCompile::inverse;
  spec.reps = a.reps;
  spec.n_points = a.points;
  spec.half_range = a.range;
  spec.shots = a.shots;
  spec.ordering_seed = a.ordering_seed;
  return spec;
}

void run_characterize(const CharacterizeArgs& a) {
  const tiq::NoiseConfig cfg = load_config_or_default(a.noise_path);

  tiq::SweepSpec spec = spec_from(a);
  tiq::PhaseSpaceMap map;
  if (!a.ingest_path.empty()) {
    if (!a.fit) {
      throw tiq::ConfigError("--ingest requires --fit (nothing else to do)");
    }
    if (a.joint) {
      throw tiq::ConfigError("--ingest cannot be combined with --joint");
    }
    std::ifstream in(a.ingest_path, std::ios::binary);
    if (!in) {
      throw tiq::ConfigError("cannot open grid file '" + a.ingest_path + "'");
    }
    try {
      map = tiq::ingest_grid(in);
    } catch (const std::runtime_error& e) {
      throw tiq::ConfigError(e.what());
    }
    int n = 1;
    while (static_cast<std::size_t>(n) * n < map.records.size()) ++n;
    spec.n_points = n;
  } else {
    if (a.sampled && !a.seed_given) {
      throw tiq::ConfigError("--seed is required with --sampled");
    }
    map = tiq::run_grid(spec, cfg.single_qubit,
                        a.sampled ? tiq::GridMode::sampled
                                  : tiq::GridMode::analytic,
                        a.seed);
  }

  write_file(a.out_path, tiq::write_grid_csv(map));

  if (!a.svg_path.empty()) {
    std::vector<double> vals(map.records.size());
    for (std::size_t i = 0; i < map.records.size(); ++i) {
      vals[i] = map.records[i].p0;
    }
    // Records are theta-major, so rows = theta (y axis), cols = phi (x axis).
    const int n = spec.n_points;
    write_file(a.svg_path,
               tiq::svg_heatmap(vals, n, n, -spec.half_range, spec.half_range,
                                -spec.half_range, spec.half_range,
                                "phase-space population p0", "phi (rad)",
                                "theta (rad)"));
  }

  if (a.fit) {
    tiq::FitResult fit;
    if (a.joint) {
      tiq::SweepSpec other = spec;
      other.axis = spec.axis == tiq::SweepAxis::XZ ? tiq::SweepAxis::YZ
                                                   : tiq::SweepAxis::XZ;
      const tiq::PhaseSpaceMap map2 =
          tiq::run_grid(other, cfg.single_qubit,
                        a.sampled ? tiq::GridMode::sampled
                                  : tiq::GridMode::analytic,
                        tiq::derive_seed(a.seed, 1, 5));
      fit = tiq::lm_fit_joint({{map, spec}, {map2, other}}, tiq::SqNoiseParams{});
    } else {
      fit = tiq::lm_fit(map, spec, tiq::SqNoiseParams{});
    }
    const std::string path =
        a.fit_out.empty() ? a.out_path + ".fit.json" : a.fit_out;
    write_file(path, tiq::fit_result_to_json(fit));
  }
}

struct DriftArgs {
  std::string scenario = "natural";
  int runs = 10;
  double ramp = 0.02;
  int shots = 200;
  int points = 21;
  int reps = 100;
  std::string noise_path;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string svg_path;
};

void run_drift(const DriftArgs& a) {
  const tiq::NoiseConfig cfg = load_config_or_default(a.noise_path);
  tiq::DriftScenario scenario;
  if (a.scenario == "natural") {
    scenario = tiq::DriftScenario::natural;
  } else if (a.scenario == "recalibrated") {
    scenario = tiq::DriftScenario::recalibrated;
  } else if (a.scenario == "amp-injected") {
    scenario = tiq::DriftScenario::amp_injected;
  } else if (a.scenario == "phase-injected") {
    scenario = tiq::DriftScenario::phase_injected;
  } else {
    throw tiq::ConfigError("unknown drift scenario '" + a.scenario + "'");
  }

  const std::vector<tiq::SqNoiseParams> schedule =
      tiq::build_drift_schedule(scenario, a.runs, cfg.single_qubit, a.ramp);
  tiq::SweepSpec base;
  base.n_points = a.points;
  base.reps = a.reps;
  const tiq::DriftSeries series =
      tiq::track_drift(scenario, a.runs, schedule, a.shots, a.seed, base);

  write_file(a.out_path, tiq::write_drift_csv(series));

  if (!a.svg_path.empty()) {
    tiq::SvgSeries eps{"epsilon (fit)", {}, true, true, "#1f77b4", false};
    tiq::SvgSeries phs{"phase (fit)", {}, true, true, "#d62728", false};
    tiq::SvgSeries det{"detuning (fit)", {}, true, true, "#2ca02c", false};
    tiq::SvgSeries eps_t{"epsilon (truth)", {}, true, false, "#1f77b4", true};
    tiq::SvgSeries phs_t{"phase (truth)", {}, true, false, "#d62728", true};
    for (const auto& [run, fit] : series.runs) {
      eps.points.emplace_back(run, fit.params.epsilon);
      phs.points.emplace_back(run, fit.params.phase);
      det.points.emplace_back(run, fit.params.detuning_ratio);
      eps_t.points.emplace_back(run,
                                schedule[static_cast<std::size_t>(run)].epsilon);
      phs_t.points.emplace_back(run,
                                schedule[static_cast<std::size_t>(run)].phase);
    }
    write_file(a.svg_path,
               tiq::svg_line_plot("fitted error parameters vs run", "run",
                                  "parameter value",
                                  {eps, phs, det, eps_t, phs_t}));
  }
}

struct VqeArgs {
  std::string mode = "default";
  std::string mitigation = "none";
  bool purify = false;
  int alphas = 41;
  int shots = 200;
  std::string noise_path;
  double inject_rotation = 0.0;
  int rc_circuits = 10;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  std::string svg_path;
};

void run_vqe(const VqeArgs& a) {
  const tiq::NoiseConfig cfg = load_config_or_default(a.noise_path);
  tiq::MsNoiseParams ms = cfg.ms;
  ms.overrotation += a.inject_rotation;
  const tiq::CompileMode mode = a.mode == "hi" ? tiq::CompileMode::hidden_inverse
                                               : tiq::CompileMode::standard;
  const tiq::Mitigation mit =
      a.mitigation == "rc" ? tiq::Mitigation::rc : tiq::Mitigation::none;
  if (a.shots > 0 && !a.seed_given) {
    throw tiq::ConfigError("--seed is required when --shots > 0");
  }
  if (a.shots == 0 && ms.mode == tiq::MsNoiseParams::Mode::sampled) {
    throw tiq::ConfigError(
        "--shots 0 (analytic) requires the analytic MS mode");
  }

  const std::vector<double> alphas = tiq::uniform_alphas(a.alphas);
  std::vector<tiq::LandscapePoint> rows;
  auto keep = [&](const std::vector<tiq::LandscapePoint>& pts) {
    for (const tiq::LandscapePoint& p : pts) {
      if (p.purified && !a.purify) continue;
      rows.push_back(p);
    }
  };

  keep(tiq::landscape(alphas, mode, mit, cfg.single_qubit, ms, a.shots, a.seed,
                      a.rc_circuits));
  const bool have_sampled = a.shots > 0;
  if (have_sampled) {
    // Analytic reference curve of the same noise model for the overlay.
    tiq::MsNoiseParams ms_a = ms;
    ms_a.mode = tiq::MsNoiseParams::Mode::analytic;
    keep(tiq::landscape(alphas, mode, mit, cfg.single_qubit, ms_a, 0, a.seed,
                        a.rc_circuits));
  }
  write_file(a.out_path, tiq::write_landscape_csv(rows));

  if (!a.svg_path.empty()) {
    tiq::SvgSeries raw{"raw", {}, false, true, "#1f77b4", false};
    tiq::SvgSeries pur{"purified", {}, false, true, "#d62728", false};
    tiq::SvgSeries raw_a{"analytic", {}, true, false, "#1f77b4", false};
    tiq::SvgSeries pur_a{"analytic purified", {}, true, false, "#d62728",
                         false};
    for (const tiq::LandscapePoint& p : rows) {
      const bool analytic = p.shots == 0;
      if (!p.purified && !analytic && have_sampled) {
        raw.points.emplace_back(p.alpha, p.energy);
      } else if (p.purified && !analytic && have_sampled) {
        pur.points.emplace_back(p.alpha, p.energy);
      } else if (!p.purified && analytic) {
        raw_a.points.emplace_back(p.alpha, p.energy);
      } else if (p.purified && analytic) {
        pur_a.points.emplace_back(p.alpha, p.energy);
      }
    }
    const double e0 = tiq::exact_ground_energy(tiq::h2_hamiltonian());
    tiq::SvgSeries exact{"exact ground energy",
                         {{alphas.front(), e0}, {alphas.back(), e0}},
                         true,
                         false,
                         "#555555",
                         true};
    std::vector<tiq::SvgSeries> series;
    for (const tiq::SvgSeries& s : {raw, pur, raw_a, pur_a, exact}) {
      if (!s.points.empty()) series.push_back(s);
    }
    write_file(a.svg_path,
               tiq::svg_line_plot("H2 energy landscape", "alpha (rad)",
                                  "energy (Hartree)", series));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tiq: trapped-ion gate noise characterization and error mitigation"};
  app.require_subcommand(1);
  int threads_hint = 1;

  CharacterizeArgs ca;
  CLI::App* characterize = app.add_subcommand(
      "characterize", "Run a phase-space sweep and optionally fit it");
  characterize->add_option("--axis", ca.axis, "Sweep axis: xz or yz")
      ->check(CLI::IsMember({"xz", "yz"}))
      ->capture_default_str();
  characterize
      ->add_option("--compile", ca.compile,
                   "Closing Hadamard variant: native or inverse")
      ->check(CLI::IsMember({"native", "inverse"}))
      ->capture_default_str();
  characterize->add_option("--reps", ca.reps, "Pattern repetitions")
      ->capture_default_str();
  characterize->add_option("--points", ca.points, "Grid points per axis")
      ->capture_default_str();
  characterize->add_option("--range", ca.range, "Half-range of the sweep, rad")
      ->capture_default_str();
  characterize->add_option("--shots", ca.shots, "Shots per grid point")
      ->capture_default_str();
  characterize->add_flag("--sampled", ca.sampled,
                         "Draw finite-shot counts (default: analytic)");
  characterize->add_flag("--analytic{false}", ca.sampled,
                         "Infinite-shot probabilities (the default)");
  characterize->add_option("--noise", ca.noise_path,
                           "Noise configuration JSON path");
  characterize->add_option("--seed", ca.seed, "Root RNG seed (sampled mode)");
  characterize->add_option("--ordering-seed", ca.ordering_seed,
                           "Grid visit-order permutation seed")
      ->capture_default_str();
  characterize->add_option("--out", ca.out_path, "Grid CSV output path")
      ->required();
  characterize->add_option("--svg", ca.svg_path, "Heatmap SVG output path");
  characterize->add_flag("--fit", ca.fit, "Fit the grid and write JSON");
  characterize->add_flag("--joint", ca.joint,
                         "Fit XZ and YZ variants jointly");
  characterize->add_option("--fit-out", ca.fit_out,
                           "Fit JSON path (default: <out>.fit.json)");
  characterize->add_option("--ingest", ca.ingest_path,
                           "Fit an existing grid CSV instead of simulating");
  characterize->add_option("--threads", threads_hint,
                           "Worker hint; results never depend on it");
  characterize->callback([&] {
    ca.seed_given = characterize->count("--seed") > 0;
    run_characterize(ca);
  });

  DriftArgs da;
  CLI::App* drift = app.add_subcommand(
      "drift", "Track fitted error parameters across repeated runs");
  drift->add_option("--scenario", da.scenario,
                    "natural | recalibrated | amp-injected | phase-injected")
      ->check(CLI::IsMember(
          {"natural", "recalibrated", "amp-injected", "phase-injected"}))
      ->capture_default_str();
  drift->add_option("--runs", da.runs, "Number of runs")->capture_default_str();
  drift->add_option("--ramp", da.ramp,
                    "Total injected ramp over the series (rad or ratio)")
      ->capture_default_str();
  drift->add_option("--shots", da.shots, "Shots per grid point")
      ->capture_default_str();
  drift->add_option("--points", da.points, "Grid points per axis")
      ->capture_default_str();
  drift->add_option("--reps", da.reps, "Pattern repetitions")
      ->capture_default_str();
  drift->add_option("--noise", da.noise_path, "Base noise configuration JSON");
  drift->add_option("--seed", da.seed, "Root RNG seed")->required();
  drift->add_option("--out", da.out_path, "Drift CSV output path")->required();
  drift->add_option("--svg", da.svg_path, "Line-plot SVG output path");
  drift->add_option("--threads", threads_hint,
                    "Worker hint; results never depend on it");
  drift->callback([&] { run_drift(da); });

  VqeArgs va;
  CLI::App* vqe = app.add_subcommand(
      "vqe", "Sweep the H2 VQE energy landscape under a compilation mode");
  vqe->add_option("--mode", va.mode, "Compilation: default or hi")
      ->check(CLI::IsMember({"default", "hi"}))
      ->capture_default_str();
  vqe->add_option("--mitigation", va.mitigation, "none or rc")
      ->check(CLI::IsMember({"none", "rc"}))
      ->capture_default_str();
  vqe->add_flag("--purify", va.purify, "Also emit purified energies");
  vqe->add_option("--alphas", va.alphas, "Number of alpha grid points")
      ->capture_default_str();
  vqe->add_option("--shots", va.shots,
                  "Shots per basis per point (0 = analytic)")
      ->capture_default_str();
  vqe->add_option("--noise,--ms-noise", va.noise_path,
                  "Noise configuration JSON path");
  vqe->add_option("--inject-rotation", va.inject_rotation,
                  "Extra MS rotation offset added to the configured one, rad")
      ->capture_default_str();
  vqe->add_option("--rc-circuits", va.rc_circuits,
                  "Sampled twirl count for randomized compiling")
      ->capture_default_str();
  vqe->add_option("--seed", va.seed, "Root RNG seed (sampled mode)");
  vqe->add_option("--out", va.out_path, "Landscape CSV output path")
      ->required();
  vqe->add_option("--svg", va.svg_path, "Overlay SVG output path");
  vqe->add_option("--threads", threads_hint,
                  "Worker hint; results never depend on it");
  vqe->callback([&] {
    va.seed_given = vqe->count("--seed") > 0;
    run_vqe(va);
  });

  std::string fidelity_noise;
  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "Average gate fidelity of the configured MS channel");
  fidelity->add_option("--noise,--ms-noise", fidelity_noise,
                       "Noise configuration JSON path");
  fidelity->callback([&] {
    const tiq::NoiseConfig cfg = load_config_or_default(fidelity_noise);
    const tiq::MsChannel ch = tiq::noisy_xx_channel(tiq::kPi / 2, cfg.ms);
    char buf[80];
    std::snprintf(buf, sizeof buf, "{\"avg_gate_fidelity\": %.17g}\n",
                  tiq::avg_gate_fidelity(ch, tiq::xx(tiq::kPi / 2)));
    std::cout << buf;
  });

  CLI::App* exact =
      app.add_subcommand("exact", "Exact H2 ground energy in Hartree");
  exact->callback(
      [] { std::cout << tiq::exact_energy_json(tiq::h2_hamiltonian()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tiq::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
