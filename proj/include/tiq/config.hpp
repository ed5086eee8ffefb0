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

#ifndef TIQ_CONFIG_HPP
#define TIQ_CONFIG_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tiq/gates.hpp"

namespace tiq {

// Input-validation failure; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct NoiseConfig {
  SqNoiseParams single_qubit;
  MsNoiseParams ms = ideal_ms_params();
};

// Parses the shared noise configuration:
//   {"single_qubit": {"epsilon": r, "phase": r, "detuning_ratio": r},
//    "ms": {"nbar": r, "overrotation_rad": r, "depol_p": r, "eta": r,
//           "mode": "analytic"|"sampled"}}
// Absent sections and keys mean zero noise; an absent `eta` inside a present
// `ms` section takes the hardware default. Unknown keys are rejected so a
// typo cannot silently zero a parameter. Syntax errors carry the parser's
// line/column diagnostic.
inline NoiseConfig parse_noise_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("noise config: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("noise config: top level must be a JSON object");
  }

  auto require_number = [](const nlohmann::json& v, const std::string& where) {
    if (!v.is_number()) {
      throw ConfigError("noise config: '" + where + "' must be a number");
    }
    return v.get<double>();
  };

  NoiseConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "single_qubit") {
      if (!value.is_object()) {
        throw ConfigError("noise config: 'single_qubit' must be an object");
      }
      for (const auto& [k, v] : value.items()) {
        if (k == "epsilon") {
          cfg.single_qubit.epsilon = require_number(v, "single_qubit.epsilon");
        } else if (k == "phase") {
          cfg.single_qubit.phase = require_number(v, "single_qubit.phase");
        } else if (k == "detuning_ratio") {
          cfg.single_qubit.detuning_ratio =
              require_number(v, "single_qubit.detuning_ratio");
        } else {
          throw ConfigError("noise config: unknown key 'single_qubit." + k +
                            "'");
        }
      }
      if (std::abs(cfg.single_qubit.epsilon) >= 1.0) {
        throw ConfigError(
            "noise config: single_qubit.epsilon magnitude must be < 1");
      }
    } else if (key == "ms") {
      if (!value.is_object()) {
        throw ConfigError("noise config: 'ms' must be an object");
      }
      cfg.ms = MsNoiseParams{};  // section present: hardware-default eta
      for (const auto& [k, v] : value.items()) {
        if (k == "nbar") {
          cfg.ms.nbar = require_number(v, "ms.nbar");
        } else if (k == "overrotation_rad") {
          cfg.ms.overrotation = require_number(v, "ms.overrotation_rad");
        } else if (k == "depol_p") {
          cfg.ms.depol_p = require_number(v, "ms.depol_p");
        } else if (k == "eta") {
          cfg.ms.eta = require_number(v, "ms.eta");
        } else if (k == "mode") {
          if (!v.is_string()) {
            throw ConfigError("noise config: 'ms.mode' must be a string");
          }
          const std::string m = v.get<std::string>();
          if (m == "analytic") {
            cfg.ms.mode = MsNoiseParams::Mode::analytic;
          } else if (m == "sampled") {
            cfg.ms.mode = MsNoiseParams::Mode::sampled;
          } else {
            throw ConfigError(
                "noise config: 'ms.mode' must be \"analytic\" or \"sampled\"");
          }
        } else {
          throw ConfigError("noise config: unknown key 'ms." + k + "'");
        }
      }
      if (cfg.ms.nbar < 0) {
        throw ConfigError("noise config: ms.nbar must be non-negative");
      }
      if (cfg.ms.depol_p < 0 || cfg.ms.depol_p > 1) {
        throw ConfigError("noise config: ms.depol_p must be in [0, 1]");
      }
      if (cfg.ms.eta < 0 || cfg.ms.eta >= 1) {
        throw ConfigError("noise config: ms.eta must be in [0, 1)");
      }
    } else {
      throw ConfigError("noise config: unknown top-level key '" + key + "'");
    }
  }
  return cfg;
}

inline NoiseConfig load_noise_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("noise config: cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_noise_config(ss.str());
}

}  // namespace tiq

#endif  // TIQ_CONFIG_HPP
