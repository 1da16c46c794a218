// Copyright 2026 The TrotterLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON run configuration.
//
//   {
//     "experiment": {
//       "kind": "localization",
//       "swept": {"name": "R", "start": 0, "stop": "pi/2", "count": 5,
//                 "spacing": "linear"},
//       "fixed": {"n": 15, "n_steps": 80, "theta": "pi/2", "phi": "pi/2"},
//       "options": {"angle_convention": "hamiltonian"},
//       "trials": 20,
//       "seed": 7,
//       "series": [{"id": "a", "fixed": {...}, "options": {...}}]
//     },
//     "output": {"path": "out.csv", "format": "csv"},
//     "engine": {"backend": "auto", "threads": 1, "verification": false}
//   }
//
// Every numeric parameter may be written as a number or an angle literal such
// as "pi/2", "-3pi/4", "2*pi/3" or "pi/1.5".

#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "trotterlab/sweep.hpp"

namespace trotterlab {

/// Number or rational multiple of pi.
double parse_angle(std::string_view text);

/// Accepts a JSON number or an angle-literal string.
double number_from_json(const nlohmann::json& value, std::string_view what);

struct SeriesOverride {
  std::string id;
  std::map<std::string, double> fixed;
  std::map<std::string, std::string> options;
};

struct OutputSpec {
  std::string path;
  std::string format = "csv";
};

struct EngineSpec {
  std::string backend = "auto";
  int threads = 1;
  bool verification = false;
};

struct RunConfig {
  SweepSpec experiment;
  std::vector<SeriesOverride> series;
  OutputSpec output;
  EngineSpec engine;
};

RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::string& path);

/// "start:stop:count" with angle literals allowed for the endpoints.
Grid parse_grid(std::string_view text);

/// One SweepSpec per series with overrides and the engine backend applied.
/// Without series entries the experiment itself is the only series.
std::vector<SweepSpec> expand_series(const RunConfig& config);

/// Threads actually used: 1 in verification mode, otherwise the configured
/// count (at least 1).
int effective_threads(const EngineSpec& engine);

nlohmann::json to_json(const SweepSpec& spec);

}  // namespace trotterlab
