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

// CSV and JSON emitters.
//
// CSV schemas (after a block of "# key: value" provenance lines):
//   resonance kinds   swept_value,series_id,probability
//   convergence       n_t,series_id,distance
//   localization      <swept>,trial,ipr_ave          (XY family)
//                     <swept>,trial,pt_mean          (CRX family)
//     companions      <stem>_ipr.csv      <swept>,trial,eta,ipr   (XY only)
//                     <stem>_tail.csv     <swept>,trial,eta,pt
//                     <stem>_profile.csv  <swept>,trial,qubit,probability
// The swept column of a localization run is normally R.
//
// JSON is the full SweepResult of every series.

#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "trotterlab/sweep.hpp"

namespace trotterlab {

struct ExperimentOutput {
  std::string label;  ///< subcommand or figure id
  std::vector<SweepResult> series;
  std::vector<std::string> notes;
};

/// Shortest round-trip decimal form.
std::string format_double(double value);

nlohmann::json to_json(const SweepResult& result);
nlohmann::json to_json(const ExperimentOutput& output);

std::string provenance_header(const ExperimentOutput& output);

struct WrittenFile {
  std::string path;
  std::string contents;
};

/// Renders all files of one output without touching the filesystem.
std::vector<WrittenFile> render_outputs(const ExperimentOutput& output, const std::string& path,
                                        std::string_view format);

/// Renders and writes. Throws ConfigError when a file cannot be written.
std::vector<std::string> write_outputs(const ExperimentOutput& output, const std::string& path,
                                       std::string_view format);

}  // namespace trotterlab
