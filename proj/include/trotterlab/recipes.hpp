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

// Bundled parameter sets for the resonance and localization figures.
//
//   2a4..2d4  N = 2..5 resonance: exact continuous curves of the last-site
//             probability over V1 plus the few-step discrete curves over phi
//   3b        4-qubit controlled-Rx resonance over phi
//   3c, 3d    15-qubit controlled-Rx localization (tail series, eta=10 profile)
//   4a        IPR per step, ordered vs disordered, one realization
//   4b        IPR_ave against disorder radius, 20 realizations per point
//   4c, 4d    tail series and eta=10 profile for R in {0, pi/4, pi/2}
//
// Discrete XY recipes quote bond angles in the Hamiltonian convention
// (hop angle = theta / 2), see AngleConvention.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trotterlab/output.hpp"
#include "trotterlab/sweep.hpp"

namespace trotterlab {

inline constexpr std::uint64_t kDefaultFigureSeed = 20260101;

struct FigureRecipe {
  std::string id;
  std::string description;
  std::vector<SweepSpec> series;
  std::vector<std::string> notes;
};

std::vector<std::string> figure_ids();

/// Throws ConfigError for unknown ids.
FigureRecipe figure_recipe(std::string_view id,
                           std::optional<std::uint64_t> seed = std::nullopt);

ExperimentOutput run_figure(std::string_view id, int threads = 1,
                            std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace trotterlab
