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

#include "trotterlab/recipes.hpp"

#include <numbers>

#include "trotterlab/errors.hpp"
#include "trotterlab/output.hpp"

namespace trotterlab {
namespace {

constexpr double kPi = std::numbers::pi;

const char* const kConventionNote =
    "discrete XY bond angles use angle_convention=hamiltonian: hop angle = theta/2";

SweepSpec continuous_series(std::string id, int n, double j1, double j2, double v2, double t,
                            Grid v1_grid) {
  SweepSpec s;
  s.kind = ExperimentKind::ResonanceContinuous;
  s.series_id = std::move(id);
  s.swept = "V1";
  s.grid = v1_grid;
  s.fixed = {{"n", n}, {"J1", j1}, {"J2", j2}, {"V2", v2}, {"t", t}};
  return s;
}

SweepSpec discrete_series(std::string id, int n, int n_steps, double theta1, double theta2,
                          double alpha) {
  SweepSpec s;
  s.kind = ExperimentKind::ResonanceDiscrete;
  s.series_id = std::move(id);
  s.swept = "phi";
  s.grid = {-kPi, kPi, 361, false};
  s.fixed = {{"n", n}, {"n_steps", n_steps}, {"theta1", theta1}, {"theta2", theta2},
             {"alpha", alpha}};
  s.options = {{"angle_convention", "hamiltonian"}};
  return s;
}

SweepSpec localization_series(std::string id, int n, int n_steps, Grid r_grid, int trials,
                              bool crx) {
  SweepSpec s;
  s.kind = ExperimentKind::Localization;
  s.series_id = std::move(id);
  s.swept = "R";
  s.grid = r_grid;
  s.trials = trials;
  s.fixed = {{"n", n}, {"n_steps", n_steps}, {"theta", kPi / 2}, {"phi", kPi / 2},
             {"profile_eta", 10}};
  if (crx) {
    s.options = {{"family", "crx"}, {"backend", "dense"}};
  } else {
    s.options = {{"angle_convention", "hamiltonian"}};
  }
  return s;
}

FigureRecipe build(std::string_view id) {
  FigureRecipe r;
  r.id = std::string(id);

  if (id == "2a4" || id == "2b4") {
    const bool two = id == "2a4";
    const int n = two ? 2 : 3;
    const double t = two ? 15.0 : 22.0;
    r.description = two ? "N=2 resonance: P2(V1) at J=0.1, t=15; P01(phi) at N_T=2"
                        : "N=3 resonance: P3(V1) at J=0.1, t=22; P001(phi) at N_T=2";
    const Grid v1{-3.2, 1.6, 481, false};
    for (double v2 : {0.0, -kPi / 2}) {
      const std::string tag = v2 == 0.0 ? "0" : "-pi/2";
      r.series.push_back(continuous_series("continuous V2=" + tag, n, 0.1, 0.1, v2, t, v1));
    }
    for (double alpha : {0.0, -kPi / 2}) {
      const std::string tag = alpha == 0.0 ? "0" : "-pi/2";
      r.series.push_back(discrete_series("discrete alpha=" + tag, n, 2, kPi / 2, kPi / 2, alpha));
    }
    r.notes.push_back(kConventionNote);
  } else if (id == "2c4") {
    r.description = "N=4 resonance: P4(V1) at J1=1, J2=20, t=3; P0001(phi) at N_T=3";
    const Grid v1{-50.0, 50.0, 2001, false};
    r.series.push_back(continuous_series("continuous V2=10", 4, 1.0, 20.0, 10.0, 3.0, v1));
    r.series.push_back(continuous_series("continuous V2=20", 4, 1.0, 20.0, 20.0, 3.0, v1));
    r.series.push_back(discrete_series("discrete alpha=pi/4", 4, 3, kPi / 1.5, kPi / 1.5, kPi / 4));
    r.series.push_back(
        discrete_series("discrete alpha=-pi/1.5", 4, 3, kPi / 1.5, kPi / 1.5, -kPi / 1.5));
    r.notes.push_back(kConventionNote);
  } else if (id == "2d4") {
    r.description = "N=5 resonance: P5(V1) at J1=0.1, J2=20, t=40; P00001(phi) at N_T=4";
    const Grid v1{-50.0, 50.0, 2001, false};
    r.series.push_back(continuous_series("continuous V2=10", 5, 0.1, 20.0, 10.0, 40.0, v1));
    r.series.push_back(continuous_series("continuous V2=20", 5, 0.1, 20.0, 20.0, 40.0, v1));
    r.series.push_back(discrete_series("discrete alpha=pi/1.5", 5, 4, kPi / 3, kPi / 1.2, kPi / 1.5));
    r.series.push_back(discrete_series("discrete alpha=pi/5", 5, 4, kPi / 3, kPi / 1.2, kPi / 5));
    r.notes.push_back(kConventionNote);
  } else if (id == "3b") {
    r.description = "4-qubit controlled-Rx resonance: P0001(phi) at N_T=3";
    auto crx = [](std::string sid, double theta, double alpha) {
      SweepSpec s;
      s.kind = ExperimentKind::CrxResonance;
      s.series_id = std::move(sid);
      s.swept = "phi";
      s.grid = {-kPi, kPi, 361, false};
      s.fixed = {{"n", 4}, {"n_steps", 3}, {"theta1", theta}, {"theta2", theta}, {"alpha", alpha}};
      return s;
    };
    r.series.push_back(crx("alpha=pi/4 theta=pi/2", kPi / 2, kPi / 4));
    r.series.push_back(crx("alpha=-pi/1.5 theta=pi/2", kPi / 2, -kPi / 1.5));
    r.series.push_back(crx("alpha=pi/4 theta=pi/3", kPi / 3, kPi / 4));
    r.notes.push_back(
        "which second parameter moves the two peaks is ambiguous; series vary alpha and theta");
  } else if (id == "3c" || id == "3d") {
    r.description = id == "3c" ? "controlled-Rx localization: P_t per Trotter step"
                               : "controlled-Rx localization: occupation profile at eta=10";
    r.series.push_back(localization_series("crx", 15, 20, {0.0, kPi / 2, 3, false}, 20, true));
    r.notes.push_back("controlled-Rx localization runs assume N=15");
  } else if (id == "4a") {
    r.description = "IPR per Trotter step, N=15, N_T=80, theta=phi=pi/2, R in {0, pi/2}";
    r.series.push_back(localization_series("xy", 15, 80, {0.0, kPi / 2, 2, false}, 1, false));
    r.notes.push_back(kConventionNote);
  } else if (id == "4b") {
    r.description = "IPR_ave against disorder radius R, 20 realizations per point";
    r.series.push_back(localization_series("xy", 15, 80, {0.0, kPi / 2, 9, false}, 20, false));
    r.notes.push_back(kConventionNote);
  } else if (id == "4c" || id == "4d") {
    r.description = id == "4c" ? "tail probability P_t per Trotter step"
                               : "occupation profile at eta=10";
    r.series.push_back(localization_series("xy", 15, 80, {0.0, kPi / 2, 3, false}, 20, false));
    r.notes.push_back(kConventionNote);
  } else {
    std::string known;
    for (const std::string& k : figure_ids()) known += (known.empty() ? "" : ", ") + k;
    throw ConfigError("unknown figure id '" + std::string(id) + "' (known: " + known + ")");
  }
  return r;
}

}  // namespace

std::vector<std::string> figure_ids() {
  return {"2a4", "2b4", "2c4", "2d4", "3b", "3c", "3d", "4a", "4b", "4c", "4d"};
}

FigureRecipe figure_recipe(std::string_view id, std::optional<std::uint64_t> seed) {
  FigureRecipe recipe = build(id);
  for (SweepSpec& s : recipe.series) {
    s.master_seed = seed.value_or(kDefaultFigureSeed);
    validate(s);
  }
  return recipe;
}

ExperimentOutput run_figure(std::string_view id, int threads,
                            std::optional<std::uint64_t> seed) {
  const FigureRecipe recipe = figure_recipe(id, seed);
  ExperimentOutput out;
  out.label = "figure " + recipe.id + ": " + recipe.description;
  out.notes = recipe.notes;
  for (const SweepSpec& s : recipe.series) {
    SweepResult result = run_sweep(s, threads);
    result.provenance.notes = recipe.notes;
    out.series.push_back(std::move(result));
  }
  return out;
}

}  // namespace trotterlab
