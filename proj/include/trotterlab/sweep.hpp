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

// Deterministic experiment harness.
//
// A sweep evaluates one observable set at every (grid point, trial) pair.
// Each pair gets its own seed from mix_seed(master_seed, point, trial), so
// results do not depend on how work is scheduled across threads. Rows are
// stored in (point, trial) order.
//
// Parameters by experiment kind (all numeric, radians or energy units). Any
// of them may be the swept parameter.
//
//   resonance_continuous  n, J1, J2 (=J1), V1, V2, t
//                         options: mode = exact | large_nt, large_n_t (=2000)
//   resonance_discrete    n, n_steps, theta1, theta2 (=theta1), phi, alpha
//                         options: angle_convention, backend
//   crx_resonance         n (=4), n_steps (=3), theta1, theta2 (=theta1), phi, alpha
//   localization          n (=15), n_steps (=80), theta, phi, R (=0),
//                         profile_eta (=10)
//                         options: family = xy | crx, angle_convention, backend
//   convergence           n, J1, J2 (=J1), V1, V2, t, n_t
//
// The resonance layouts follow the N = 2..5 chains: couplings
//   N=2 (J1), N=3 (J1, J1), N=4 (J1, J2, J1), N=5 (J1, J2, J2, J1)
// and potentials
//   N=2 (V1, V2), N=3 (V1, V2, V1), N=4 (V1, V2, -V2, V1),
//   N=5 (V1, V2, 0, -V2, V1).
// Discrete circuits use the same layout with (theta1, theta2, phi, alpha) in
// place of (J1, J2, V1, V2).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trotterlab/model.hpp"

namespace trotterlab {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ExperimentKind {
  ResonanceDiscrete,
  ResonanceContinuous,
  Localization,
  Convergence,
  CrxResonance,
};

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view text);

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  bool geometric = false;

  /// Linear: start + i (stop - start) / (count - 1). Geometric:
  /// start (stop / start)^(i / (count - 1)). Endpoints are exact.
  std::vector<double> values() const;
};

struct SweepSpec {
  ExperimentKind kind = ExperimentKind::ResonanceDiscrete;
  std::string swept;
  Grid grid;
  std::map<std::string, double> fixed;
  std::map<std::string, std::string> options;
  int trials = 1;
  std::uint64_t master_seed = 0;
  std::string series_id = "default";
};

/// Default ensemble size: 20 for localization, 1 otherwise.
int default_trials(ExperimentKind kind);

/// Throws ConfigError naming the first missing or invalid parameter.
void validate(const SweepSpec& spec);

struct SweepRow {
  int point = 0;
  double swept_value = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> observables;
  std::map<std::string, std::vector<double>> series;
};

struct Stats {
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased sample variance; 0 for one sample
  int count = 0;
};

struct AggregateRow {
  int point = 0;
  double swept_value = 0.0;
  std::map<std::string, Stats> stats;
};

struct Provenance {
  std::string tool = "trotterlab";
  std::string version{kToolVersion};
  std::string generator;
  std::uint64_t master_seed = 0;
  std::vector<std::string> notes;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::vector<AggregateRow> aggregates;
  Provenance provenance;
};

/// Runs every (point, trial) item on up to `threads` workers and merges in
/// deterministic order.
SweepResult run_sweep(const SweepSpec& spec, int threads = 1);

/// Welford mean/variance over the values.
Stats accumulate_stats(std::span<const double> values);

/// Resonance chain for the N = 2..5 layouts described above.
ChainSpec resonance_chain(int n, double j1, double j2, double v1, double v2);

/// Discrete counterpart of resonance_chain.
TrotterCircuitSpec resonance_circuit(int n, int n_steps, double theta1, double theta2,
                                     double phi, double alpha, GateFamily family,
                                     AngleConvention convention);

struct ConvergenceRow {
  int n_t = 0;
  double distance = 0.0;
};

/// ||psi_discrete - psi_exact||_2 for each N_T, with tau = t / N_T and the
/// full product formula (Rz layer kept on every step).
std::vector<ConvergenceRow> convergence_study(const ChainSpec& chain, double t,
                                              std::span<const int> n_t_list,
                                              int init_site = 1);

}  // namespace trotterlab
