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

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "trotterlab/subspace_sim.hpp"

namespace trotterlab {

/// Excitation probability on qubit 2 after the two-step, two-qubit circuit
/// XY(theta) Rz(phi) Rz(alpha) XY(theta) |10>, theta a hop angle:
///   2 sin^2 theta cos^2 theta (1 + cos(alpha - phi)).
double p01_closed_form(double theta, double phi, double alpha);

/// Excitation probability on qubit 3 after the two-step, three-qubit circuit
/// with Rz angles (phi, alpha, phi):
///   sin^4 theta cos^2 theta (4 + cos^2 theta + 4 cos theta cos(alpha - phi)).
double p001_closed_form(double theta, double phi, double alpha);

/// Tolerance on |norm - 1| accepted by ipr().
inline constexpr double kIprNormTolerance = 1e-9;

/// sum_i |a_i|^4. Throws InvalidState when the state is not normalized.
double ipr(const SubspaceState& state);

/// Same, from site probabilities p_i = |a_i|^2.
double ipr_from_probs(std::span<const double> probs);

/// One IPR per stored state, in order.
std::vector<double> ipr_series(std::span<const SubspaceState> trajectory);

/// Arithmetic mean of the series.
double ipr_ave(std::span<const double> series);

/// Sum of p_i over qubits i > floor(2N/3) (qubits 11..15 for N = 15).
double tail_prob(std::span<const double> probs);

/// First qubit index (1-based) counted by tail_prob for N qubits.
int tail_start(int n_qubits);

struct LocalizationReport {
  std::vector<double> ipr_series;   ///< eta = 1..N_T
  double ipr_ave = 0.0;
  std::vector<double> tail_series;  ///< P_t(eta), eta = 1..N_T
  std::vector<double> final_profile;
  int profile_eta = 0;
};

/// Builds the report from per-step site probabilities (index 0 is eta = 1).
LocalizationReport localization_report(const std::vector<std::vector<double>>& step_probs,
                                       int profile_eta);

struct Curve {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string x_name = "x";
  std::string x_unit;
  std::string y_name = "probability";

  /// Throws ConfigError unless xs is strictly increasing, sizes match, and
  /// ys lies in [-1e-12, 1 + 1e-12].
  void validate() const;
};

struct Peak {
  double position = 0.0;
  double height = 0.0;
  double prominence = 0.0;
  std::size_t index = 0;  ///< sample index of the discrete maximum
};

inline constexpr double kDefaultPeakProminence = 0.02;

/// Interior local maxima (strictly above the left neighbour, at least the
/// right one), refined by the parabola through the three samples around each
/// maximum and kept when their topographic prominence on the sampled curve is
/// at least `min_prominence`. Sorted by position.
std::vector<Peak> find_peaks(std::span<const double> xs, std::span<const double> ys,
                             double min_prominence = kDefaultPeakProminence);
std::vector<Peak> find_peaks(const Curve& curve,
                             double min_prominence = kDefaultPeakProminence);

}  // namespace trotterlab
