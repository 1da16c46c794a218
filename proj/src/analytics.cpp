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

#include "trotterlab/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "trotterlab/errors.hpp"

namespace trotterlab {

double p01_closed_form(double theta, double phi, double alpha) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return 2.0 * s * s * c * c * (1.0 + std::cos(alpha - phi));
}

double p001_closed_form(double theta, double phi, double alpha) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return s * s * s * s * c * c * (4.0 + c * c + 4.0 * c * std::cos(alpha - phi));
}

double ipr(const SubspaceState& state) {
  const double norm = state.norm_squared();
  if (!(std::abs(norm - 1.0) <= kIprNormTolerance)) {
    std::ostringstream msg;
    msg << "ipr: state norm " << norm << " deviates from 1 by more than "
        << kIprNormTolerance;
    throw InvalidState(msg.str());
  }
  double total = 0.0;
  for (const Complex& a : state.amplitudes()) {
    const double p = std::norm(a);
    total += p * p;
  }
  return total;
}

double ipr_from_probs(std::span<const double> probs) {
  double total = 0.0;
  for (double p : probs) total += p * p;
  return total;
}

std::vector<double> ipr_series(std::span<const SubspaceState> trajectory) {
  std::vector<double> out;
  out.reserve(trajectory.size());
  for (const SubspaceState& s : trajectory) out.push_back(ipr(s));
  return out;
}

double ipr_ave(std::span<const double> series) {
  if (series.empty()) throw ConfigError("ipr_ave of an empty series");
  return std::accumulate(series.begin(), series.end(), 0.0) /
         static_cast<double>(series.size());
}

int tail_start(int n_qubits) { return (2 * n_qubits) / 3 + 1; }

double tail_prob(std::span<const double> probs) {
  const int n = static_cast<int>(probs.size());
  if (n < 3) throw ConfigError("tail_prob needs at least 3 qubits");
  double total = 0.0;
  for (int q = tail_start(n); q <= n; ++q) total += probs[static_cast<std::size_t>(q - 1)];
  return total;
}

LocalizationReport localization_report(const std::vector<std::vector<double>>& step_probs,
                                       int profile_eta) {
  if (step_probs.empty()) throw ConfigError("localization_report needs at least one step");
  if (profile_eta < 1 || profile_eta > static_cast<int>(step_probs.size())) {
    throw ConfigError("profile_eta " + std::to_string(profile_eta) + " outside 1.." +
                      std::to_string(step_probs.size()));
  }
  LocalizationReport report;
  for (const auto& probs : step_probs) {
    report.ipr_series.push_back(ipr_from_probs(probs));
    report.tail_series.push_back(tail_prob(probs));
  }
  report.ipr_ave = ipr_ave(report.ipr_series);
  report.profile_eta = profile_eta;
  report.final_profile = step_probs[static_cast<std::size_t>(profile_eta - 1)];
  return report;
}

void Curve::validate() const {
  if (xs.size() != ys.size()) throw ConfigError("curve xs/ys size mismatch");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw ConfigError("curve xs must be strictly increasing");
  }
  for (double y : ys) {
    if (!(y >= -1e-12 && y <= 1.0 + 1e-12)) {
      throw ConfigError("curve ys must be probabilities, got " + std::to_string(y));
    }
  }
}

namespace {

// Vertex of the parabola through three points; falls back to the middle
// sample when the points are collinear or open upwards.
std::pair<double, double> parabola_vertex(double x0, double y0, double x1, double y1,
                                          double x2, double y2) {
  const double d01 = x0 - x1;
  const double d02 = x0 - x2;
  const double d12 = x1 - x2;
  const double a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / (d01 * d02 * d12);
  const double b =
      (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / (d01 * d02 * d12);
  if (!(a < 0.0)) return {x1, y1};
  const double xv = std::clamp(-b / (2.0 * a), x0, x2);
  // Lagrange form keeps the height independent of the absolute x offset.
  const double l0 = (xv - x1) * (xv - x2) / (d01 * d02);
  const double l1 = (xv - x0) * (xv - x2) / (-d01 * d12);
  const double l2 = (xv - x0) * (xv - x1) / (d02 * d12);
  return {xv, l0 * y0 + l1 * y1 + l2 * y2};
}

}  // namespace

std::vector<Peak> find_peaks(std::span<const double> xs, std::span<const double> ys,
                             double min_prominence) {
  if (xs.empty() || ys.empty()) throw ConfigError("find_peaks: empty curve");
  if (xs.size() != ys.size()) throw ConfigError("find_peaks: xs/ys size mismatch");
  if (xs.size() < 3) throw ConfigError("find_peaks needs at least 3 samples");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw ConfigError("find_peaks: xs must be strictly increasing");
  }

  const std::size_t n = ys.size();
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(ys[i] > ys[i - 1] && ys[i] >= ys[i + 1])) continue;

    // Lowest point on each side before the curve rises above this peak.
    double left_min = ys[i];
    for (std::size_t j = i; j-- > 0;) {
      if (ys[j] > ys[i]) break;
      left_min = std::min(left_min, ys[j]);
    }
    double right_min = ys[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ys[j] > ys[i]) break;
      right_min = std::min(right_min, ys[j]);
    }
    const double prominence = ys[i] - std::max(left_min, right_min);
    if (prominence < min_prominence) continue;

    const auto [x, y] =
        parabola_vertex(xs[i - 1], ys[i - 1], xs[i], ys[i], xs[i + 1], ys[i + 1]);
    peaks.push_back({x, y, prominence, i});
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const Peak& a, const Peak& b) { return a.position < b.position; });
  return peaks;
}

std::vector<Peak> find_peaks(const Curve& curve, double min_prominence) {
  return find_peaks(curve.xs, curve.ys, min_prominence);
}

}  // namespace trotterlab
