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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// An optional argument names the trotterlab executable for the end-to-end
// determinism check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "trotterlab/analytics.hpp"
#include "trotterlab/dense_sim.hpp"
#include "trotterlab/output.hpp"
#include "trotterlab/random.hpp"
#include "trotterlab/recipes.hpp"
#include "trotterlab/subspace_sim.hpp"
#include "trotterlab/sweep.hpp"

namespace {

using namespace trotterlab;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) passed = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string num(double v, int precision = 4) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> xs_of(const SweepResult& r) {
  std::vector<double> xs;
  for (const AggregateRow& a : r.aggregates) xs.push_back(a.swept_value);
  return xs;
}

std::vector<double> means_of(const SweepResult& r, const std::string& name) {
  std::vector<double> ys;
  for (const AggregateRow& a : r.aggregates) ys.push_back(a.stats.at(name).mean);
  return ys;
}

const SweepResult& series(const ExperimentOutput& out, const std::string& id) {
  for (const SweepResult& r : out.series) {
    if (r.spec.series_id == id) return r;
  }
  throw std::runtime_error("series '" + id + "' missing");
}

// Peaks closer than `gap` are one resonance feature; the tallest represents it.
std::vector<Peak> resonance_features(const std::vector<Peak>& peaks, double gap) {
  std::vector<Peak> out;
  for (const Peak& p : peaks) {
    if (!out.empty() && p.position - out.back().position < gap) {
      if (p.height > out.back().height) out.back() = p;
      continue;
    }
    out.push_back(p);
  }
  return out;
}

SweepSpec series_by_v2(const FigureRecipe& recipe, double v2) {
  for (const SweepSpec& s : recipe.series) {
    if (s.kind == ExperimentKind::ResonanceContinuous && s.fixed.at("V2") == v2) return s;
  }
  throw std::runtime_error("no continuous series with V2=" + num(v2));
}

TrotterCircuitSpec two_step(int n, double theta, double phi, double alpha) {
  TrotterCircuitSpec spec;
  spec.n_qubits = n;
  spec.n_steps = 2;
  spec.bond_angles.assign(static_cast<std::size_t>(n - 1), theta);
  spec.z_layer.explicit_phis =
      n == 2 ? std::vector<double>{phi, alpha} : std::vector<double>{phi, alpha, phi};
  return spec;
}

Outcome closed_form_identity(int n) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::string target = n == 2 ? "01" : "001";
  double worst = 0.0;
  for (int ip = 0; ip < 21; ++ip) {
    const double phi = -kPi + 2 * kPi * ip / 20;
    for (int id = 0; id < 5; ++id) {
      const double alpha = phi - kPi + kPi * id / 2;
      for (int it = 0; it < 21; ++it) {
        const double theta = kPi * it / 20;
        const double sim = run_circuit(two_step(n, theta, phi, alpha), 0).basis_prob(target);
        const double formula =
            n == 2 ? p01_closed_form(theta, phi, alpha) : p001_closed_form(theta, phi, alpha);
        worst = std::max(worst, std::abs(sim - formula));
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.require(worst <= 1e-12, "max deviation " + num(worst, 3) + " <= 1e-12 on 21x21x5 grid");
  o.require(elapsed < 1.0, "runtime " + num(elapsed, 3) + " s < 1 s");
  return o;
}

Outcome resonance_location() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const char* id : {"2a4", "2b4"}) {
    const FigureRecipe recipe = figure_recipe(id);
    for (const SweepSpec& spec : recipe.series) {
      if (spec.kind != ExperimentKind::ResonanceContinuous) continue;
      const SweepResult r = run_sweep(spec);
      const auto xs = xs_of(r);
      const auto ys = means_of(r, "probability");
      const double pitch = xs[1] - xs[0];
      const std::size_t best = static_cast<std::size_t>(
          std::max_element(ys.begin(), ys.end()) - ys.begin());
      const double v2 = spec.fixed.at("V2");
      const bool ok = pitch <= 0.02 + 1e-12 && std::abs(xs[best] - v2) <= pitch + 1e-12;
      o.require(ok, std::string(id) + " N=" + num(spec.fixed.at("n")) + " V2=" + num(v2) +
                        ": argmax V1=" + num(xs[best]) + " (pitch " + num(pitch) + ")");
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 5.0, "runtime " + num(elapsed, 3) + " s < 5 s");
  return o;
}

Outcome four_site_peaks() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const FigureRecipe recipe = figure_recipe("2c4");
  std::vector<double> separations;
  for (double v2 : {10.0, 20.0}) {
    const SweepResult r = run_sweep(series_by_v2(recipe, v2));
    const auto peaks = find_peaks(xs_of(r), means_of(r, "probability"), kDefaultPeakProminence);
    const double target = std::sqrt(20.0 * 20.0 + v2 * v2);
    std::string where;
    for (const Peak& p : peaks) where += " " + num(p.position);
    bool ok = peaks.size() == 2;
    if (ok) {
      ok = std::abs(peaks[0].position + target) <= 0.05 * target &&
           std::abs(peaks[1].position - target) <= 0.05 * target;
      separations.push_back(peaks[1].position - peaks[0].position);
    }
    o.require(ok, "V2=" + num(v2) + ": " + std::to_string(peaks.size()) + " peaks at" + where +
                      " vs +-" + num(target));
  }
  o.require(separations.size() == 2 && separations[1] > separations[0], "separation grows");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 10.0, "runtime " + num(elapsed, 3) + " s < 10 s");
  return o;
}

Outcome five_site_peaks() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const FigureRecipe recipe = figure_recipe("2d4");
  for (double v2 : {10.0, 20.0}) {
    const SweepResult r = run_sweep(series_by_v2(recipe, v2));
    const auto raw = find_peaks(xs_of(r), means_of(r, "probability"), kDefaultPeakProminence);
    const auto peaks = resonance_features(raw, 1.0);
    const double target = std::sqrt(2 * 20.0 * 20.0 + v2 * v2);
    std::string where;
    for (const Peak& p : peaks) where += " " + num(p.position);
    bool ok = peaks.size() == 3;
    if (ok) {
      ok = std::abs(peaks[1].position) <= 1.0 &&
           std::abs(peaks[0].position + target) <= 0.05 * target &&
           std::abs(peaks[2].position - target) <= 0.05 * target;
    }
    o.require(ok, "V2=" + num(v2) + ": " + std::to_string(peaks.size()) + " resonances (" +
                      std::to_string(raw.size()) + " raw maxima) at" + where + " vs 0, +-" +
                      num(target));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 20.0, "runtime " + num(elapsed, 3) + " s < 20 s");
  return o;
}

Outcome discrete_signature() {
  Outcome o;
  for (const char* id : {"2c4", "2d4"}) {
    const FigureRecipe recipe = figure_recipe(id);
    std::vector<std::vector<double>> positions;
    std::string detail;
    for (const SweepSpec& spec : recipe.series) {
      if (spec.kind != ExperimentKind::ResonanceDiscrete) continue;
      const SweepResult r = run_sweep(spec);
      const auto peaks = find_peaks(xs_of(r), means_of(r, "probability"), kDefaultPeakProminence);
      std::vector<double> pos;
      for (const Peak& p : peaks) pos.push_back(p.position);
      positions.push_back(pos);
      detail += " alpha=" + num(spec.fixed.at("alpha")) + ":";
      for (double x : pos) detail += " " + num(x, 3);
    }
    bool ok = positions.size() == 2 && positions[0].size() >= 2 && positions[1].size() >= 2;
    if (ok) {
      auto pairwise = [](const std::vector<double>& pos) {
        std::vector<double> d;
        for (std::size_t i = 0; i < pos.size(); ++i) {
          for (std::size_t j = i + 1; j < pos.size(); ++j) d.push_back(pos[j] - pos[i]);
        }
        std::sort(d.begin(), d.end());
        return d;
      };
      const auto a = pairwise(positions[0]);
      const auto b = pairwise(positions[1]);
      bool changed = a.size() != b.size();
      for (std::size_t i = 0; !changed && i < a.size(); ++i) changed = std::abs(a[i] - b[i]) > 1e-6;
      ok = changed;
    }
    o.require(ok, std::string(id) + detail);
  }
  return o;
}

SweepSpec localization_spec(std::vector<double> radii) {
  SweepSpec spec = figure_recipe("4b").series.front();
  spec.grid = {radii.front(), radii.back(), static_cast<int>(radii.size()), false};
  return spec;
}

std::vector<double> trial_values(const SweepResult& r, int point, const std::string& name) {
  std::vector<double> v;
  for (const SweepRow& row : r.rows) {
    if (row.point == point) v.push_back(row.observables.at(name));
  }
  return v;
}

Outcome localization_ordering(const SweepResult& r, double elapsed) {
  Outcome o;
  const auto ordered = trial_values(r, 0, "ipr_ave");
  const auto disordered = trial_values(r, 1, "ipr_ave");
  double mean0 = 0;
  double mean1 = 0;
  int wins = 0;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    mean0 += ordered[k] / ordered.size();
    mean1 += disordered[k] / disordered.size();
    if (disordered[k] > ordered[k]) ++wins;
  }
  double lo = 1.0;
  double hi = 0.0;
  for (const SweepRow& row : r.rows) {
    for (double v : row.series.at("ipr")) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  o.require(mean1 > mean0, "mean IPR_ave " + num(mean0) + " (R=0) -> " + num(mean1) + " (R=pi/2)");
  o.require(wins >= 18, std::to_string(wins) + "/" + std::to_string(ordered.size()) +
                            " seeds increase (need 18)");
  o.require(lo >= 1.0 / 15 - 1e-12 && hi <= 1.0 + 1e-12,
            "IPR_eta range [" + num(lo) + ", " + num(hi) + "] within [1/15, 1]");
  o.require(elapsed < 30.0, "runtime " + num(elapsed, 3) + " s < 30 s");
  return o;
}

Outcome localization_trend() {
  Outcome o;
  const SweepResult r =
      run_sweep(localization_spec({0, kPi / 8, kPi / 4, 3 * kPi / 8, kPi / 2}));
  std::vector<double> means;
  std::vector<double> errors;
  std::string detail = "mean+-se:";
  for (const AggregateRow& a : r.aggregates) {
    const Stats& s = a.stats.at("ipr_ave");
    means.push_back(s.mean);
    errors.push_back(std::sqrt(s.variance / s.count));
    detail += " " + num(s.mean) + "+-" + num(errors.back(), 2);
  }
  int violations = 0;
  bool within = true;
  for (std::size_t i = 1; i < means.size(); ++i) {
    if (means[i] >= means[i - 1]) continue;
    ++violations;
    const double se = std::hypot(errors[i], errors[i - 1]);
    const double drop = means[i - 1] - means[i];
    within = within && drop <= se;
    detail += "; drop " + num(drop) + " at R=" + num(r.aggregates[i].swept_value) + " vs se " + num(se, 2);
  }
  o.require(violations <= 1 && within, detail);
  return o;
}

std::vector<double> mean_profile(const SweepResult& r, int point) {
  std::vector<double> mean;
  int count = 0;
  for (const SweepRow& row : r.rows) {
    if (row.point != point) continue;
    const auto& p = row.series.at("profile");
    mean.resize(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) mean[i] += p[i];
    ++count;
  }
  for (double& v : mean) v /= count;
  return mean;
}

int argmax_qubit(const std::vector<double>& profile) {
  return static_cast<int>(std::max_element(profile.begin(), profile.end()) - profile.begin()) + 1;
}

Outcome tail_suppression(const SweepResult& r) {
  Outcome o;
  const double pt0 = r.aggregates[0].stats.at("pt_mean").mean;
  const double pt1 = r.aggregates[1].stats.at("pt_mean").mean;
  o.require(pt1 < 0.5 * pt0, "mean P_t " + num(pt0) + " (R=0) -> " + num(pt1) + " (R=pi/2)");
  const int q0 = argmax_qubit(mean_profile(r, 0));
  const int q1 = argmax_qubit(mean_profile(r, 1));
  o.require(q1 >= 1 && q1 <= 5, "eta=10 profile maximum at qubit " + std::to_string(q1) +
                                    " for R=pi/2");
  o.require(q0 > 5, "eta=10 profile maximum at qubit " + std::to_string(q0) + " for R=0");
  return o;
}

Outcome crx_step_and_localization() {
  Outcome o;
  SeededRng rng(2026);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double theta = rng.uniform(-2 * kPi, 2 * kPi);
    StateVector s = StateVector::basis(2, "10");
    apply_gate(s, GateOp::crx(1, theta));
    const auto p = occupation_probs(s);
    worst = std::max({worst, std::abs(p[0] - 1.0), std::abs(p[1] - std::pow(std::sin(theta / 2), 2))});
  }
  o.require(worst <= 1e-12, "CRx on |10>: max deviation " + num(worst, 3));

  const SweepResult r = run_sweep(figure_recipe("3c").series.front());
  std::string detail = "P_t(eta=10):";
  bool decreasing = true;
  double previous = 2.0;
  for (const AggregateRow& a : r.aggregates) {
    const double pt = a.stats.at("pt_profile").mean;
    detail += " R=" + num(a.swept_value) + ":" + num(pt);
    decreasing = decreasing && pt < previous;
    previous = pt;
  }
  o.require(decreasing, detail);
  return o;
}

Outcome backend_equivalence() {
  Outcome o;
  SeededRng rng(1111);
  double worst_prob = 0.0;
  double worst_norm = 0.0;
  for (int c = 0; c < 50; ++c) {
    TrotterCircuitSpec spec;
    spec.n_qubits = 2 + static_cast<int>(rng.uniform01() * 9);
    spec.n_steps = 1 + static_cast<int>(rng.uniform01() * 20);
    for (int j = 1; j < spec.n_qubits; ++j) spec.bond_angles.push_back(rng.uniform(-kPi, kPi));
    spec.z_layer.base_phi = rng.uniform(-kPi, kPi);
    spec.z_layer.disorder_radius = rng.uniform(0.0, kPi);
    spec.drop_final_z = rng.uniform01() < 0.5;
    spec.initial_excitation_site = 1 + static_cast<int>(rng.uniform01() * spec.n_qubits);
    const std::uint64_t seed = mix_seed(99, c, 0);

    std::vector<std::vector<double>> dense_steps;
    StateVector state(spec.n_qubits);
    for (const GateOp& g : build_circuit(spec, seed)) {
      apply_gate(state, g);
      worst_norm = std::max(worst_norm, std::abs(state.norm_squared() - 1.0));
    }
    run_circuit_steps(spec, seed, [&](int, const StateVector& s) {
      dense_steps.push_back(occupation_probs(s));
    });
    int eta = 0;
    run_discrete_steps(spec, seed, [&](int, const SubspaceState& s) {
      worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1.0));
      const auto p = s.probabilities();
      const auto& d = dense_steps[static_cast<std::size_t>(eta++)];
      for (std::size_t i = 0; i < p.size(); ++i) worst_prob = std::max(worst_prob, std::abs(p[i] - d[i]));
    });
  }
  o.require(worst_prob <= 1e-10, "max probability difference " + num(worst_prob, 3));
  o.require(worst_norm <= 1e-12, "max norm drift " + num(worst_norm, 3));
  return o;
}

Outcome trotter_convergence() {
  Outcome o;
  const int n_ts[] = {20480, 40960, 81920, 163840};
  for (double v2 : {10.0, 20.0}) {
    const double outer = std::sqrt(2 * 20.0 * 20.0 + v2 * v2);
    for (double v1 : {0.0, outer}) {
      const auto rows = convergence_study(resonance_chain(5, 0.1, 20.0, v1, v2), 40.0, n_ts);
      bool ok = true;
      std::string detail = "V2=" + num(v2) + " V1=" + num(v1) + " ratios";
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const double ratio = rows[i - 1].distance / rows[i].distance;
        ok = ok && ratio >= 1.5 && ratio <= 2.5;
        detail += " " + num(ratio);
      }
      o.require(ok, detail);
    }
  }
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string rendered(const ExperimentOutput& out) {
  std::string all;
  for (const WrittenFile& f : render_outputs(out, "figure.csv", "csv")) all += f.path + "\n" + f.contents;
  for (const WrittenFile& f : render_outputs(out, "figure.json", "json")) all += f.contents;
  return all;
}

Outcome determinism(const char* binary) {
  Outcome o;
  std::vector<std::string> unstable;
  for (const std::string& id : figure_ids()) {
    const std::string a = rendered(run_figure(id, 1));
    const std::string b = rendered(run_figure(id, 1));
    const std::string c = rendered(run_figure(id, 4));
    if (a != b || a != c) unstable.push_back(id);
  }
  std::string which;
  for (const auto& id : unstable) which += " " + id;
  o.require(unstable.empty(), "11 figures identical across runs and 1/4 threads" +
                                  (unstable.empty() ? std::string() : ":" + which));

  if (binary == nullptr) {
    o.require(false, "no executable given for the end-to-end check");
    return o;
  }
  const fs::path dir = fs::temp_directory_path() / "trotterlab_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"figure 4b --seed 5", "fig.csv"}, {"localization --seed 9", "loc.csv"},
      {"resonance --seed 7", "res.csv"}};
  bool same = true;
  for (const auto& [args, file] : runs) {
    std::vector<std::string> contents;
    for (const char* threads : {"1", "1", "3"}) {
      const fs::path out = dir / (std::string(threads) + "_" + std::to_string(contents.size()) + "_" + file);
      const std::string cmd = std::string(binary) + " " + args + " --threads " + threads + " --out " +
                              out.string() + " > /dev/null";
      if (std::system(cmd.c_str()) != 0) {
        std::cerr << "command failed: " << cmd << std::endl;
        same = false;
        break;
      }
      const std::string stem = out.stem().string();
      std::vector<fs::path> written;
      for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().filename().string().rfind(stem, 0) == 0) written.push_back(entry.path());
      }
      std::sort(written.begin(), written.end());
      std::string all;
      for (const fs::path& p : written) all += p.filename().string().substr(stem.size()) + slurp(p);
      contents.push_back(all);
    }
    const bool ok = contents.size() == 3 && contents[0] == contents[1] && contents[0] == contents[2];
    if (!ok) std::cerr << "outputs differ for: " << args << std::endl;
    same = same && ok;
  }
  fs::remove_all(dir);
  o.require(same, "CLI figure 4b, localization and resonance byte-identical across runs and threads");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const char* binary = argc > 1 ? argv[1] : nullptr;
  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << "criterion " << id << " " << name << ": "
              << o.detail << std::endl;
  };

  report(1, "closed form, two qubits", [] { return closed_form_identity(2); });
  report(2, "closed form, three qubits", [] { return closed_form_identity(3); });
  report(3, "resonance location, N=2 and N=3", resonance_location);
  report(4, "peak positions, N=4", four_site_peaks);
  report(5, "peak positions, N=5", five_site_peaks);
  report(6, "discrete resonance signature", discrete_signature);

  const auto start = std::chrono::steady_clock::now();
  const SweepResult ensemble = run_sweep(localization_spec({0, kPi / 2}));
  const double elapsed = seconds_since(start);
  report(7, "localization ordering", [&] { return localization_ordering(ensemble, elapsed); });
  report(8, "localization trend", localization_trend);
  report(9, "tail suppression", [&] { return tail_suppression(ensemble); });
  report(10, "controlled-Rx step and localization", crx_step_and_localization);
  report(11, "backend equivalence", backend_equivalence);
  report(12, "Trotter convergence", trotter_convergence);
  report(13, "determinism", [&] { return determinism(binary); });

  std::cout << (13 - failures) << "/13 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
