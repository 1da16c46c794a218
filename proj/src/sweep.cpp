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

#include "trotterlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <set>
#include <thread>

#include "trotterlab/analytics.hpp"
#include "trotterlab/dense_sim.hpp"
#include "trotterlab/errors.hpp"
#include "trotterlab/random.hpp"
#include "trotterlab/subspace_sim.hpp"

namespace trotterlab {

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::ResonanceDiscrete: return "resonance_discrete";
    case ExperimentKind::ResonanceContinuous: return "resonance_continuous";
    case ExperimentKind::Localization: return "localization";
    case ExperimentKind::Convergence: return "convergence";
    case ExperimentKind::CrxResonance: return "crx_resonance";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  for (ExperimentKind k :
       {ExperimentKind::ResonanceDiscrete, ExperimentKind::ResonanceContinuous,
        ExperimentKind::Localization, ExperimentKind::Convergence,
        ExperimentKind::CrxResonance}) {
    if (text == to_string(k)) return k;
  }
  throw ConfigError("unknown experiment kind '" + std::string(text) + "'");
}

std::vector<double> Grid::values() const {
  if (count < 2) throw ConfigError("grid count must be >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double last = static_cast<double>(count - 1);
  if (geometric) {
    if (!(start > 0.0 && stop > 0.0)) {
      throw ConfigError("geometric grid needs positive endpoints");
    }
    const double ratio = stop / start;
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start * std::pow(ratio, i / last);
  } else {
    for (int i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = start + (stop - start) * (i / last);
    }
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

int default_trials(ExperimentKind kind) {
  return kind == ExperimentKind::Localization ? 20 : 1;
}

namespace {

struct KindSchema {
  std::vector<std::string> required;
  std::vector<std::string> optional;
  std::vector<std::string> integral;
};

const KindSchema& schema(ExperimentKind kind) {
  static const KindSchema continuous{{"n", "J1", "V1", "V2", "t"}, {"J2", "large_n_t"},
                                     {"n", "large_n_t"}};
  static const KindSchema discrete{{"n", "n_steps", "theta1", "phi", "alpha"}, {"theta2"},
                                   {"n", "n_steps"}};
  static const KindSchema crx{{"theta1", "phi", "alpha"}, {"n", "n_steps", "theta2"},
                              {"n", "n_steps"}};
  static const KindSchema localization{{"theta", "phi"}, {"n", "n_steps", "R", "profile_eta"},
                                       {"n", "n_steps", "profile_eta"}};
  static const KindSchema convergence{{"n", "J1", "V1", "V2", "t", "n_t"}, {"J2"},
                                      {"n", "n_t"}};
  switch (kind) {
    case ExperimentKind::ResonanceContinuous: return continuous;
    case ExperimentKind::ResonanceDiscrete: return discrete;
    case ExperimentKind::CrxResonance: return crx;
    case ExperimentKind::Localization: return localization;
    case ExperimentKind::Convergence: return convergence;
  }
  return continuous;
}

// Fixed parameters plus the swept one at the current grid value.
class Params {
 public:
  Params(const SweepSpec& spec, double swept_value) : spec_(spec), values_(spec.fixed) {
    values_[spec.swept] = swept_value;
  }

  double get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) {
      throw ConfigError("missing required parameter '" + name + "' for experiment " +
                        std::string(to_string(spec_.kind)));
    }
    return it->second;
  }
  double get_or(const std::string& name, double fallback) const {
    auto it = values_.find(name);
    return it == values_.end() ? fallback : it->second;
  }
  int get_int(const std::string& name) const { return static_cast<int>(std::lround(get(name))); }
  int get_int_or(const std::string& name, int fallback) const {
    return static_cast<int>(std::lround(get_or(name, fallback)));
  }
  std::string option(const std::string& name, const std::string& fallback) const {
    auto it = spec_.options.find(name);
    return it == spec_.options.end() ? fallback : it->second;
  }

 private:
  const SweepSpec& spec_;
  std::map<std::string, double> values_;
};

enum class Backend { Auto, Dense, Subspace };

Backend parse_backend(const std::string& text) {
  if (text == "auto") return Backend::Auto;
  if (text == "dense") return Backend::Dense;
  if (text == "subspace") return Backend::Subspace;
  throw ConfigError("unknown backend '" + text + "' (expected auto, dense or subspace)");
}

bool use_dense(const Params& params, GateFamily family) {
  const Backend backend = parse_backend(params.option("backend", "auto"));
  if (family == GateFamily::CRX) {
    if (backend == Backend::Subspace) {
      throw ConfigError("backend=subspace cannot run controlled-Rx circuits");
    }
    return true;
  }
  return backend == Backend::Dense;
}

double last_site_probability(const TrotterCircuitSpec& circuit, bool dense,
                             std::uint64_t seed) {
  if (dense) return occupation_probs(run_circuit(circuit, seed)).back();
  return run_discrete(circuit, circuit.n_steps, seed).probabilities().back();
}

SweepRow evaluate(const SweepSpec& spec, int point, double swept_value, int trial,
                  std::uint64_t seed) {
  SweepRow row{point, swept_value, trial, seed, {}, {}};
  const Params p(spec, swept_value);

  switch (spec.kind) {
    case ExperimentKind::ResonanceContinuous: {
      const int n = p.get_int("n");
      const double j1 = p.get("J1");
      const ChainSpec chain =
          resonance_chain(n, j1, p.get_or("J2", j1), p.get("V1"), p.get("V2"));
      const double t = p.get("t");
      const std::string mode = p.option("mode", "exact");
      if (mode == "exact") {
        row.observables["probability"] = continuous_evolve(chain, t, 1).probabilities().back();
      } else if (mode == "large_nt") {
        const int n_t = p.get_int_or("large_n_t", 2000);
        if (n_t < 1) throw ConfigError("large_n_t must be >= 1");
        const TrotterCircuitSpec circuit = circuit_from_chain(chain, t / n_t, n_t);
        row.observables["probability"] = last_site_probability(circuit, false, seed);
      } else {
        throw ConfigError("unknown mode '" + mode + "' (expected exact or large_nt)");
      }
      break;
    }
    case ExperimentKind::ResonanceDiscrete:
    case ExperimentKind::CrxResonance: {
      const bool crx = spec.kind == ExperimentKind::CrxResonance;
      const GateFamily family = crx ? GateFamily::CRX : GateFamily::XY;
      const double theta1 = p.get("theta1");
      const TrotterCircuitSpec circuit = resonance_circuit(
          crx ? p.get_int_or("n", 4) : p.get_int("n"),
          crx ? p.get_int_or("n_steps", 3) : p.get_int("n_steps"), theta1,
          p.get_or("theta2", theta1), p.get("phi"), p.get("alpha"), family,
          parse_angle_convention(p.option("angle_convention", "hop")));
      row.observables["probability"] =
          last_site_probability(circuit, use_dense(p, family), seed);
      break;
    }
    case ExperimentKind::Localization: {
      TrotterCircuitSpec circuit;
      circuit.n_qubits = p.get_int_or("n", 15);
      circuit.n_steps = p.get_int_or("n_steps", 80);
      circuit.family = parse_gate_family(p.option("family", "xy"));
      circuit.convention = parse_angle_convention(p.option("angle_convention", "hop"));
      circuit.bond_angles.assign(static_cast<std::size_t>(std::max(circuit.n_qubits - 1, 0)),
                                 p.get("theta"));
      circuit.z_layer.base_phi = p.get("phi");
      circuit.z_layer.disorder_radius = p.get_or("R", 0.0);
      const int profile_eta = p.get_int_or("profile_eta", 10);

      std::vector<std::vector<double>> step_probs;
      step_probs.reserve(static_cast<std::size_t>(std::max(circuit.n_steps, 0)));
      if (use_dense(p, circuit.family)) {
        run_circuit_steps(circuit, seed, [&](int, const StateVector& s) {
          step_probs.push_back(occupation_probs(s));
        });
      } else {
        run_discrete_steps(circuit, seed, [&](int, const SubspaceState& s) {
          step_probs.push_back(s.probabilities());
        });
      }
      const LocalizationReport report = localization_report(step_probs, profile_eta);
      if (circuit.family == GateFamily::XY) {
        row.observables["ipr_ave"] = report.ipr_ave;
        row.series["ipr"] = report.ipr_series;
      }
      row.observables["pt_mean"] = ipr_ave(report.tail_series);
      row.observables["pt_profile"] = report.tail_series[static_cast<std::size_t>(profile_eta - 1)];
      const auto& prof = report.final_profile;
      row.observables["profile_argmax"] =
          static_cast<double>(std::max_element(prof.begin(), prof.end()) - prof.begin() + 1);
      row.series["pt"] = report.tail_series;
      row.series["profile"] = report.final_profile;
      break;
    }
    case ExperimentKind::Convergence: {
      const int n = p.get_int("n");
      const double j1 = p.get("J1");
      const ChainSpec chain =
          resonance_chain(n, j1, p.get_or("J2", j1), p.get("V1"), p.get("V2"));
      const int n_t = p.get_int("n_t");
      const int list[] = {n_t};
      row.observables["distance"] = convergence_study(chain, p.get("t"), list).front().distance;
      break;
    }
  }
  return row;
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.grid.count < 2) throw ConfigError("grid count must be >= 2");
  if (spec.trials < 1) throw ConfigError("trials must be >= 1");
  if (spec.swept.empty()) throw ConfigError("no swept parameter given");

  const KindSchema& s = schema(spec.kind);
  std::set<std::string> known(s.required.begin(), s.required.end());
  known.insert(s.optional.begin(), s.optional.end());
  const std::string kind{to_string(spec.kind)};
  if (!known.contains(spec.swept)) {
    throw ConfigError("parameter '" + spec.swept + "' cannot be swept in experiment " + kind);
  }
  for (const auto& [name, value] : spec.fixed) {
    if (!known.contains(name)) {
      throw ConfigError("unknown parameter '" + name + "' for experiment " + kind);
    }
    if (!std::isfinite(value)) throw ConfigError("parameter '" + name + "' is not finite");
  }
  for (const std::string& name : s.required) {
    if (name != spec.swept && !spec.fixed.contains(name)) {
      throw ConfigError("missing required parameter '" + name + "' for experiment " + kind);
    }
  }
  (void)spec.grid.values();
  for (const std::string& name : s.integral) {
    auto it = spec.fixed.find(name);
    if (name == spec.swept || it == spec.fixed.end()) continue;
    if (std::round(it->second) != it->second) {
      throw ConfigError("parameter '" + name + "' must be an integer, got " +
                        std::to_string(it->second));
    }
  }
  if (auto it = spec.fixed.find("R"); it != spec.fixed.end() && it->second < 0.0) {
    throw ConfigError("R must be >= 0");
  }
  for (const auto& [name, value] : spec.options) {
    if (name == "backend") {
      parse_backend(value);
    } else if (name == "angle_convention") {
      parse_angle_convention(value);
    } else if (name == "family") {
      if (spec.kind != ExperimentKind::Localization) {
        throw ConfigError("option 'family' only applies to localization");
      }
      if (parse_gate_family(value) == GateFamily::CRX && spec.options.contains("backend") &&
          spec.options.at("backend") == "subspace") {
        throw ConfigError("backend=subspace cannot run controlled-Rx circuits");
      }
    } else if (name == "mode") {
      if (value != "exact" && value != "large_nt") {
        throw ConfigError("unknown mode '" + value + "' (expected exact or large_nt)");
      }
    } else {
      throw ConfigError("unknown option '" + name + "'");
    }
  }
}

Stats accumulate_stats(std::span<const double> values) {
  Stats s;
  double m2 = 0.0;
  for (double v : values) {
    ++s.count;
    const double delta = v - s.mean;
    s.mean += delta / s.count;
    m2 += delta * (v - s.mean);
  }
  s.variance = s.count > 1 ? m2 / (s.count - 1) : 0.0;
  if (s.variance < 0.0) s.variance = 0.0;
  return s;
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  validate(spec);
  std::vector<double> grid = spec.grid.values();
  // Integer parameters swept on a geometric or linear grid are rounded.
  const KindSchema& s = schema(spec.kind);
  if (std::find(s.integral.begin(), s.integral.end(), spec.swept) != s.integral.end()) {
    for (double& v : grid) v = std::round(v);
  }

  const int points = static_cast<int>(grid.size());
  const std::size_t items = static_cast<std::size_t>(points) * spec.trials;
  std::vector<SweepRow> rows(items);
  std::vector<std::exception_ptr> errors(items);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items; i = next++) {
      const int point = static_cast<int>(i / spec.trials);
      const int trial = static_cast<int>(i % spec.trials);
      const std::uint64_t seed = mix_seed(spec.master_seed, static_cast<std::uint64_t>(point),
                                          static_cast<std::uint64_t>(trial));
      try {
        rows[i] = evaluate(spec, point, grid[static_cast<std::size_t>(point)], trial, seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n_threads =
      std::clamp(threads, 1, static_cast<int>(std::min<std::size_t>(items, 256)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult result;
  result.spec = spec;
  result.provenance.generator = std::string(kGeneratorName);
  result.provenance.master_seed = spec.master_seed;
  for (int point = 0; point < points; ++point) {
    AggregateRow agg;
    agg.point = point;
    agg.swept_value = grid[static_cast<std::size_t>(point)];
    const auto begin = rows.begin() + static_cast<std::ptrdiff_t>(point) * spec.trials;
    for (const auto& [name, _] : begin->observables) {
      std::vector<double> values;
      values.reserve(static_cast<std::size_t>(spec.trials));
      for (auto it = begin; it != begin + spec.trials; ++it) values.push_back(it->observables.at(name));
      agg.stats[name] = accumulate_stats(values);
    }
    result.aggregates.push_back(std::move(agg));
  }
  result.rows = std::move(rows);
  return result;
}

ChainSpec resonance_chain(int n, double j1, double j2, double v1, double v2) {
  ChainSpec chain;
  switch (n) {
    case 2:
      chain.couplings = {j1};
      chain.potentials = {v1, v2};
      break;
    case 3:
      chain.couplings = {j1, j1};
      chain.potentials = {v1, v2, v1};
      break;
    case 4:
      chain.couplings = {j1, j2, j1};
      chain.potentials = {v1, v2, -v2, v1};
      break;
    case 5:
      chain.couplings = {j1, j2, j2, j1};
      chain.potentials = {v1, v2, 0.0, -v2, v1};
      break;
    default:
      throw ConfigError("resonance layouts exist for n = 2..5, got n = " + std::to_string(n));
  }
  return chain;
}

TrotterCircuitSpec resonance_circuit(int n, int n_steps, double theta1, double theta2,
                                     double phi, double alpha, GateFamily family,
                                     AngleConvention convention) {
  const ChainSpec layout = resonance_chain(n, theta1, theta2, phi, alpha);
  TrotterCircuitSpec spec;
  spec.n_qubits = n;
  spec.n_steps = n_steps;
  spec.family = family;
  spec.convention = convention;
  spec.bond_angles = layout.couplings;
  spec.z_layer.explicit_phis = layout.potentials;
  validate(spec);
  return spec;
}

std::vector<ConvergenceRow> convergence_study(const ChainSpec& chain, double t,
                                              std::span<const int> n_t_list, int init_site) {
  for (std::size_t i = 0; i < n_t_list.size(); ++i) {
    if (n_t_list[i] < 1) throw ConfigError("N_T values must be >= 1");
    if (i > 0 && n_t_list[i] <= n_t_list[i - 1]) {
      throw ConfigError("N_T list must be strictly increasing");
    }
  }
  const ChainPropagator propagator(chain);
  const SubspaceState exact = propagator.evolve_from_site(init_site, t);

  std::vector<ConvergenceRow> out;
  for (int n_t : n_t_list) {
    TrotterCircuitSpec circuit = circuit_from_chain(chain, t / n_t, n_t);
    circuit.drop_final_z = false;
    circuit.initial_excitation_site = init_site;
    const SubspaceState discrete = run_discrete(circuit, n_t, 0);
    double d2 = 0.0;
    for (int j = 0; j < chain.size(); ++j) {
      d2 += std::norm(discrete.amplitudes()[static_cast<std::size_t>(j)] -
                      exact.amplitudes()[static_cast<std::size_t>(j)]);
    }
    out.push_back({n_t, std::sqrt(d2)});
  }
  return out;
}

}  // namespace trotterlab
