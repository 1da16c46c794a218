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

#include "trotterlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "trotterlab/errors.hpp"
#include "trotterlab/output.hpp"
#include "trotterlab/recipes.hpp"
#include "trotterlab/verify.hpp"

namespace trotterlab {
namespace {

struct SweepFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::optional<int> threads;
  std::string grid;
};

void add_common(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--seed", f.seed, "master seed (U64)");
  cmd->add_option("--out", f.out, "output path");
  cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", f.threads, "worker threads; 1 is the reference mode");
}

int resolve_threads(const SweepFlags& f, const EngineSpec& engine) {
  if (engine.verification) return 1;
  if (f.threads) {
    if (*f.threads < 1) throw ConfigError("--threads must be >= 1");
    return *f.threads;
  }
  if (const char* env = std::getenv(kThreadsEnvVar); env != nullptr && *env != '\0') {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string(kThreadsEnvVar) + " must be a positive integer");
  }
  return effective_threads(engine);
}

bool kind_matches(std::string_view subcommand, ExperimentKind kind) {
  if (subcommand == "resonance") {
    return kind == ExperimentKind::ResonanceDiscrete || kind == ExperimentKind::ResonanceContinuous;
  }
  if (subcommand == "localization") return kind == ExperimentKind::Localization;
  if (subcommand == "convergence") return kind == ExperimentKind::Convergence;
  if (subcommand == "crx") return kind == ExperimentKind::CrxResonance;
  return false;
}

int run_sweep_command(std::string_view name, const SweepFlags& f, std::ostream& out) {
  RunConfig config = f.config.empty() ? default_config(name) : load_run_config(f.config);
  if (!kind_matches(name, config.experiment.kind)) {
    throw ConfigError("experiment kind '" + std::string(to_string(config.experiment.kind)) +
                      "' does not belong to subcommand '" + std::string(name) + "'");
  }
  if (f.seed) config.experiment.master_seed = *f.seed;
  if (!f.grid.empty()) {
    const bool geometric = config.experiment.grid.geometric;
    config.experiment.grid = parse_grid(f.grid);
    config.experiment.grid.geometric = geometric;
  }
  if (!f.format.empty()) config.output.format = f.format;
  if (!f.out.empty()) config.output.path = f.out;
  if (config.output.path.empty()) config.output.path = std::string(name) + "." + config.output.format;

  const int threads = resolve_threads(f, config.engine);
  ExperimentOutput output;
  output.label = std::string(name);
  for (const SweepSpec& spec : expand_series(config)) {
    output.series.push_back(run_sweep(spec, threads));
  }
  for (const std::string& path : write_outputs(output, config.output.path, config.output.format)) {
    out << "wrote " << path << '\n';
  }
  return kExitOk;
}

}  // namespace

RunConfig default_config(std::string_view subcommand) {
  using nlohmann::json;
  json doc;
  if (subcommand == "resonance") {
    doc["experiment"] = {
        {"kind", "resonance_discrete"},
        {"swept", {{"name", "phi"}, {"start", "-pi"}, {"stop", "pi"}, {"count", 101}}},
        {"fixed", {{"n", 2}, {"n_steps", 2}, {"theta1", "pi/4"}, {"alpha", 0}}}};
  } else if (subcommand == "localization") {
    doc["experiment"] = {
        {"kind", "localization"},
        {"swept", {{"name", "R"}, {"start", 0}, {"stop", "pi/2"}, {"count", 5}}},
        {"fixed", {{"n", 15}, {"n_steps", 80}, {"theta", "pi/2"}, {"phi", "pi/2"}}},
        {"options", {{"angle_convention", "hamiltonian"}}},
        {"trials", 20}};
  } else if (subcommand == "convergence") {
    doc["experiment"] = {
        {"kind", "convergence"},
        {"swept",
         {{"name", "n_t"}, {"start", 20480}, {"stop", 163840}, {"count", 4}, {"spacing", "geometric"}}},
        {"fixed", {{"n", 5}, {"J1", 0.1}, {"J2", 20}, {"V1", 0}, {"V2", 10}, {"t", 40}}}};
  } else if (subcommand == "crx") {
    doc["experiment"] = {
        {"kind", "crx_resonance"},
        {"swept", {{"name", "phi"}, {"start", "-pi"}, {"stop", "pi"}, {"count", 361}}},
        {"fixed", {{"n", 4}, {"n_steps", 3}, {"theta1", "pi/2"}, {"alpha", "pi/4"}}}};
  } else {
    throw ConfigError("no default configuration for '" + std::string(subcommand) + "'");
  }
  return parse_run_config(doc);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trotter-circuit simulator for transverse-field XY chains", "trotterlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::vector<std::pair<std::string, SweepFlags>> sweeps = {
      {"resonance", {}}, {"localization", {}}, {"convergence", {}}, {"crx", {}}};
  std::vector<CLI::App*> sweep_cmds;
  const char* help[] = {"resonance sweep (discrete or continuous)", "disorder ensemble",
                        "Trotter error against the exact propagator",
                        "controlled-Rx resonance sweep"};
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    auto& [name, flags] = sweeps[i];
    CLI::App* cmd = app.add_subcommand(name, help[i]);
    cmd->add_option("--config", flags.config, "JSON run configuration")->check(CLI::ExistingFile);
    cmd->add_option("--grid", flags.grid, "override swept grid as start:stop:count");
    add_common(cmd, flags);
    sweep_cmds.push_back(cmd);
  }

  SweepFlags figure_flags;
  std::string figure_id;
  CLI::App* figure = app.add_subcommand("figure", "run a bundled figure recipe");
  figure->add_option("id", figure_id, "figure id")->required();
  add_common(figure, figure_flags);

  CLI::App* verify = app.add_subcommand("verify", "run built-in oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    for (std::size_t i = 0; i < sweeps.size(); ++i) {
      if (sweep_cmds[i]->parsed()) return run_sweep_command(sweeps[i].first, sweeps[i].second, out);
    }
    if (figure->parsed()) {
      const int threads = resolve_threads(figure_flags, EngineSpec{});
      const ExperimentOutput output = run_figure(figure_id, threads, figure_flags.seed);
      const std::string format = figure_flags.format.empty() ? "csv" : figure_flags.format;
      const std::string path = figure_flags.out.empty() ? "figure_" + figure_id + "." + format
                                                        : figure_flags.out;
      for (const std::string& p : write_outputs(output, path, format)) out << "wrote " << p << '\n';
      return kExitOk;
    }
    if (verify->parsed()) {
      const VerifyReport report = run_verification();
      for (const SuiteResult& s : report.suites) {
        out << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.detail << '\n';
      }
      out << report.passed() << " passed, " << report.failed() << " failed\n";
      return report.failed() == 0 ? kExitOk : kExitTestFailure;
    }
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const UnsupportedMapping& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitTestFailure;
  }
  return kExitConfigError;
}

}  // namespace trotterlab
