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

#include "trotterlab/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "trotterlab/errors.hpp"

namespace trotterlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

using json = nlohmann::json;

std::map<std::string, double> numbers_from_object(const json& obj, std::string_view what) {
  if (!obj.is_object()) throw ConfigError(std::string(what) + " must be an object");
  std::map<std::string, double> out;
  for (const auto& [key, value] : obj.items()) {
    out[key] = number_from_json(value, std::string(what) + "." + key);
  }
  return out;
}

std::map<std::string, std::string> strings_from_object(const json& obj, std::string_view what) {
  if (!obj.is_object()) throw ConfigError(std::string(what) + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string()) {
      throw ConfigError(std::string(what) + "." + key + " must be a string");
    }
    out[key] = value.get<std::string>();
  }
  return out;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  if (parse_number(s, value)) return value;

  const std::size_t at = s.find("pi");
  if (at == std::string_view::npos) {
    throw ConfigError("cannot parse number or angle '" + std::string(text) + "'");
  }
  std::string_view coef = trim(s.substr(0, at));
  std::string_view rest = trim(s.substr(at + 2));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));

  double factor = 1.0;
  if (coef.empty() || coef == "+") {
    factor = 1.0;
  } else if (coef == "-") {
    factor = -1.0;
  } else if (!parse_number(coef, factor)) {
    throw ConfigError("bad coefficient in angle '" + std::string(text) + "'");
  }

  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/' || !parse_number(rest.substr(1), denom) || denom == 0.0) {
      throw ConfigError("bad denominator in angle '" + std::string(text) + "'");
    }
  }
  return factor * std::numbers::pi / denom;
}

double number_from_json(const json& value, std::string_view what) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    try {
      return parse_angle(value.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(what) + ": " + e.what());
    }
  }
  throw ConfigError(std::string(what) + " must be a number or angle string");
}

Grid parse_grid(std::string_view text) {
  const std::size_t a = text.find(':');
  const std::size_t b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (a == std::string_view::npos || b == std::string_view::npos) {
    throw ConfigError("grid must look like start:stop:count, got '" + std::string(text) + "'");
  }
  Grid grid;
  grid.start = parse_angle(text.substr(0, a));
  grid.stop = parse_angle(text.substr(a + 1, b - a - 1));
  double count = 0.0;
  if (!parse_number(text.substr(b + 1), count) || count != std::round(count) || count < 2) {
    throw ConfigError("grid count must be an integer >= 2 in '" + std::string(text) + "'");
  }
  grid.count = static_cast<int>(count);
  return grid;
}

RunConfig parse_run_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("experiment")) throw ConfigError("config has no 'experiment' section");
  const json& exp = doc.at("experiment");

  RunConfig config;
  SweepSpec& spec = config.experiment;
  if (!exp.contains("kind") || !exp.at("kind").is_string()) {
    throw ConfigError("experiment.kind must be a string");
  }
  spec.kind = parse_experiment_kind(exp.at("kind").get<std::string>());
  spec.trials = default_trials(spec.kind);

  if (!exp.contains("swept")) throw ConfigError("experiment.swept is required");
  const json& swept = exp.at("swept");
  if (!swept.is_object() || !swept.contains("name") || !swept.at("name").is_string()) {
    throw ConfigError("experiment.swept.name must be a string");
  }
  spec.swept = swept.at("name").get<std::string>();
  for (const char* key : {"start", "stop", "count"}) {
    if (!swept.contains(key)) throw ConfigError(std::string("experiment.swept.") + key + " is required");
  }
  spec.grid.start = number_from_json(swept.at("start"), "experiment.swept.start");
  spec.grid.stop = number_from_json(swept.at("stop"), "experiment.swept.stop");
  const double count = number_from_json(swept.at("count"), "experiment.swept.count");
  if (count != std::round(count)) throw ConfigError("experiment.swept.count must be an integer");
  spec.grid.count = static_cast<int>(count);
  if (swept.contains("spacing")) {
    const std::string spacing = swept.at("spacing").get<std::string>();
    if (spacing == "geometric") {
      spec.grid.geometric = true;
    } else if (spacing != "linear") {
      throw ConfigError("experiment.swept.spacing must be linear or geometric");
    }
  }

  if (exp.contains("fixed")) spec.fixed = numbers_from_object(exp.at("fixed"), "experiment.fixed");
  if (exp.contains("options")) {
    spec.options = strings_from_object(exp.at("options"), "experiment.options");
  }
  if (exp.contains("trials")) {
    const double trials = number_from_json(exp.at("trials"), "experiment.trials");
    if (trials != std::round(trials) || trials < 1) {
      throw ConfigError("experiment.trials must be an integer >= 1");
    }
    spec.trials = static_cast<int>(trials);
  }
  if (exp.contains("seed")) {
    if (!exp.at("seed").is_number_unsigned()) {
      throw ConfigError("experiment.seed must be a non-negative integer");
    }
    spec.master_seed = exp.at("seed").get<std::uint64_t>();
  }
  if (exp.contains("series_id")) spec.series_id = exp.at("series_id").get<std::string>();
  if (exp.contains("series")) {
    if (!exp.at("series").is_array()) throw ConfigError("experiment.series must be an array");
    for (const json& item : exp.at("series")) {
      SeriesOverride s;
      if (!item.contains("id") || !item.at("id").is_string()) {
        throw ConfigError("every series needs a string id");
      }
      s.id = item.at("id").get<std::string>();
      if (item.contains("fixed")) s.fixed = numbers_from_object(item.at("fixed"), "series.fixed");
      if (item.contains("options")) {
        s.options = strings_from_object(item.at("options"), "series.options");
      }
      config.series.push_back(std::move(s));
    }
  }

  if (doc.contains("output")) {
    const json& out = doc.at("output");
    if (out.contains("path")) config.output.path = out.at("path").get<std::string>();
    if (out.contains("format")) config.output.format = out.at("format").get<std::string>();
  }
  if (config.output.format != "csv" && config.output.format != "json") {
    throw ConfigError("output.format must be csv or json");
  }
  if (doc.contains("engine")) {
    const json& eng = doc.at("engine");
    if (eng.contains("backend")) config.engine.backend = eng.at("backend").get<std::string>();
    if (eng.contains("threads")) config.engine.threads = eng.at("threads").get<int>();
    if (eng.contains("verification")) {
      config.engine.verification = eng.at("verification").get<bool>();
    }
  }
  if (config.engine.backend != "auto" && config.engine.backend != "dense" &&
      config.engine.backend != "subspace") {
    throw ConfigError("engine.backend must be auto, dense or subspace");
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    return parse_run_config(doc);
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
}

std::vector<SweepSpec> expand_series(const RunConfig& config) {
  std::vector<SweepSpec> out;
  auto finish = [&](SweepSpec spec) {
    if (!spec.options.contains("backend") && config.engine.backend != "auto") {
      spec.options["backend"] = config.engine.backend;
    }
    const bool crx = spec.kind == ExperimentKind::CrxResonance ||
                     (spec.options.contains("family") &&
                      parse_gate_family(spec.options.at("family")) == GateFamily::CRX);
    if (crx && spec.options.contains("backend") && spec.options.at("backend") == "subspace") {
      throw ConfigError("backend=subspace cannot run controlled-Rx circuits");
    }
    if (crx && spec.kind != ExperimentKind::CrxResonance) spec.options["backend"] = "dense";
    validate(spec);
    out.push_back(std::move(spec));
  };
  if (config.series.empty()) {
    finish(config.experiment);
  } else {
    for (const SeriesOverride& s : config.series) {
      SweepSpec spec = config.experiment;
      spec.series_id = s.id;
      for (const auto& [k, v] : s.fixed) spec.fixed[k] = v;
      for (const auto& [k, v] : s.options) spec.options[k] = v;
      finish(std::move(spec));
    }
  }
  return out;
}

int effective_threads(const EngineSpec& engine) {
  if (engine.verification) return 1;
  return engine.threads < 1 ? 1 : engine.threads;
}

nlohmann::json to_json(const SweepSpec& spec) {
  json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["series_id"] = spec.series_id;
  j["swept"] = {{"name", spec.swept},
                {"start", spec.grid.start},
                {"stop", spec.grid.stop},
                {"count", spec.grid.count},
                {"spacing", spec.grid.geometric ? "geometric" : "linear"}};
  j["fixed"] = spec.fixed;
  j["options"] = spec.options;
  j["trials"] = spec.trials;
  j["seed"] = spec.master_seed;
  return j;
}

}  // namespace trotterlab
