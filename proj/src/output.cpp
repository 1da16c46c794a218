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

#include "trotterlab/output.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trotterlab/config.hpp"
#include "trotterlab/errors.hpp"

namespace trotterlab {
namespace {

using json = nlohmann::json;

bool is_resonance(ExperimentKind kind) {
  return kind == ExperimentKind::ResonanceContinuous ||
         kind == ExperimentKind::ResonanceDiscrete || kind == ExperimentKind::CrxResonance;
}

std::string companion_path(const std::string& path, std::string_view suffix) {
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path() / (p.stem().string() + std::string(suffix));
  out += p.has_extension() ? p.extension() : std::filesystem::path(".csv");
  return out.string();
}

void render_resonance(std::ostringstream& out, const ExperimentOutput& output) {
  out << "swept_value,series_id,probability\n";
  for (const SweepResult& r : output.series) {
    for (const AggregateRow& agg : r.aggregates) {
      out << format_double(agg.swept_value) << ',' << r.spec.series_id << ','
          << format_double(agg.stats.at("probability").mean) << '\n';
    }
  }
}

void render_convergence(std::ostringstream& out, const ExperimentOutput& output) {
  out << "n_t,series_id,distance\n";
  for (const SweepResult& r : output.series) {
    for (const AggregateRow& agg : r.aggregates) {
      out << format_double(agg.swept_value) << ',' << r.spec.series_id << ','
          << format_double(agg.stats.at("distance").mean) << '\n';
    }
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

json to_json(const SweepResult& result) {
  json j;
  j["spec"] = to_json(result.spec);
  j["provenance"] = {{"tool", result.provenance.tool},
                     {"version", result.provenance.version},
                     {"generator", result.provenance.generator},
                     {"master_seed", result.provenance.master_seed},
                     {"notes", result.provenance.notes}};
  json rows = json::array();
  for (const SweepRow& row : result.rows) {
    rows.push_back({{"point", row.point},
                    {"swept_value", row.swept_value},
                    {"trial", row.trial},
                    {"seed", row.seed},
                    {"observables", row.observables},
                    {"series", row.series}});
  }
  j["rows"] = std::move(rows);
  json aggs = json::array();
  for (const AggregateRow& agg : result.aggregates) {
    json stats = json::object();
    for (const auto& [name, s] : agg.stats) {
      stats[name] = {{"mean", s.mean}, {"variance", s.variance}, {"count", s.count}};
    }
    aggs.push_back({{"point", agg.point}, {"swept_value", agg.swept_value}, {"stats", stats}});
  }
  j["aggregates"] = std::move(aggs);
  return j;
}

json to_json(const ExperimentOutput& output) {
  json j;
  j["label"] = output.label;
  j["notes"] = output.notes;
  json series = json::array();
  for (const SweepResult& r : output.series) series.push_back(to_json(r));
  j["series"] = std::move(series);
  return j;
}

std::string provenance_header(const ExperimentOutput& output) {
  std::ostringstream out;
  out << "# tool: trotterlab " << kToolVersion << '\n';
  out << "# experiment: " << output.label << '\n';
  if (!output.series.empty()) {
    out << "# generator: " << output.series.front().provenance.generator << '\n';
    out << "# seed: " << output.series.front().spec.master_seed << '\n';
  }
  for (const SweepResult& r : output.series) {
    out << "# spec: " << to_json(r.spec).dump() << '\n';
  }
  for (const std::string& note : output.notes) out << "# note: " << note << '\n';
  return out.str();
}

std::vector<WrittenFile> render_outputs(const ExperimentOutput& output, const std::string& path,
                                        std::string_view format) {
  if (output.series.empty()) throw ConfigError("nothing to write");
  if (format == "json") {
    return {{path, to_json(output).dump(2) + "\n"}};
  }
  if (format != "csv") throw ConfigError("unknown output format '" + std::string(format) + "'");

  const std::string header = provenance_header(output);
  const ExperimentKind kind = output.series.front().spec.kind;
  std::vector<WrittenFile> files;
  std::ostringstream main;
  main << header;

  if (is_resonance(kind)) {
    for (const SweepResult& r : output.series) {
      if (!is_resonance(r.spec.kind)) throw ConfigError("cannot mix experiment kinds in one CSV");
    }
    render_resonance(main, output);
    files.push_back({path, main.str()});
    return files;
  }
  if (kind == ExperimentKind::Convergence) {
    render_convergence(main, output);
    files.push_back({path, main.str()});
    return files;
  }

  // Localization.
  if (output.series.size() != 1) {
    throw ConfigError("localization CSV output holds exactly one series; use --format json");
  }
  const SweepResult& r = output.series.front();
  const std::string& swept = r.spec.swept;
  const bool has_ipr = !r.rows.empty() && r.rows.front().observables.contains("ipr_ave");
  main << swept << ",trial," << (has_ipr ? "ipr_ave" : "pt_mean") << '\n';
  std::ostringstream ipr, tail, profile;
  ipr << header << swept << ",trial,eta,ipr\n";
  tail << header << swept << ",trial,eta,pt\n";
  profile << header << swept << ",trial,qubit,probability\n";
  for (const SweepRow& row : r.rows) {
    const std::string key = format_double(row.swept_value) + ',' + std::to_string(row.trial) + ',';
    main << key << format_double(row.observables.at(has_ipr ? "ipr_ave" : "pt_mean")) << '\n';
    if (has_ipr) {
      const auto& s = row.series.at("ipr");
      for (std::size_t i = 0; i < s.size(); ++i) ipr << key << i + 1 << ',' << format_double(s[i]) << '\n';
    }
    const auto& pt = row.series.at("pt");
    for (std::size_t i = 0; i < pt.size(); ++i) tail << key << i + 1 << ',' << format_double(pt[i]) << '\n';
    const auto& prof = row.series.at("profile");
    for (std::size_t i = 0; i < prof.size(); ++i) {
      profile << key << i + 1 << ',' << format_double(prof[i]) << '\n';
    }
  }
  files.push_back({path, main.str()});
  if (has_ipr) files.push_back({companion_path(path, "_ipr"), ipr.str()});
  files.push_back({companion_path(path, "_tail"), tail.str()});
  files.push_back({companion_path(path, "_profile"), profile.str()});
  return files;
}

std::vector<std::string> write_outputs(const ExperimentOutput& output, const std::string& path,
                                       std::string_view format) {
  std::vector<std::string> written;
  for (const WrittenFile& file : render_outputs(output, path, format)) {
    std::ofstream out(file.path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write output file '" + file.path + "'");
    out << file.contents;
    out.flush();
    if (!out) throw ConfigError("failed writing output file '" + file.path + "'");
    written.push_back(file.path);
  }
  return written;
}

}  // namespace trotterlab
