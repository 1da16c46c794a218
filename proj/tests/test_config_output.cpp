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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "trotterlab/config.hpp"
#include "trotterlab/errors.hpp"
#include "trotterlab/output.hpp"
#include "trotterlab/recipes.hpp"

namespace trotterlab {
namespace {

constexpr double kPi = std::numbers::pi;
using nlohmann::json;

json localization_doc() {
  return json::parse(R"({
    "experiment": {
      "kind": "localization",
      "swept": {"name": "R", "start": 0, "stop": "pi/2", "count": 3},
      "fixed": {"n": 6, "n_steps": 8, "theta": "pi/2", "phi": "pi/2", "profile_eta": 4},
      "options": {"angle_convention": "hamiltonian"},
      "trials": 2,
      "seed": 11
    },
    "output": {"path": "loc.csv"}
  })");
}

TEST(ParseAngle, Literals) {
  EXPECT_DOUBLE_EQ(parse_angle("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(parse_angle("-3pi/4"), -3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("2*pi/3"), 2 * kPi / 3);
  EXPECT_DOUBLE_EQ(parse_angle("pi/1.5"), kPi / 1.5);
  EXPECT_DOUBLE_EQ(parse_angle("-pi"), -kPi);
  EXPECT_DOUBLE_EQ(parse_angle("0.25"), 0.25);
  EXPECT_THROW(parse_angle("pie"), ConfigError);
  EXPECT_THROW(parse_angle(""), ConfigError);
  EXPECT_THROW(parse_angle("pi/0"), ConfigError);
}

TEST(ParseGrid, Override) {
  const Grid g = parse_grid("-pi:pi:9");
  EXPECT_DOUBLE_EQ(g.start, -kPi);
  EXPECT_DOUBLE_EQ(g.stop, kPi);
  EXPECT_EQ(g.count, 9);
  EXPECT_THROW(parse_grid("0:1"), ConfigError);
  EXPECT_THROW(parse_grid("0:1:x"), ConfigError);
}

TEST(RunConfig, ParsesSections) {
  const RunConfig c = parse_run_config(localization_doc());
  EXPECT_EQ(c.experiment.kind, ExperimentKind::Localization);
  EXPECT_EQ(c.experiment.swept, "R");
  EXPECT_DOUBLE_EQ(c.experiment.grid.stop, kPi / 2);
  EXPECT_EQ(c.experiment.trials, 2);
  EXPECT_EQ(c.experiment.master_seed, 11u);
  EXPECT_EQ(c.output.path, "loc.csv");
  EXPECT_EQ(c.output.format, "csv");
  EXPECT_EQ(c.engine.backend, "auto");
}

TEST(RunConfig, DefaultTrialsByKind) {
  json doc = localization_doc();
  doc["experiment"].erase("trials");
  EXPECT_EQ(parse_run_config(doc).experiment.trials, 20);
}

TEST(RunConfig, Errors) {
  json doc = localization_doc();
  doc["experiment"]["kind"] = "teleport";
  EXPECT_THROW(parse_run_config(doc), ConfigError);
  doc = localization_doc();
  doc["experiment"]["fixed"].erase("theta");
  EXPECT_THROW(expand_series(parse_run_config(doc)), ConfigError);
  doc = localization_doc();
  doc["engine"] = {{"backend", "quantum"}};
  EXPECT_THROW(parse_run_config(doc), ConfigError);
  EXPECT_THROW(load_run_config("/nonexistent/config.json"), ConfigError);
}

TEST(ExpandSeries, BackendRules) {
  json doc = localization_doc();
  doc["engine"] = {{"backend", "subspace"}};
  doc["experiment"]["options"]["family"] = "crx";
  EXPECT_THROW(expand_series(parse_run_config(doc)), ConfigError);

  doc = localization_doc();
  doc["experiment"]["options"]["family"] = "crx";
  EXPECT_EQ(expand_series(parse_run_config(doc)).front().options.at("backend"), "dense");

  doc = localization_doc();
  doc["engine"] = {{"backend", "dense"}};
  EXPECT_EQ(expand_series(parse_run_config(doc)).front().options.at("backend"), "dense");
}

TEST(ExpandSeries, Overrides) {
  json doc = localization_doc();
  doc["experiment"]["series"] = json::array(
      {{{"id", "a"}, {"fixed", {{"phi", 0.5}}}}, {{"id", "b"}, {"fixed", {{"phi", "pi/3"}}}}});
  const auto specs = expand_series(parse_run_config(doc));
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].series_id, "a");
  EXPECT_DOUBLE_EQ(specs[1].fixed.at("phi"), kPi / 3);
  EXPECT_DOUBLE_EQ(specs[1].fixed.at("theta"), kPi / 2);
}

TEST(EffectiveThreads, VerificationForcesOne) {
  EXPECT_EQ(effective_threads({"auto", 8, true}), 1);
  EXPECT_EQ(effective_threads({"auto", 4, false}), 4);
  EXPECT_EQ(effective_threads({"auto", 0, false}), 1);
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, -kPi, 1e-300, 123456789.0, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

ExperimentOutput run_config(const json& doc) {
  ExperimentOutput out;
  out.label = "test";
  for (const SweepSpec& spec : expand_series(parse_run_config(doc))) out.series.push_back(run_sweep(spec));
  return out;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

TEST(RenderOutputs, LocalizationSchema) {
  const auto files = render_outputs(run_config(localization_doc()), "out/loc.csv", "csv");
  ASSERT_EQ(files.size(), 4u);
  EXPECT_EQ(files[0].path, "out/loc.csv");
  EXPECT_EQ(files[1].path, "out/loc_ipr.csv");
  EXPECT_EQ(files[2].path, "out/loc_tail.csv");
  EXPECT_EQ(files[3].path, "out/loc_profile.csv");
  const auto main = data_lines(files[0].contents);
  EXPECT_EQ(main.front(), "R,trial,ipr_ave");
  EXPECT_EQ(main.size(), 1u + 3 * 2);
  EXPECT_EQ(data_lines(files[1].contents).front(), "R,trial,eta,ipr");
  EXPECT_EQ(data_lines(files[1].contents).size(), 1u + 3 * 2 * 8);
  EXPECT_EQ(data_lines(files[2].contents).front(), "R,trial,eta,pt");
  EXPECT_EQ(data_lines(files[3].contents).front(), "R,trial,qubit,probability");
  EXPECT_EQ(data_lines(files[3].contents).size(), 1u + 3 * 2 * 6);
}

TEST(RenderOutputs, ProvenanceHeader) {
  const auto files = render_outputs(run_config(localization_doc()), "loc.csv", "csv");
  const std::string& text = files[0].contents;
  EXPECT_EQ(text.rfind("# tool: trotterlab " + std::string(kToolVersion), 0), 0u);
  EXPECT_NE(text.find("# generator: mt19937_64"), std::string::npos);
  EXPECT_NE(text.find("# seed: 11"), std::string::npos);
  EXPECT_NE(text.find("# spec: {"), std::string::npos);
}

TEST(RenderOutputs, ResonanceSchemaAndJson) {
  const json doc = json::parse(R"({
    "experiment": {
      "kind": "resonance_continuous",
      "swept": {"name": "V1", "start": -1, "stop": 1, "count": 5},
      "fixed": {"n": 2, "J1": 0.1, "V2": 0, "t": 15},
      "series": [{"id": "flat", "fixed": {"V2": 0}}, {"id": "tilted", "fixed": {"V2": -0.5}}]
    }
  })");
  const ExperimentOutput out = run_config(doc);
  const auto csv = render_outputs(out, "r.csv", "csv");
  ASSERT_EQ(csv.size(), 1u);
  const auto lines = data_lines(csv[0].contents);
  EXPECT_EQ(lines.front(), "swept_value,series_id,probability");
  EXPECT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[6].substr(0, 10), "-1,tilted,");

  const auto js = render_outputs(out, "r.json", "json");
  const json parsed = json::parse(js[0].contents);
  ASSERT_EQ(parsed["series"].size(), 2u);
  EXPECT_EQ(parsed["series"][0]["rows"].size(), 5u);
  EXPECT_EQ(parsed["series"][1]["spec"]["series_id"], "tilted");
  EXPECT_THROW(render_outputs(out, "r.txt", "xml"), ConfigError);
}

TEST(WriteOutputs, UnwritablePath) {
  ExperimentOutput out = run_config(localization_doc());
  EXPECT_THROW(write_outputs(out, "/nonexistent-dir/x/loc.csv", "csv"), ConfigError);
}

TEST(Recipes, KnownIds) {
  const auto ids = figure_ids();
  const std::vector<std::string> expected{"2a4", "2b4", "2c4", "2d4", "3b", "3c",
                                          "3d",  "4a",  "4b",  "4c",  "4d"};
  EXPECT_EQ(ids, expected);
  for (const std::string& id : ids) {
    const FigureRecipe r = figure_recipe(id);
    EXPECT_FALSE(r.series.empty()) << id;
    for (const SweepSpec& s : r.series) EXPECT_NO_THROW(validate(s)) << id;
  }
  EXPECT_THROW(figure_recipe("9z"), ConfigError);
}

TEST(Recipes, FourSiteParameters) {
  const FigureRecipe r = figure_recipe("2c4");
  bool found10 = false;
  bool found20 = false;
  for (const SweepSpec& s : r.series) {
    if (s.kind != ExperimentKind::ResonanceContinuous) continue;
    EXPECT_EQ(s.fixed.at("J1"), 1);
    EXPECT_EQ(s.fixed.at("J2"), 20);
    EXPECT_EQ(s.fixed.at("t"), 3);
    found10 = found10 || s.fixed.at("V2") == 10;
    found20 = found20 || s.fixed.at("V2") == 20;
  }
  EXPECT_TRUE(found10 && found20);
}

TEST(Recipes, SeedOverride) {
  EXPECT_EQ(figure_recipe("4b").series.front().master_seed, kDefaultFigureSeed);
  EXPECT_EQ(figure_recipe("4b", 5).series.front().master_seed, 5u);
}

}  // namespace
}  // namespace trotterlab
