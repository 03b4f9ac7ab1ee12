// Copyright 2026 The gpolar Authors
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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gpolar/report.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace gpolar;
using namespace gpolar::testing;

namespace {

std::string data_path(const std::string& name) {
  return std::string(GPOLAR_TEST_DATA_DIR) + "/" + name;
}

LoadedGroup quaternion_loaded() {
  GroupSpecDocument doc;
  doc.kind = GroupSpecDocument::Kind::cayley_table;
  doc.table = quaternion_table();
  doc.labels = quaternion_labels();
  return load_spec(doc);
}

}  // namespace

TEST_CASE("loading specs") {
  LoadedGroup pauli = load_spec_file(data_path("pauli_1q_complex.json"));
  CHECK(pauli.group->order() == 16);
  CHECK(pauli.pauli.has_value());
  CHECK(pauli.source_summary == "pauli p=2 n=1 flavor=complex_qubit");

  LoadedGroup quat = load_spec_file(data_path("quaternion.json"));
  CHECK(quat.group->order() == 8);
  CHECK(derived_subgroup(quat.group).members == std::vector<ElementId>{0, 1});
  CHECK(center(quat.group).members == std::vector<ElementId>{0, 1});
  CHECK(quat.group->label(2) == "i");

  CHECK_THROWS_AS(load_spec_file(data_path("malformed.json")), ParseError);
  CHECK_THROWS_WITH_AS(load_spec_file(data_path("bad_assoc.json")),
                       doctest::Contains("associativity"), AxiomError);
  CHECK_THROWS_AS(load_spec_file(data_path("no_such_file.json")), ParseError);
  CHECK_THROWS_AS(load_spec_text("{\"kind\":\"mystery\"}"), ParseError);
  CHECK_THROWS_AS(load_spec_text("{\"kind\":\"pauli\",\"p\":2}"), ParseError);
}

TEST_CASE("analysis of the complex 1-qubit group with N = K") {
  LoadedGroup input = load_spec_file(data_path("pauli_1q_complex.json"));
  AnalyzeOptions options;
  options.p = 2;
  options.n_select = NSelect::auto_K;
  AnalysisReport r = analyze(input, options);

  CHECK(r.order == 16);
  CHECK(r.derived_order == 2);
  CHECK(r.center_order == 4);
  CHECK(r.k_order == 2);
  CHECK(r.n0_order == 2);
  CHECK(r.chosen_name == "K");
  CHECK_FALSE(r.condition_violation);
  REQUIRE(r.space);
  CHECK(r.space->dim() == 3);
  REQUIRE(r.quadric);
  CHECK(r.quadric->singular_points().size() == 3);
  REQUIRE(r.join);
  REQUIRE(r.polar);
  CHECK(r.polar->polar.points().size() == 3);

  std::string text = report_text(r);
  CHECK(text.find("dark 3, light 3, nucleus 1") != std::string::npos);
  CHECK(text.find("W_1(2)") != std::string::npos);
  CHECK(text.find("parabolic Q_2(2)") != std::string::npos);

  // condensation classes: X gathers the four phases of sigma_x
  std::string json_text = report_json_text(r);
  auto j = nlohmann::json::parse(json_text);
  CHECK(j["condensation"]["X"] ==
        nlohmann::json::array({"X", "iX", "-X", "-iX"}));
  CHECK(j["quadric"]["shading"]["dark"] == 3);
}

TEST_CASE("analysis with N = Z(G) reports the missing quadratic form") {
  LoadedGroup input = load_spec_file(data_path("pauli_1q_complex.json"));
  AnalyzeOptions options;
  options.p = 2;
  options.n_select = NSelect::auto_center;
  AnalysisReport r = analyze(input, options);

  CHECK(r.chosen_name == "Z(G)");
  REQUIRE(r.polar);
  CHECK(r.polar->polar.points().size() == 3);
  CHECK(r.polar->radical.dim() == 0);
  CHECK_FALSE(r.quadric);
  bool mentioned = false;
  for (const auto& n : r.notices) {
    if (n.find("no quadratic form") != std::string::npos) mentioned = true;
  }
  CHECK(mentioned);
  CHECK_FALSE(r.condition_violation);
}

TEST_CASE("two-qutrit analysis at the centre") {
  LoadedGroup input = load_spec_file(data_path("pauli_2qutrit.json"));
  AnalyzeOptions options;
  options.p = 3;
  options.n_select = NSelect::auto_center;
  AnalysisReport r = analyze(input, options);

  CHECK(r.order == 243);
  CHECK(r.center_order == 3);
  REQUIRE(r.space);
  CHECK(r.space->dim() == 4);
  CHECK(r.space->num_vectors() == 81);
  REQUIRE(r.polar);
  CHECK(r.polar->polar.points().size() == 40);
  CHECK(r.polar->polar.lines().size() == 40);
  // every point condenses exactly two operator classes
  for (const auto& label : r.point_labels) {
    CHECK(label.find('|') != std::string::npos);
  }
}

TEST_CASE("auto_K falls back to the centre when infeasible") {
  LoadedGroup input = load_spec_file(data_path("pauli_2qutrit.json"));
  AnalyzeOptions options;
  options.p = 3;
  options.n_select = NSelect::auto_K;
  AnalysisReport r = analyze(input, options);
  CHECK(r.chosen_name == "Z(G)");
  CHECK(r.condition_violation);
  bool fallback = false;
  for (const auto& n : r.notices) {
    if (n.find("falling back") != std::string::npos) fallback = true;
  }
  CHECK(fallback);
}

TEST_CASE("explicit modulus selection") {
  LoadedGroup input = load_spec_file(data_path("pauli_1q_complex.json"));
  AnalyzeOptions options;
  options.p = 2;
  options.n_select = NSelect::explicit_ids;
  options.explicit_members = {0, 8};  // K by hand
  AnalysisReport r = analyze(input, options);
  CHECK(r.chosen_name == "explicit");
  REQUIRE(r.quadric);
  CHECK(r.quadric->singular_points().size() == 3);

  options.explicit_members = {0, 4};  // {I, iI} is not a subgroup
  CHECK_THROWS_AS(analyze(input, options), AxiomError);
}

TEST_CASE("exports from a report") {
  LoadedGroup input = load_spec_file(data_path("pauli_2q_complex.json"));
  AnalyzeOptions options;
  options.p = 2;
  options.n_select = NSelect::auto_K;
  AnalysisReport r = analyze(input, options);

  std::string incidence = export_artifact(r, ExportWhat::incidence, ExportFormat::text);
  CHECK(incidence.find("points 15") == 0);
  CHECK(incidence.find("lines 15") != std::string::npos);
  // 15 lines of 3 labels: every line row has exactly three indices
  int rows_of_three = 0;
  std::istringstream stream(incidence);
  std::string line;
  bool in_lines = false;
  while (std::getline(stream, line)) {
    if (line.rfind("lines", 0) == 0) {
      in_lines = true;
      continue;
    }
    if (in_lines && !line.empty()) {
      rows_of_three += std::count(line.begin(), line.end(), ' ') == 2 ? 1 : 0;
    }
  }
  CHECK(rows_of_three == 15);

  std::string dot = export_artifact(r, ExportWhat::incidence, ExportFormat::dot);
  CHECK(dot.find("graph polar {") == 0);

  std::string commutation = export_artifact(r, ExportWhat::commutation_graph, ExportFormat::dot);
  CHECK(commutation.find("graph commutation {") == 0);

  std::string figure = export_artifact(r, ExportWhat::figure, ExportFormat::text);
  CHECK(figure.find("points 31") == 0);  // PG(4,2)

  CHECK_THROWS_AS(export_artifact(r, ExportWhat::report, ExportFormat::dot), Error);
  CHECK_THROWS_AS(export_what_from_string("nonsense"), ParseError);

  // no quadric -> no figure
  AnalyzeOptions center_options;
  center_options.p = 2;
  center_options.n_select = NSelect::auto_center;
  AnalysisReport rz = analyze(input, center_options);
  CHECK_THROWS_AS(export_artifact(rz, ExportWhat::figure, ExportFormat::text), Error);
}

TEST_CASE("round trip: cayley table -> group -> exported document -> same table") {
  LoadedGroup quat = quaternion_loaded();
  AnalyzeOptions options;
  options.p = 2;
  options.n_select = NSelect::auto_K;
  AnalysisReport r = analyze(quat, options);

  std::string doc_text = export_artifact(r, ExportWhat::group, ExportFormat::json);
  GroupSpecDocument doc = GroupSpecDocument::from_json_text(doc_text);
  CHECK(doc.kind == GroupSpecDocument::Kind::cayley_table);
  CHECK(doc.table == quaternion_table());
  CHECK(doc.labels == quaternion_labels());

  LoadedGroup again = load_spec(doc);
  CHECK(again.group->order() == 8);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) CHECK(again.group->mul(a, b) == quat.group->mul(a, b));
  }
}

TEST_CASE("quaternion analysis: elliptic refinement") {
  AnalyzeOptions options;
  options.p = 2;
  options.n_select = NSelect::auto_K;
  AnalysisReport r = analyze(quaternion_loaded(), options);
  REQUIRE(r.quadric);
  CHECK(r.quadric->tag() == QuadricTag::elliptic);
  CHECK(r.quadric->singular_points().empty());
  REQUIRE(r.polar);
  CHECK(r.polar->polar.points().size() == 3);
}

TEST_CASE("GQ derivation through a report") {
  LoadedGroup input = load_spec_file(data_path("pauli_2qutrit.json"));
  AnalyzeOptions options;
  options.p = 3;
  options.n_select = NSelect::auto_center;
  AnalysisReport r = analyze(input, options);
  Gq24 gq = gq_from_report(r, 0);
  CHECK(gq.incidence.num_points() == 27);
  CHECK(gq.incidence.num_lines() == 45);
  // labels are condensation classes: two classes joined by "|"
  for (const auto& label : gq.incidence.point_labels) {
    CHECK(label.find('|') != std::string::npos);
  }
  CHECK_THROWS_AS(gq_from_report(r, 99), Error);

  LoadedGroup qubit = load_spec_file(data_path("pauli_2q_complex.json"));
  AnalyzeOptions o2;
  o2.p = 2;
  o2.n_select = NSelect::auto_center;
  AnalysisReport r2 = analyze(qubit, o2);
  CHECK_THROWS_AS(gq_from_report(r2, 0), Error);
}

TEST_CASE("reproduce_paper is deterministic") {
  auto first = reproduce_paper();
  auto second = reproduce_paper();
  CHECK(first == second);
  CHECK(first.size() == 10);
  CHECK(first.count("example1_report.txt") == 1);
  CHECK(first.count("example5_gq.txt") == 1);
}

TEST_CASE("report json parses and carries the summary") {
  LoadedGroup input = load_spec_file(data_path("pauli_2q_real.json"));
  AnalyzeOptions options;
  options.p = 2;
  options.n_select = NSelect::auto_K;
  AnalysisReport r = analyze(input, options);
  auto j = nlohmann::json::parse(report_json_text(r));
  CHECK(j["group"]["order"] == 32);
  CHECK(j["quadric"]["singular_points"] == 9);
  CHECK(j["quadric"]["tag"] == "hyperbolic");
  CHECK(j["polar"]["points"] == 15);
  CHECK(j["polar"]["symbol"] == "W_3(2)");
  CHECK(j["quadric"]["shading"]["dark"] == 9);
  CHECK(j["quadric"]["shading"]["light"] == 6);
}
