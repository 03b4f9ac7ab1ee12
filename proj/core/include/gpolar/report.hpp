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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpolar/forms.hpp"
#include "gpolar/pauli.hpp"
#include "gpolar/polar.hpp"

namespace gpolar {

/// Self-describing input document, JSON syntax. Two kinds:
///   {"kind":"pauli","p":2,"n":2,"flavor":"complex_qubit"}
///   {"kind":"cayley_table","order":8,"table":[[...]],"labels":[...]}
struct GroupSpecDocument {
  enum class Kind { pauli, cayley_table };
  Kind kind = Kind::pauli;
  std::optional<PauliSpec> pauli;
  std::vector<std::vector<int>> table;   // cayley_table only
  std::vector<std::string> labels;       // optional

  static GroupSpecDocument from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct LoadedGroup {
  GroupPtr group;
  std::optional<PauliSpec> pauli;  // set when the source was a pauli spec
  std::string source_summary;      // one-line description for reports
};

/// Validates and builds the group. Throws ParseError on malformed documents
/// and AxiomError (with witness) on tables that are not groups.
LoadedGroup load_spec(const GroupSpecDocument& doc);
LoadedGroup load_spec_text(const std::string& json_text);
LoadedGroup load_spec_file(const std::string& path);

enum class NSelect { auto_N0, auto_K, auto_center, explicit_ids };
const char* to_string(NSelect s);
NSelect n_select_from_string(const std::string& name);

struct AnalyzeOptions {
  int p = 2;
  NSelect n_select = NSelect::auto_K;
  std::vector<ElementId> explicit_members;  // used with NSelect::explicit_ids
  std::optional<int> g_index;
  AdmissibleLevel level = AdmissibleLevel::bilinear;
};

/// Everything the pipeline produced for one group and one choice of modulus.
/// Condition violations appear as notices, never as exceptions.
struct AnalysisReport {
  LoadedGroup input;
  AnalyzeOptions options;

  int order = 0;
  int derived_order = 0;
  int center_order = 0;
  int k_order = 0;
  int n0_order = 0;

  struct Candidate {
    std::string name;
    Subgroup N;
    ConditionReport conditions;
  };
  std::vector<Candidate> candidates;

  std::string chosen_name;
  std::optional<Subgroup> chosen;
  std::optional<GeneratorChoice> generator;
  std::optional<ConditionReport> chosen_conditions;

  SpacePtr space;                          // when Condition 1 holds
  std::optional<AlternatingForm> form;     // Conditions 1-3
  std::optional<QuotientPolarSpace> polar; // with the form
  std::optional<QuadraticFormGF2> quad;    // p = 2, Conditions 1-5
  std::optional<Quadric> quadric;          // quad non-singular (N = K)
  std::optional<NucleusJoin> join;         // parabolic quadrics

  std::vector<std::string> point_labels;                 // per polar point
  std::vector<std::vector<std::string>> condensations;   // element labels per point

  std::vector<Subgroup> admissible;        // at options.level
  std::optional<std::string> admissible_error;

  std::vector<std::string> notices;
  /// Set when a construction the selected mode promises was blocked by a
  /// failed condition (strict mode exits 3 on this).
  bool condition_violation = false;
};

AnalysisReport analyze(const LoadedGroup& input, const AnalyzeOptions& options);

std::string report_text(const AnalysisReport& r);
std::string report_json_text(const AnalysisReport& r);

/// Condensation-class label of a polar point: one representative per spanned
/// coset, labels joined with "|". For pauli groups the representative is the
/// member with the smallest sigma-convention phase (so the X class reads "X",
/// not "-iX"); otherwise the smallest id.
std::string point_label(const GFpVectorSpace& V, const ProjectivePoint& P,
                        const std::optional<PauliSpec>& pauli = {});

enum class ExportWhat { report, incidence, figure, commutation_graph, group };
enum class ExportFormat { text, json, dot };
ExportWhat export_what_from_string(const std::string& name);
ExportFormat export_format_from_string(const std::string& name);

/// Deterministic document for the requested artifact; throws Error for
/// selectors the report cannot serve (e.g. figure without a quadric).
std::string export_artifact(const AnalysisReport& r, ExportWhat what, ExportFormat format);

/// Derives GQ(2,4) from the report's polar space (requires W3(3)) at the
/// polar point with the given index; labels are condensation classes.
Gq24 gq_from_report(const AnalysisReport& r, int u_index);

/// One report and one export per worked example; keys are file names,
/// values full file bodies. Byte-identical across runs.
std::map<std::string, std::string> reproduce_paper();

}  // namespace gpolar
