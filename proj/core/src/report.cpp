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

#include "gpolar/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gpolar {

using ordered_json = nlohmann::ordered_json;

GroupSpecDocument GroupSpecDocument::from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("group spec document: ") + e.what());
  }
  GroupSpecDocument doc;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "pauli") {
      doc.kind = Kind::pauli;
      PauliSpec spec;
      spec.p = j.at("p").get<int>();
      spec.n = j.at("n").get<int>();
      spec.flavor = pauli_flavor_from_string(j.at("flavor").get<std::string>());
      doc.pauli = spec;
    } else if (kind == "cayley_table") {
      doc.kind = Kind::cayley_table;
      const int order = j.at("order").get<int>();
      doc.table = j.at("table").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(doc.table.size()) != order) {
        throw ParseError("cayley_table: declared order " + std::to_string(order) +
                         " does not match table size " + std::to_string(doc.table.size()));
      }
      if (j.contains("labels")) {
        doc.labels = j.at("labels").get<std::vector<std::string>>();
      }
    } else {
      throw ParseError("unknown document kind \"" + kind + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group spec document: ") + e.what());
  }
  return doc;
}

std::string GroupSpecDocument::to_json_text() const {
  ordered_json j;
  if (kind == Kind::pauli) {
    j["kind"] = "pauli";
    j["p"] = pauli->p;
    j["n"] = pauli->n;
    j["flavor"] = to_string(pauli->flavor);
  } else {
    j["kind"] = "cayley_table";
    j["order"] = static_cast<int>(table.size());
    j["table"] = table;
    if (!labels.empty()) j["labels"] = labels;
  }
  return j.dump(1) + "\n";
}

LoadedGroup load_spec(const GroupSpecDocument& doc) {
  LoadedGroup out;
  if (doc.kind == GroupSpecDocument::Kind::pauli) {
    doc.pauli->validate();
    out.group = build_pauli_group(*doc.pauli);
    out.pauli = doc.pauli;
    std::ostringstream s;
    s << "pauli p=" << doc.pauli->p << " n=" << doc.pauli->n
      << " flavor=" << to_string(doc.pauli->flavor);
    out.source_summary = s.str();
  } else {
    out.group = make_group(doc.table, doc.labels);
    out.source_summary = "cayley_table order=" + std::to_string(out.group->order());
  }
  return out;
}

LoadedGroup load_spec_text(const std::string& json_text) {
  return load_spec(GroupSpecDocument::from_json_text(json_text));
}

LoadedGroup load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group spec file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_spec_text(buffer.str());
}

const char* to_string(NSelect s) {
  switch (s) {
    case NSelect::auto_N0: return "auto_N0";
    case NSelect::auto_K: return "auto_K";
    case NSelect::auto_center: return "auto_center";
    case NSelect::explicit_ids: return "explicit";
  }
  return "?";
}

NSelect n_select_from_string(const std::string& name) {
  if (name == "auto_N0") return NSelect::auto_N0;
  if (name == "auto_K") return NSelect::auto_K;
  if (name == "auto_center") return NSelect::auto_center;
  if (name == "explicit") return NSelect::explicit_ids;
  throw ParseError("unknown modulus selection \"" + name + "\"");
}

std::string point_label(const GFpVectorSpace& V, const ProjectivePoint& P,
                        const std::optional<PauliSpec>& pauli) {
  const FactorGroup& F = *V.source();
  std::string label;
  for (int m = 1; m < V.p(); ++m) {
    int coset = V.coset_of_vector(gfp_scale(m, P.rep));
    ElementId rep = F.members(coset).front();
    if (pauli) {
      int best = sigma_phase(*pauli, pauli_element_of(*pauli, rep));
      for (ElementId candidate : F.members(coset)) {
        int phase = sigma_phase(*pauli, pauli_element_of(*pauli, candidate));
        if (phase < best) {
          best = phase;
          rep = candidate;
        }
      }
    }
    if (m > 1) label += "|";
    label += F.parent().label(rep);
  }
  return label;
}

namespace {

std::string members_brace(const Subgroup& S, size_t limit = 16) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < S.members.size(); ++i) {
    if (i >= limit) {
      out << ", ...";
      break;
    }
    if (i) out << ", ";
    out << S.members[i];
  }
  out << "}";
  return out.str();
}

std::string condition_line(const ConditionReport& rep) {
  std::ostringstream out;
  for (int i = 1; i <= 5; ++i) {
    if (i > 1) out << ", ";
    out << "C" << i << " " << to_string(rep.cond(i));
    if (rep.cond(i) == CondStatus::fails && rep.witness_of(i)) {
      out << " (" << rep.witness_of(i)->note << ")";
    }
  }
  return out.str();
}

std::string quadric_symbol(const Quadric& qd) {
  std::string sign = qd.tag() == QuadricTag::hyperbolic ? "+"
                     : qd.tag() == QuadricTag::elliptic ? "-"
                                                        : "";
  return "Q" + sign + "_" + std::to_string(qd.ambient_proj_dim()) + "(2)";
}

std::string polar_symbol(const PolarSpaceW& W) {
  return "W_" + std::to_string(2 * W.rank() - 1) + "(" + std::to_string(W.space().p()) + ")";
}

}  // namespace

AnalysisReport analyze(const LoadedGroup& input, const AnalyzeOptions& options) {
  require_prime(options.p);
  AnalysisReport r;
  r.input = input;
  r.options = options;
  const GroupPtr& G = input.group;
  const int p = options.p;

  Subgroup derived = derived_subgroup(G);
  Subgroup Z = center(G);
  Subgroup K = torsion_center_K(G);
  Subgroup N0 = n0_subgroup(G, p);
  r.order = G->order();
  r.derived_order = derived.order();
  r.center_order = Z.order();
  r.k_order = K.order();
  r.n0_order = N0.order();

  r.candidates.push_back({"N0", N0, check_conditions(G, N0, p)});
  r.candidates.push_back({"K", K, check_conditions(G, K, p)});
  r.candidates.push_back({"Z(G)", Z, check_conditions(G, Z, p)});

  switch (options.n_select) {
    case NSelect::auto_N0:
      r.chosen = N0;
      r.chosen_name = "N0";
      break;
    case NSelect::auto_center:
      r.chosen = Z;
      r.chosen_name = "Z(G)";
      break;
    case NSelect::auto_K: {
      bool feasible = p == 2 && r.candidates[1].conditions.holds_through(5);
      if (feasible) {
        r.chosen = K;
        r.chosen_name = "K";
      } else {
        r.chosen = Z;
        r.chosen_name = "Z(G)";
        std::string reason = p != 2 ? "p != 2"
                                    : "Condition " +
                                          std::to_string(r.candidates[1].conditions.first_failure(5)) +
                                          " fails for K";
        r.notices.push_back("auto_K is not feasible (" + reason +
                            "); falling back to the centre");
        r.condition_violation = true;
      }
      break;
    }
    case NSelect::explicit_ids: {
      r.chosen = make_subgroup(G, options.explicit_members);
      r.chosen_name = "explicit";
      r.candidates.push_back({"explicit", *r.chosen, check_conditions(G, *r.chosen, p)});
      break;
    }
  }
  r.chosen_conditions = check_conditions(G, *r.chosen, p);
  const ConditionReport& cc = *r.chosen_conditions;

  // vector space (Condition 1)
  if (cc.holds(1)) {
    r.space = std::make_shared<const GFpVectorSpace>(make_factor_group(*r.chosen), p);
  } else {
    r.notices.push_back("no vector space: " + (cc.witness_of(1) ? cc.witness_of(1)->note
                                                                : std::string("Condition 1 fails")));
    r.condition_violation = true;
  }

  // commutator form and polar space (Conditions 1-3)
  if (r.space && cc.holds_through(3)) {
    r.generator = choose_generator(G, p, options.g_index);
    r.form = AlternatingForm(r.space, *r.generator);
    r.polar = quotient_polar_space(*r.form);
  } else if (r.space) {
    int bad = cc.first_failure(3);
    std::string note = cc.witness_of(bad) ? cc.witness_of(bad)->note : "";
    r.notices.push_back("no commutator form: Condition " + std::to_string(bad) + " fails (" +
                        note + ")");
    if (options.n_select == NSelect::auto_center || options.n_select == NSelect::auto_K) {
      r.condition_violation = true;
    }
  }

  // quadratic form, quadric, join (p = 2, Conditions 1-5, N = K)
  if (p == 2 && r.space && cc.holds_through(5)) {
    r.quad = QuadraticFormGF2(r.space);
    if (*r.chosen == K) {
      r.quadric = Quadric(*r.quad);
      if (r.quadric->nucleus()) {
        r.join = join_with_nucleus(*r.quadric);
      }
    } else {
      r.notices.push_back(
          "quadratic form exists but is singular for N strictly below K; quadric skipped");
    }
  } else if (p == 2 && r.space && cc.holds_through(3)) {
    int bad = cc.first_failure(5);
    std::string note = cc.witness_of(bad) ? cc.witness_of(bad)->note : "";
    r.notices.push_back("no quadratic form on V (Condition " + std::to_string(bad) + " fails: " +
                        note + ")");
  } else if (p != 2 && r.form) {
    r.notices.push_back("no quadratic form (only defined for p = 2)");
  }

  // condensation dictionary over the polar space
  if (r.polar) {
    const GFpVectorSpace& Vq = r.polar->polar.space();
    for (const ProjectivePoint& P : r.polar->polar.points()) {
      r.point_labels.push_back(point_label(Vq, P, input.pauli));
      std::vector<std::string> ops;
      for (ElementId id : condensation(Vq, P)) ops.push_back(G->label(id));
      r.condensations.push_back(std::move(ops));
    }
  }

  try {
    r.admissible = enumerate_admissible_N(G, p, options.level);
  } catch (const ConditionError& e) {
    r.admissible_error = e.what();
  }
  return r;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "=== gpolar analysis ===\n";
  out << "source: " << r.input.source_summary << "\n";
  out << "group order: " << r.order << "\n";
  out << "|G'| = " << r.derived_order << ", |Z(G)| = " << r.center_order << ", |K| = " << r.k_order
      << ", |N0| = " << r.n0_order << "\n";
  out << "p = " << r.options.p << "\n\n";

  out << "conditions per candidate modulus:\n";
  for (const auto& cand : r.candidates) {
    out << "  " << cand.name << " (order " << cand.N.order() << "): "
        << condition_line(cand.conditions) << "\n";
  }
  out << "\n";
  out << "chosen modulus: " << r.chosen_name << " (order " << r.chosen->order() << "), members "
      << members_brace(*r.chosen) << "\n";
  if (r.generator) {
    out << "generator g: id " << r.generator->g << " \""
        << r.input.group->label(r.generator->g) << "\"\n";
  }
  if (r.space) {
    out << "vector space V = G/N: dim " << r.space->dim() << " over GF(" << r.space->p() << "), "
        << r.space->num_vectors() << " vectors\n";
  }
  if (r.form) {
    out << "gram matrix of [.,.]_g:\n";
    for (const auto& row : r.form->gram()) {
      out << " ";
      for (int v : row) out << " " << v;
      out << "\n";
    }
    out << "radical dim: " << r.form->radical().dim() << "\n";
  }
  out << "\n";

  if (r.quadric) {
    const Quadric& qd = *r.quadric;
    out << "quadric: " << to_string(qd.tag()) << " " << quadric_symbol(qd) << ", witt " << qd.witt()
        << ": " << qd.singular_points().size() << " singular points, "
        << qd.singular_flats(1).size() << " singular lines, max singular flat dim "
        << qd.max_singular_proj_dim() << ", nucleus "
        << (qd.nucleus() ? "present" : "absent") << "\n";
    long long total = 0;
    for (int i = 0; i < qd.space().dim(); ++i) total = total * 2 + 1;
    long long dark = static_cast<long long>(qd.singular_points().size());
    long long nucleus = qd.nucleus() ? 1 : 0;
    out << "ambient shading: dark " << dark << ", light " << (total - dark - nucleus)
        << ", nucleus " << nucleus << "\n";
  }
  if (r.join) {
    out << "join with nucleus: " << r.join->pairs.size()
        << " singular flats (incl. the empty one) map onto quotient flats; T -> T.Z(G) verified\n";
  }
  if (r.polar) {
    const PolarSpaceW& W = r.polar->polar;
    out << "polar space: " << polar_symbol(W) << " with " << W.points().size() << " points, "
        << W.lines().size() << " lines\n";
    if (r.polar->radical.dim() > 0) {
      out << "quotient view: radical dim " << r.polar->radical.dim()
          << "; every quotient flat also has ambient projective dimension (quotient dim + "
          << r.polar->radical.dim() << ")\n";
    }
    out << "\ncondensation classes (point: operators):\n";
    for (size_t i = 0; i < r.point_labels.size(); ++i) {
      out << "  " << r.point_labels[i] << ":";
      for (const auto& op : r.condensations[i]) out << " " << op;
      out << "\n";
    }
  }
  out << "\n";
  if (r.admissible_error) {
    out << "admissible moduli at level " << to_string(r.options.level) << ": error ("
        << *r.admissible_error << ")\n";
  } else {
    out << "admissible moduli at level " << to_string(r.options.level) << ": "
        << r.admissible.size() << " (orders:";
    for (const auto& N : r.admissible) out << " " << N.order();
    out << ")\n";
  }
  if (!r.notices.empty()) {
    out << "notices:\n";
    for (const auto& n : r.notices) out << "  - " << n << "\n";
  }
  return out.str();
}

std::string report_json_text(const AnalysisReport& r) {
  ordered_json j;
  j["kind"] = "analysis";
  j["source"] = r.input.source_summary;
  j["group"] = {{"order", r.order},
                {"derived_order", r.derived_order},
                {"center_order", r.center_order},
                {"k_order", r.k_order},
                {"n0_order", r.n0_order}};
  j["options"] = {{"p", r.options.p},
                  {"n_select", to_string(r.options.n_select)},
                  {"level", to_string(r.options.level)}};
  ordered_json conditions = ordered_json::array();
  for (const auto& cand : r.candidates) {
    ordered_json c;
    c["name"] = cand.name;
    c["order"] = cand.N.order();
    for (int i = 1; i <= 5; ++i) {
      c["C" + std::to_string(i)] = to_string(cand.conditions.cond(i));
      if (cand.conditions.cond(i) == CondStatus::fails && cand.conditions.witness_of(i)) {
        c["C" + std::to_string(i) + "_witness"] = cand.conditions.witness_of(i)->note;
      }
    }
    conditions.push_back(std::move(c));
  }
  j["conditions"] = std::move(conditions);
  j["chosen"] = {{"name", r.chosen_name},
                 {"order", r.chosen->order()},
                 {"members", r.chosen->members}};
  if (r.generator) {
    j["generator"] = {{"id", r.generator->g}, {"label", r.input.group->label(r.generator->g)}};
  }
  if (r.space) {
    j["space"] = {{"dim", r.space->dim()},
                  {"p", r.space->p()},
                  {"vectors", r.space->num_vectors()}};
  }
  if (r.form) {
    j["form"] = {{"gram", r.form->gram()}, {"radical_dim", r.form->radical().dim()}};
  }
  if (r.quadric) {
    const Quadric& qd = *r.quadric;
    long long total = (1LL << qd.space().dim()) - 1;
    long long dark = static_cast<long long>(qd.singular_points().size());
    long long nucleus = qd.nucleus() ? 1 : 0;
    j["quadric"] = {{"tag", to_string(qd.tag())},
                    {"symbol", quadric_symbol(qd)},
                    {"witt", qd.witt()},
                    {"ambient_proj_dim", qd.ambient_proj_dim()},
                    {"singular_points", qd.singular_points().size()},
                    {"singular_lines", qd.singular_flats(1).size()},
                    {"max_singular_proj_dim", qd.max_singular_proj_dim()},
                    {"nucleus", qd.nucleus().has_value()},
                    {"shading", {{"dark", dark}, {"light", total - dark - nucleus},
                                 {"nucleus", nucleus}}}};
  }
  if (r.join) {
    j["join_with_nucleus"] = {{"flat_pairs", r.join->pairs.size()}};
  }
  if (r.polar) {
    const PolarSpaceW& W = r.polar->polar;
    j["polar"] = {{"symbol", polar_symbol(W)},
                  {"rank", W.rank()},
                  {"points", W.points().size()},
                  {"lines", W.lines().size()},
                  {"radical_dim", r.polar->radical.dim()}};
    ordered_json cond = ordered_json::object();
    for (size_t i = 0; i < r.point_labels.size(); ++i) {
      cond[r.point_labels[i]] = r.condensations[i];
    }
    j["condensation"] = std::move(cond);
  }
  if (r.admissible_error) {
    j["admissible"] = {{"level", to_string(r.options.level)}, {"error", *r.admissible_error}};
  } else {
    std::vector<int> orders;
    for (const auto& N : r.admissible) orders.push_back(N.order());
    j["admissible"] = {{"level", to_string(r.options.level)},
                       {"count", r.admissible.size()},
                       {"orders", orders}};
  }
  j["notices"] = r.notices;
  j["condition_violation"] = r.condition_violation;
  return j.dump(1) + "\n";
}

ExportWhat export_what_from_string(const std::string& name) {
  if (name == "report") return ExportWhat::report;
  if (name == "incidence") return ExportWhat::incidence;
  if (name == "figure") return ExportWhat::figure;
  if (name == "commutation_graph") return ExportWhat::commutation_graph;
  if (name == "group") return ExportWhat::group;
  throw ParseError("unknown export selector \"" + name + "\"");
}

ExportFormat export_format_from_string(const std::string& name) {
  if (name == "text") return ExportFormat::text;
  if (name == "json") return ExportFormat::json;
  if (name == "dot") return ExportFormat::dot;
  throw ParseError("unknown export format \"" + name + "\"");
}

namespace {

IncidenceStructure report_incidence(const AnalysisReport& r) {
  if (!r.polar) throw Error("report has no polar space to export");
  const PolarSpaceW& W = r.polar->polar;
  std::vector<PointShade> shades;
  if (r.quadric && r.polar->radical.dim() == 0) {
    // K = Z(G): the quadric refines the polar space itself
    for (const ProjectivePoint& P : W.points()) {
      shades.push_back(r.quad->eval(P.rep) == 0 ? PointShade::dark : PointShade::light);
    }
  }
  return polar_incidence(W, r.point_labels, shades);
}

IncidenceStructure report_figure(const AnalysisReport& r) {
  if (!r.quadric) throw Error("report has no quadric; the shaded figure is undefined");
  const GFpVectorSpace& V = r.quadric->space();
  std::vector<std::string> labels;
  for (const ProjectivePoint& P : projective_points(V)) {
    labels.push_back(point_label(V, P, r.input.pauli));
  }
  return projective_figure(*r.quadric, labels);
}

std::string commutation_graph_dot(const AnalysisReport& r) {
  if (!r.polar) throw Error("report has no polar space to export");
  const PolarSpaceW& W = r.polar->polar;
  std::ostringstream out;
  out << "graph commutation {\n  node [shape=circle];\n";
  for (size_t i = 0; i < W.points().size(); ++i) {
    out << "  v" << i << " [label=\"" << r.point_labels[i] << "\"];\n";
  }
  for (size_t i = 0; i < W.points().size(); ++i) {
    for (size_t j = i + 1; j < W.points().size(); ++j) {
      if (W.conjugate(W.points()[i], W.points()[j])) {
        out << "  v" << i << " -- v" << j << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string commutation_graph_text(const AnalysisReport& r) {
  if (!r.polar) throw Error("report has no polar space to export");
  const PolarSpaceW& W = r.polar->polar;
  std::ostringstream out;
  for (size_t i = 0; i < W.points().size(); ++i) {
    out << r.point_labels[i] << ":";
    for (size_t j = 0; j < W.points().size(); ++j) {
      if (i != j && W.conjugate(W.points()[i], W.points()[j])) {
        out << " " << r.point_labels[j];
      }
    }
    out << "\n";
  }
  return out.str();
}

GroupSpecDocument group_document(const AnalysisReport& r) {
  const FiniteGroup& G = *r.input.group;
  GroupSpecDocument doc;
  doc.kind = GroupSpecDocument::Kind::cayley_table;
  doc.table.assign(G.order(), std::vector<int>(G.order()));
  for (int a = 0; a < G.order(); ++a) {
    for (int b = 0; b < G.order(); ++b) doc.table[a][b] = G.mul(a, b);
  }
  doc.labels = G.labels();
  return doc;
}

}  // namespace

std::string export_artifact(const AnalysisReport& r, ExportWhat what, ExportFormat format) {
  switch (what) {
    case ExportWhat::report:
      if (format == ExportFormat::text) return report_text(r);
      if (format == ExportFormat::json) return report_json_text(r);
      throw Error("report export supports text and json only");
    case ExportWhat::incidence: {
      IncidenceStructure s = report_incidence(r);
      if (format == ExportFormat::text) return to_incidence_text(s);
      if (format == ExportFormat::dot) return to_dot(s, "polar");
      throw Error("incidence export supports text and dot only");
    }
    case ExportWhat::figure: {
      IncidenceStructure s = report_figure(r);
      if (format == ExportFormat::text) return to_incidence_text(s);
      if (format == ExportFormat::dot) return to_dot(s, "figure");
      throw Error("figure export supports text and dot only");
    }
    case ExportWhat::commutation_graph:
      if (format == ExportFormat::dot) return commutation_graph_dot(r);
      if (format == ExportFormat::text) return commutation_graph_text(r);
      throw Error("commutation_graph export supports dot and text only");
    case ExportWhat::group:
      if (format == ExportFormat::json) return group_document(r).to_json_text();
      throw Error("group export supports json only");
  }
  throw Error("unknown export selector");
}

Gq24 gq_from_report(const AnalysisReport& r, int u_index) {
  if (!r.polar) throw Error("report has no polar space; GQ derivation needs W3(3)");
  const PolarSpaceW& W = r.polar->polar;
  if (u_index < 0 || u_index >= static_cast<int>(W.points().size())) {
    throw Error("point index out of range");
  }
  const GFpVectorSpace& Vq = W.space();
  PointLabeler labeler = [&Vq, &r](const ProjectivePoint& P) {
    return point_label(Vq, P, r.input.pauli);
  };
  return derive_gq24(W, W.points()[u_index], labeler);
}

std::map<std::string, std::string> reproduce_paper() {
  std::map<std::string, std::string> files;

  auto analyze_pauli = [](int p, int n, PauliFlavor flavor, NSelect sel) {
    GroupSpecDocument doc;
    doc.kind = GroupSpecDocument::Kind::pauli;
    doc.pauli = PauliSpec{p, n, flavor};
    AnalyzeOptions options;
    options.p = p;
    options.n_select = sel;
    return analyze(load_spec(doc), options);
  };

  AnalysisReport ex1 = analyze_pauli(2, 1, PauliFlavor::complex_qubit, NSelect::auto_K);
  files["example1_report.txt"] = report_text(ex1);
  files["example1_figure.txt"] = export_artifact(ex1, ExportWhat::figure, ExportFormat::text);

  AnalysisReport ex2 = analyze_pauli(2, 2, PauliFlavor::complex_qubit, NSelect::auto_K);
  files["example2_report.txt"] = report_text(ex2);
  files["example2_incidence.txt"] =
      export_artifact(ex2, ExportWhat::incidence, ExportFormat::text);

  AnalysisReport ex3 = analyze_pauli(2, 1, PauliFlavor::real_qubit, NSelect::auto_K);
  files["example3_report.txt"] = report_text(ex3);
  files["example3_figure.txt"] = export_artifact(ex3, ExportWhat::figure, ExportFormat::text);

  AnalysisReport ex4 = analyze_pauli(2, 2, PauliFlavor::real_qubit, NSelect::auto_K);
  files["example4_report.txt"] = report_text(ex4);
  files["example4_incidence.txt"] =
      export_artifact(ex4, ExportWhat::incidence, ExportFormat::text);

  AnalysisReport ex5 = analyze_pauli(3, 2, PauliFlavor::qudit_odd, NSelect::auto_center);
  files["example5_report.txt"] = report_text(ex5);
  files["example5_gq.txt"] = to_incidence_text(gq_from_report(ex5, 0).incidence);

  return files;
}

}  // namespace gpolar
