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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gpolar/report.hpp"

namespace {

using namespace gpolar;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitConditionViolation = 3;

struct CommonArgs {
  std::string spec_path;
  int p = 2;
  std::string n_select = "auto_K";
  int g_index = -1;  // -1: default generator
  std::vector<ElementId> explicit_members;
  std::string level = "bilinear";
  std::string format = "text";
  std::string out;
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_spec = true) {
  if (with_spec) {
    cmd->add_option("spec", args.spec_path, "group spec document (JSON)")->required();
  }
  cmd->add_option("--p", args.p, "prime p of the target field GF(p)");
  cmd->add_option("--n-select", args.n_select,
                  "modulus selection: auto_N0 | auto_K | auto_center | explicit");
  cmd->add_option("--members", args.explicit_members,
                  "members of the explicit modulus (with --n-select explicit)");
  cmd->add_option("--g-index", args.g_index,
                  "pick the g-index-th generator of G' instead of the smallest");
  cmd->add_option("--level", args.level,
                  "admissible-N level: vector_space | bilinear | quadratic");
  cmd->add_option("--format", args.format, "output format: text | json | dot");
  cmd->add_option("--out", args.out, "write output to this file instead of stdout");
  cmd->add_flag("--strict", args.strict, "exit 3 when a condition blocks the request");
}

AnalyzeOptions to_options(const CommonArgs& args) {
  AnalyzeOptions options;
  options.p = args.p;
  options.n_select = n_select_from_string(args.n_select);
  options.explicit_members = args.explicit_members;
  if (args.g_index >= 0) options.g_index = args.g_index;
  if (args.level == "vector_space") {
    options.level = AdmissibleLevel::vector_space;
  } else if (args.level == "bilinear") {
    options.level = AdmissibleLevel::bilinear;
  } else if (args.level == "quadratic") {
    options.level = AdmissibleLevel::quadratic;
  } else {
    throw ParseError("unknown level \"" + args.level + "\"");
  }
  return options;
}

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write " + out_path);
  out << body;
}

int finish(const AnalysisReport& r, bool strict) {
  return (strict && r.condition_violation) ? kExitConditionViolation : kExitOk;
}

int run_analyze(const CommonArgs& args) {
  AnalysisReport r = analyze(load_spec_file(args.spec_path), to_options(args));
  emit(args.format == "json" ? report_json_text(r) : report_text(r), args.out);
  return finish(r, args.strict);
}

int run_conditions(const CommonArgs& args) {
  AnalysisReport r = analyze(load_spec_file(args.spec_path), to_options(args));
  std::ostringstream out;
  out << "conditions for p = " << args.p << " (chosen modulus: " << r.chosen_name << ")\n";
  for (const auto& cand : r.candidates) {
    out << "  " << cand.name << " (order " << cand.N.order() << "):";
    for (int i = 1; i <= 5; ++i) {
      out << " C" << i << "=" << to_string(cand.conditions.cond(i));
    }
    out << "\n";
    for (int i = 1; i <= 5; ++i) {
      if (cand.conditions.cond(i) == CondStatus::fails && cand.conditions.witness_of(i)) {
        out << "      C" << i << " witness: " << cand.conditions.witness_of(i)->note << "\n";
      }
    }
  }
  emit(out.str(), args.out);
  // strict mode: all applicable conditions must hold for the chosen modulus
  int through = args.p == 2 ? 5 : 3;
  bool violated = !r.chosen_conditions->holds_through(through);
  return (args.strict && violated) ? kExitConditionViolation : kExitOk;
}

int run_polar(CommonArgs args) {
  if (args.n_select == "auto_K") args.n_select = "auto_center";  // polar space default
  AnalysisReport r = analyze(load_spec_file(args.spec_path), to_options(args));
  if (args.format == "dot") {
    emit(export_artifact(r, ExportWhat::incidence, ExportFormat::dot), args.out);
  } else if (!r.polar) {
    emit(report_text(r), args.out);
  } else {
    std::ostringstream out;
    const PolarSpaceW& W = r.polar->polar;
    out << "W_" << 2 * W.rank() - 1 << "(" << W.space().p() << "): " << W.points().size()
        << " points, " << W.lines().size() << " lines\n";
    out << export_artifact(r, ExportWhat::incidence, ExportFormat::text);
    emit(out.str(), args.out);
  }
  return finish(r, args.strict);
}

int run_quadric(CommonArgs args) {
  args.n_select = "auto_K";  // the quadric lives over G/K
  AnalysisReport r = analyze(load_spec_file(args.spec_path), to_options(args));
  std::ostringstream out;
  if (r.quadric) {
    const Quadric& qd = *r.quadric;
    out << to_string(qd.tag()) << " quadric in PG(" << qd.ambient_proj_dim() << ",2): "
        << qd.singular_points().size() << " singular points, " << qd.singular_flats(1).size()
        << " singular lines, nucleus " << (qd.nucleus() ? "present" : "absent") << "\n";
  } else {
    out << "no quadric; see the analysis notices\n";
    for (const auto& n : r.notices) out << "  - " << n << "\n";
  }
  emit(out.str(), args.out);
  return finish(r, args.strict);
}

int run_gq(CommonArgs args, int u_index, bool p_given) {
  if (!p_given) args.p = 3;  // W3(3) is the only GQ(2,4) source here
  args.n_select = "auto_center";
  AnalysisReport r = analyze(load_spec_file(args.spec_path), to_options(args));
  if (!r.polar || r.polar->polar.space().p() != 3 || r.polar->polar.space().dim() != 4) {
    std::cerr << "gq: the spec does not yield W3(3)\n";
    return args.strict ? kExitConditionViolation : kExitOk;
  }
  Gq24 gq = gq_from_report(r, u_index);
  emit(to_incidence_text(gq.incidence), args.out);
  return finish(r, args.strict);
}

int run_export(const CommonArgs& args, const std::string& what) {
  AnalysisReport r = analyze(load_spec_file(args.spec_path), to_options(args));
  ExportWhat w = export_what_from_string(what);
  ExportFormat f = export_format_from_string(
      args.format == "text" && (w == ExportWhat::group) ? "json" : args.format);
  emit(export_artifact(r, w, f), args.out);
  return finish(r, args.strict);
}

int run_reproduce(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto files = reproduce_paper();
  for (const auto& [name, body] : files) {
    std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
    if (!out) throw Error("cannot write into " + out_dir);
    out << body;
    std::cout << name << "\n";
  }
  std::cout << files.size() << " documents written to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factor-group polar spaces: vector spaces, forms, quadrics and "
               "symplectic geometry from finite groups"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string export_what = "report";
  int u_index = 0;
  std::string out_dir = "paper_out";

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline and report");
  add_common(analyze_cmd, args);

  CLI::App* conditions_cmd =
      app.add_subcommand("conditions", "evaluate the five factorisation conditions");
  add_common(conditions_cmd, args);

  CLI::App* polar_cmd = app.add_subcommand("polar", "symplectic polar space of the group");
  add_common(polar_cmd, args);

  CLI::App* quadric_cmd = app.add_subcommand("quadric", "quadric of the group over G/K");
  add_common(quadric_cmd, args);

  CLI::App* gq_cmd = app.add_subcommand("gq", "derive GQ(2,4) from W3(3)");
  add_common(gq_cmd, args);
  gq_cmd->add_option("--u-index", u_index, "index of the distinguished point U");

  CLI::App* export_cmd = app.add_subcommand("export", "export one artifact of the analysis");
  add_common(export_cmd, args);
  export_cmd->add_option("--what", export_what,
                         "report | incidence | figure | commutation_graph | group");

  CLI::App* repro_cmd =
      app.add_subcommand("reproduce-paper", "emit the worked-example reports and exports");
  repro_cmd->add_option("--out-dir", out_dir, "target directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze_cmd)) return run_analyze(args);
    if (app.got_subcommand(conditions_cmd)) return run_conditions(args);
    if (app.got_subcommand(polar_cmd)) return run_polar(args);
    if (app.got_subcommand(quadric_cmd)) return run_quadric(args);
    if (app.got_subcommand(gq_cmd)) {
      return run_gq(args, u_index, gq_cmd->get_option("--p")->count() > 0);
    }
    if (app.got_subcommand(export_cmd)) return run_export(args, export_what);
    if (app.got_subcommand(repro_cmd)) return run_reproduce(out_dir);
  } catch (const ConditionError& e) {
    std::cerr << "condition violation: " << e.what() << "\n";
    return args.strict ? kExitConditionViolation : kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
