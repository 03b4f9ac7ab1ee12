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

#include "gpolar/incidence.hpp"

#include <algorithm>
#include <sstream>

#include "gpolar/errors.hpp"

namespace gpolar {

const char* to_string(PointShade s) {
  switch (s) {
    case PointShade::none: return ".";
    case PointShade::dark: return "dark";
    case PointShade::light: return "light";
    case PointShade::nucleus: return "nucleus";
  }
  return "?";
}

void validate_incidence(const IncidenceStructure& s) {
  if (!s.shades.empty() && s.shades.size() != s.point_labels.size()) {
    throw Error("shade list length does not match point count");
  }
  for (const auto& line : s.lines) {
    if (!std::is_sorted(line.begin(), line.end())) {
      throw Error("line point indices must be sorted");
    }
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] < 0 || line[i] >= s.num_points()) {
        throw Error("line references point index out of range");
      }
      if (i > 0 && line[i] == line[i - 1]) {
        throw Error("line repeats a point");
      }
    }
  }
}

std::string to_incidence_text(const IncidenceStructure& s) {
  validate_incidence(s);
  std::ostringstream out;
  out << "points " << s.num_points() << "\n";
  for (int i = 0; i < s.num_points(); ++i) {
    PointShade shade = s.shades.empty() ? PointShade::none : s.shades[i];
    out << i << " " << to_string(shade) << " " << s.point_labels[i] << "\n";
  }
  out << "lines " << s.num_lines() << "\n";
  for (const auto& line : s.lines) {
    for (size_t i = 0; i < line.size(); ++i) {
      if (i) out << " ";
      out << line[i];
    }
    out << "\n";
  }
  if (s.order_params) {
    out << "order " << s.order_params->first << " " << s.order_params->second << "\n";
  }
  return out.str();
}

std::string to_dot(const IncidenceStructure& s, const std::string& graph_name) {
  validate_incidence(s);
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < s.num_points(); ++i) {
    out << "  p" << i << " [label=\"" << s.point_labels[i] << "\"";
    PointShade shade = s.shades.empty() ? PointShade::none : s.shades[i];
    switch (shade) {
      case PointShade::dark: out << " style=filled fillcolor=gray40"; break;
      case PointShade::light: out << " style=filled fillcolor=gray90"; break;
      case PointShade::nucleus: out << " shape=doublecircle"; break;
      case PointShade::none: break;
    }
    out << "];\n";
  }
  for (int l = 0; l < s.num_lines(); ++l) {
    out << "  l" << l << " [shape=point label=\"\"];\n";
  }
  for (int l = 0; l < s.num_lines(); ++l) {
    for (int pt : s.lines[l]) {
      out << "  p" << pt << " -- l" << l << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gpolar
