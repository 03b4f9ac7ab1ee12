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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpolar {

/// Figure shading classes: dark for singular points, light for the rest,
/// nucleus for the distinguished radical point.
enum class PointShade { none, dark, light, nucleus };

const char* to_string(PointShade s);

/// Generic labeled point/line incidence structure.
struct IncidenceStructure {
  std::vector<std::string> point_labels;
  std::vector<PointShade> shades;        // empty, or one entry per point
  std::vector<std::vector<int>> lines;   // point indices, each line sorted
  std::optional<std::pair<int, int>> order_params;  // (s, t) when applicable

  int num_points() const noexcept { return static_cast<int>(point_labels.size()); }
  int num_lines() const noexcept { return static_cast<int>(lines.size()); }
};

/// Throws Error on out-of-range indices, duplicate points on a line, or a
/// shade list of the wrong length.
void validate_incidence(const IncidenceStructure& s);

/// Structured text: a labeled point table followed by one line of
/// space-separated point indices per geometric line.
std::string to_incidence_text(const IncidenceStructure& s);

/// DOT bipartite rendering: one vertex per point, one per line, an edge for
/// each incidence. Shading classes map to node attributes.
std::string to_dot(const IncidenceStructure& s, const std::string& graph_name);

}  // namespace gpolar
