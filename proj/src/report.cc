// Copyright 2026 The geodex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geodex/report.h"

namespace geodex {

std::string BoolString(bool b) { return b ? "true" : "false"; }

std::string JoinInts(const std::vector<int>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Fields ReportFields(const TransitivityReport& r) {
  auto opt_bool = [](const std::optional<bool>& b) { return b ? BoolString(*b) : "n/a"; };
  return {
      {"n", std::to_string(r.n)},
      {"valency", r.valency ? std::to_string(*r.valency) : "irregular"},
      {"girth", r.girth ? std::to_string(*r.girth) : "infinite"},
      {"diameter", std::to_string(r.diameter)},
      {"distance_distribution", JoinInts(r.distance_distribution)},
      {"aut_order", r.aut_order.str()},
      {"aut_source", r.full_aut ? "full" : "supplied"},
      {"vertex_transitive", BoolString(r.vertex_transitive)},
      {"arc_transitive", BoolString(r.arc_transitive)},
      {"two_arc_transitive", BoolString(r.two_arc_transitive)},
      {"two_geodesic_transitive", BoolString(r.two_geodesic_transitive)},
      {"distance_transitive", BoolString(r.distance_transitive)},
      {"primitive", opt_bool(r.primitive)},
      {"arcs", std::to_string(r.arcs)},
      {"two_arcs", std::to_string(r.two_arcs)},
      {"two_geodesics", std::to_string(r.two_geodesics)},
      {"normal_cayley", opt_bool(r.normal_cayley)},
  };
}

std::string RenderFields(const Fields& fields, bool machine) {
  std::string out;
  for (const auto& [key, value] : fields) {
    out += key + (machine ? "=" : ": ") + value + "\n";
  }
  return out;
}

std::string FormatReport(const TransitivityReport& report, bool machine) {
  return RenderFields(ReportFields(report), machine);
}

}  // namespace geodex
