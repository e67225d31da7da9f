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

// Report rendering. Human form is "key: value" per line, machine form
// "key=value"; both use the key order of ReportFields():
//
//   n valency girth diameter distance_distribution aut_order aut_source
//   vertex_transitive arc_transitive two_arc_transitive
//   two_geodesic_transitive distance_transitive primitive arcs two_arcs
//   two_geodesics normal_cayley

#ifndef GEODEX_REPORT_H_
#define GEODEX_REPORT_H_

#include <string>
#include <utility>
#include <vector>

#include "geodex/analyze.h"

namespace geodex {

using Fields = std::vector<std::pair<std::string, std::string>>;

// Optional values render as "irregular", "infinite" or "n/a".
Fields ReportFields(const TransitivityReport& report);
std::string RenderFields(const Fields& fields, bool machine = false);
std::string FormatReport(const TransitivityReport& report, bool machine = false);

std::string BoolString(bool b);
std::string JoinInts(const std::vector<int>& values, const std::string& sep = ",");

}  // namespace geodex

#endif  // GEODEX_REPORT_H_
