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

// Exhaustive census of connected Cayley graphs of a small order.
//
// For every group of the order and every union of inverse classes (bit c of
// the mask selects the c-th class, classes ordered by smallest element), the
// Cayley graph is built, disconnected ones are dropped, and the rest are
// deduplicated by canonical key. Each class is represented by its smallest
// (group position, mask) pair, so the output does not depend on --jobs.

#ifndef GEODEX_CENSUS_H_
#define GEODEX_CENSUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "geodex/analyze.h"
#include "geodex/autsearch.h"
#include "geodex/group.h"

namespace geodex {

struct CensusRecord {
  std::string group;
  std::uint64_t mask = 0;
  std::vector<int> connection;
  CanonicalKey key;
  TransitivityReport report;
  Classification classification;
};

struct CensusResult {
  int order = 0;
  std::vector<std::string> groups;
  long long candidates = 0;
  long long connected = 0;
  // Every isomorphism class, sorted by canonical key.
  std::vector<CensusRecord> classes;

  // Arc-transitive classes with a single orbit on 2-geodesics, split by the
  // 2-arc flag. Classes transitive on 2-geodesics but not on arcs exist
  // (e.g. at orders 8 and 25) and are left out.
  std::vector<const CensusRecord*> TwoGeodesicTransitive(bool two_arc) const;
};

// Supported orders: 4, 8, 9, 25, 27.
std::vector<FiniteGroup> CensusGroups(int order);
// Inverse classes {x, x^-1} of non-identity elements, by smallest element.
std::vector<std::vector<int>> InverseClasses(const FiniteGroup& group);
std::vector<int> MaskToConnection(const std::vector<std::vector<int>>& classes,
                                  std::uint64_t mask);

// Throws std::invalid_argument for unsupported orders.
CensusResult RunCensus(int order, int jobs = 1);
std::string FormatCensus(const CensusResult& result);

}  // namespace geodex

#endif  // GEODEX_CENSUS_H_
