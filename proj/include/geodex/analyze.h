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

#ifndef GEODEX_ANALYZE_H_
#define GEODEX_ANALYZE_H_

#include <optional>
#include <string>
#include <vector>

#include "geodex/autsearch.h"
#include "geodex/families.h"
#include "geodex/graph.h"
#include "geodex/group.h"
#include "geodex/perm.h"

namespace geodex {

// Transitivity flags are "the tuple set is a single orbit". A flag over an
// empty tuple set is true.
struct TransitivityReport {
  int n = 0;
  std::optional<int> valency;  // nullopt: irregular
  std::optional<int> girth;    // nullopt: acyclic
  int diameter = 0;
  std::vector<int> distance_distribution;  // layer sizes from vertex 0
  BigInt aut_order;
  bool full_aut = true;  // false when computed from supplied generators
  bool vertex_transitive = false;
  bool arc_transitive = false;
  bool two_arc_transitive = false;
  bool two_geodesic_transitive = false;
  bool distance_transitive = false;
  std::optional<bool> primitive;  // full Aut and vertex-transitive only
  long long arcs = 0;
  long long two_arcs = 0;
  long long two_geodesics = 0;
  std::optional<bool> normal_cayley;
};

// Throws std::invalid_argument for disconnected graphs. Without supplied
// generators the full automorphism group is computed.
TransitivityReport Analyze(const Graph& g);
TransitivityReport Analyze(const Graph& g, const std::vector<Perm>& supplied_generators);
TransitivityReport Analyze(const Graph& g, const PermGroup& group, bool full_aut);

// Normality of R(G) in Aut(Cay(G, S)), by |Aut| = |G| |Aut(G, S)|. Each
// conjugate of an R(g) generator by an Aut generator is also tested for
// membership in R(G); disagreement throws std::logic_error.
bool IsNormalCayley(const FiniteGroup& group, const ConnectionSet& s, const PermGroup& aut);

// R(G) generators followed by Aut(G, S) acting on element indices: a
// generating set of R(G) x| Aut(G, S) <= Aut(Cay(G, S)).
std::vector<Perm> NormalizerGenerators(const FiniteGroup& group, const ConnectionSet& s);

struct Classification {
  std::string tag;   // long-tag FamilySpec, or "unrecognized"
  std::string name;  // display name, or "unrecognized"
  bool parameter_match = false;
};

// Graphs above this order are matched by invariants instead of canonical
// keys.
inline constexpr int kCanonicalClassifyLimit = 200;

// Throws std::invalid_argument unless n = p^k for a prime p and 1 <= k <= 3.
Classification ClassifyNamed(const Graph& g);
// Same, with the graph's canonical key already known.
Classification ClassifyNamed(const Graph& g, const CanonicalKey& key);

}  // namespace geodex

#endif  // GEODEX_ANALYZE_H_
