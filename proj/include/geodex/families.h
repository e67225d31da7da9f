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

// Named graph families.
//
// Vertex numbering:
//   cycle, complete          0..n-1 in cyclic order
//   complete_bipartite(n)    parts {0..n-1} and {n..2n-1}
//   cbm_minus_matching(n)    as above, minus the edges {i, n+i}
//   complete_multipartite    (part, slot) -> part * b + slot
//   hamming(d, n)            tuples read as base-n numbers, first coordinate
//                            most significant
//   cayley, ep3_*            group element indices
//   schlafli*                a1..a6 = 0..5, b1..b6 = 6..11, c_ij (i < j)
//                            in lexicographic order = 12..26
//
// Spec grammar (tag[:params]); long tags and short aliases:
//   cycle:n | C:n               complete:n | K:n
//   complete_bipartite:n | knn:n
//   cbm_minus_matching:n | knnm:n
//   complete_multipartite:m,b | kmb:m,b
//   hamming:d,n                 hamming2_complement:n | hamming2c:n
//   ep3_family_A:p | ep3A:p     ep3_family_B:p | ep3B:p
//   schlafli                    schlafli_complement | schlaflic
//   cayley:GROUP:i,j,...        GROUP one of Z<n>, Z<p>^<r>, <G>x<H>,
//                               E<p^3>, M<p^3>, D8, Q8; i, j, ... element
//                               indices of the connection set

#ifndef GEODEX_FAMILIES_H_
#define GEODEX_FAMILIES_H_

#include <string>
#include <string_view>
#include <vector>

#include "geodex/graph.h"
#include "geodex/group.h"

namespace geodex {

enum class Family {
  kCycle,
  kComplete,
  kCompleteBipartite,
  kCbmMinusMatching,
  kCompleteMultipartite,
  kHamming,
  kHamming2Complement,
  kCayley,
  kEp3FamilyA,
  kEp3FamilyB,
  kSchlafli,
  kSchlafliComplement,
};

struct FamilySpec {
  Family family = Family::kComplete;
  std::vector<int> params;
  std::string group;            // cayley only
  std::vector<int> connection;  // cayley only

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws std::invalid_argument on grammar or parameter errors.
FamilySpec ParseFamilySpec(std::string_view text);
// Long-tag form, e.g. "ep3_family_B:5".
std::string FormatFamilySpec(const FamilySpec& spec);
// Conventional name, e.g. "K3[3]", "H(2,3)", "G(27,8)".
std::string DisplayName(const FamilySpec& spec);
Graph Build(const FamilySpec& spec);

// Accepts the names produced by the group constructors: Z9, Z3^2, Z9xZ3,
// E27, M27, D8, Q8.
FiniteGroup ParseGroupSpec(std::string_view text);

Graph Cycle(int n);
Graph Complete(int n);
Graph CompleteBipartite(int n);
Graph CbmMinusMatching(int n);
Graph CompleteMultipartite(int m, int b);
Graph Hamming(int d, int n);
Graph Hamming2Complement(int n);
// i ~ j iff j i^-1 in S.
Graph Cayley(const FiniteGroup& group, const ConnectionSet& s);
Graph Ep3FamilyA(int p);
Graph Ep3FamilyB(int p);
Graph Schlafli();
Graph SchlafliComplement();

// Every non-Cayley-tagged catalog family with exactly n vertices, in a
// fixed order (Hamming graphs precede isomorphic alternatives).
std::vector<FamilySpec> Catalog(int n);

}  // namespace geodex

#endif  // GEODEX_FAMILIES_H_
