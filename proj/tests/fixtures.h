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

// Shared fixture sets for the unit tests and the acceptance binary.

#ifndef GEODEX_TESTS_FIXTURES_H_
#define GEODEX_TESTS_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "geodex/analyze.h"
#include "geodex/autsearch.h"
#include "geodex/families.h"
#include "geodex/group.h"
#include "geodex/perm.h"
#include "oracles.h"

namespace geodex::fixtures {

struct GroupFixture {
  std::string name;
  int degree;
  std::vector<Perm> gens;
};

inline Graph Petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.AddEdge(i, (i + 1) % 5);
    g.AddEdge(i, i + 5);
    g.AddEdge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Permutation groups of order at most 5000.
inline std::vector<GroupFixture> PermGroups() {
  std::vector<GroupFixture> out;
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = i;
    out.push_back({"S" + std::to_string(n), n,
                   {Perm::FromCycles(n, {{0, 1}}), Perm::FromCycles(n, {cycle})}});
  }
  for (int n = 3; n <= 6; ++n) {
    std::vector<Perm> gens;
    for (int i = 2; i < n; ++i) gens.push_back(Perm::FromCycles(n, {{0, 1, i}}));
    out.push_back({"A" + std::to_string(n), n, gens});
  }
  for (int n = 3; n <= 12; n += 3) {
    std::vector<int> cycle(n), flip(n);
    for (int i = 0; i < n; ++i) {
      cycle[i] = (i + 1) % n;
      flip[i] = (n - i) % n;
    }
    out.push_back({"D" + std::to_string(2 * n), n, {Perm(cycle), Perm(flip)}});
  }
  out.push_back({"trivial", 5, {}});
  out.push_back({"PGL(2,5)", 6,
                 {Perm::FromCycles(6, {{0, 1, 2, 3, 4}}),
                  Perm::FromCycles(6, {{0, 5}, {1, 4}}),
                  Perm::FromCycles(6, {{1, 2, 4, 3}})}});
  for (const auto& group :
       {Cyclic(9), ElementaryAbelian(3, 2), ExtraspecialP3(3), ModularP3(3), Quaternion8(),
        Dihedral8(), DirectProduct(Cyclic(4), Cyclic(2))}) {
    out.push_back({"R(" + group.name() + ")", group.size(), RightRegularGenerators(group)});
  }
  {
    const FiniteGroup e = ExtraspecialP3(3);
    out.push_back({"R(E27)xAut(E27,S_B)", 27, NormalizerGenerators(e, ExtraspecialSetB(e))});
    out.push_back({"R(E27)xAut(E27,S_A)", 27, NormalizerGenerators(e, ExtraspecialSetA(e))});
  }
  out.push_back({"Aut(Petersen)", 10, AutomorphismGenerators(Petersen())});
  out.push_back({"Aut(H(2,3))", 9, AutomorphismGenerators(Hamming(2, 3))});
  out.push_back({"Aut(H(3,2))", 8, AutomorphismGenerators(Hamming(3, 2))});
  out.push_back({"Aut(K3[3])", 9, AutomorphismGenerators(CompleteMultipartite(3, 3))});
  out.push_back({"Aut(K4[2])", 8, AutomorphismGenerators(CompleteMultipartite(4, 2))});
  out.push_back({"Aut(C12)", 12, AutomorphismGenerators(Cycle(12))});

  // Random two-generator groups, kept when small enough.
  std::mt19937_64 rng(20260401);
  int kept = 0;
  while (kept < 12) {
    const int n = 5 + static_cast<int>(rng() % 4);
    std::vector<Perm> gens = {oracle::RandomPerm(n, rng), oracle::RandomPerm(n, rng)};
    if (oracle::Closure(n, gens, 5000).empty()) continue;
    out.push_back({"random" + std::to_string(kept++), n, gens});
  }
  return out;
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

// The named graphs of the project.
inline std::vector<NamedGraph> NamedGraphs() {
  std::vector<NamedGraph> out;
  for (const char* spec :
       {"C:8", "C:9", "C:25", "C:27", "K:8", "K:9", "knn:4", "knnm:4", "kmb:4,2", "kmb:3,3",
        "kmb:5,5", "kmb:9,3", "kmb:3,9", "hamming:3,2", "hamming:2,3", "hamming:2,5",
        "hamming2c:5", "hamming:3,3", "ep3A:3", "ep3B:3", "schlafli", "schlaflic"}) {
    const FamilySpec f = ParseFamilySpec(spec);
    out.push_back({DisplayName(f), Build(f)});
  }
  out.push_back({"Petersen", Petersen()});
  return out;
}

}  // namespace geodex::fixtures

#endif  // GEODEX_TESTS_FIXTURES_H_
