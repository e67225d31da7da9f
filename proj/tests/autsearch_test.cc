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

#include "geodex/autsearch.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "fixtures.h"
#include "geodex/families.h"
#include "oracles.h"

namespace geodex {
namespace {

OrderedPartition Unit(int n) {
  OrderedPartition p;
  p.cells.emplace_back();
  for (int v = 0; v < n; ++v) p.cells[0].push_back(v);
  return p;
}

// Oracle: colour refinement with colours renamed by sorted signature until
// the number of colours stops growing. Returns the cells as a set of sets.
std::set<std::set<int>> ColourRefinement(const Graph& g) {
  std::vector<int> colour(g.n(), 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> names;
    std::vector<std::pair<int, std::vector<int>>> signature(g.n());
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> counts(g.n(), 0);
      for (const int w : g.Neighbors(v)) ++counts[colour[w]];
      signature[v] = {colour[v], counts};
      names.emplace(signature[v], 0);
    }
    int next = 0;
    for (auto& [key, name] : names) name = next++;
    for (int v = 0; v < g.n(); ++v) colour[v] = names[signature[v]];
    if (names.size() == classes) break;
    classes = names.size();
  }
  std::map<int, std::set<int>> cells;
  for (int v = 0; v < g.n(); ++v) cells[colour[v]].insert(v);
  std::set<std::set<int>> out;
  for (auto& [c, cell] : cells) out.insert(cell);
  return out;
}

std::set<std::set<int>> AsSets(const OrderedPartition& p) {
  std::set<std::set<int>> out;
  for (const auto& cell : p.cells) out.insert(std::set<int>(cell.begin(), cell.end()));
  return out;
}

TEST(RefineTest, RegularGraphStaysUnit) {
  EXPECT_EQ(Refine(Hamming(2, 3), Unit(9)), Unit(9));
  EXPECT_TRUE(IsEquitable(Hamming(2, 3), Unit(9)));
}

TEST(RefineTest, StarSplitsCentreFromLeaves) {
  Graph star(4);
  for (int v = 1; v < 4; ++v) star.AddEdge(0, v);
  const OrderedPartition refined = Refine(star, Unit(4));
  EXPECT_EQ(refined.cells, (std::vector<std::vector<int>>{{1, 2, 3}, {0}}));
  EXPECT_FALSE(IsEquitable(star, Unit(4)));
  EXPECT_TRUE(IsEquitable(star, refined));
}

TEST(RefineTest, IndividualizedPathSplitsBySide) {
  Graph path(5);
  for (int v = 0; v < 4; ++v) path.AddEdge(v, v + 1);
  OrderedPartition p;
  p.cells = {{0}, {1, 2, 3, 4}};
  const OrderedPartition refined = Refine(path, p);
  EXPECT_EQ(refined.cells.size(), 5u);
  EXPECT_EQ(refined.cells[0], (std::vector<int>{0}));
}

TEST(RefineTest, AgreesWithColourRefinementAndIsIdempotent) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::RandomGraph(14, trial % 2 ? 0.2 : 0.5, rng);
    const OrderedPartition refined = Refine(g, Unit(g.n()));
    EXPECT_TRUE(IsEquitable(g, refined));
    EXPECT_EQ(Refine(g, refined), refined);
    EXPECT_EQ(AsSets(refined), ColourRefinement(g));
  }
}

TEST(RefineTest, RejectsInvalidPartitions) {
  OrderedPartition p;
  p.cells = {{0, 1}, {1, 2}};
  EXPECT_THROW(ValidatePartition(p, 3), std::invalid_argument);
  p.cells = {{0, 1}};
  EXPECT_THROW(ValidatePartition(p, 3), std::invalid_argument);
  p.cells = {{0, 1, 2}, {}};
  EXPECT_THROW(ValidatePartition(p, 3), std::invalid_argument);
  p.cells = {{2}, {0, 1}};
  EXPECT_NO_THROW(ValidatePartition(p, 3));
}

TEST(AutSearchTest, NamedOrders) {
  EXPECT_EQ(AutomorphismGroup(Complete(4)).order(), 24);
  EXPECT_EQ(AutomorphismGroup(Cycle(9)).order(), 18);
  EXPECT_EQ(AutomorphismGroup(fixtures::Petersen()).order(), 120);
  EXPECT_EQ(AutomorphismGroup(Hamming(2, 3)).order(), 72);
  EXPECT_EQ(AutomorphismGroup(Hamming(3, 3)).order(), 1296);
  EXPECT_EQ(AutomorphismGroup(Schlafli()).order(), 51840);
  EXPECT_EQ(AutomorphismGroup(Graph(1)).order(), 1);
  EXPECT_EQ(AutomorphismGroup(Graph(5)).order(), 120);
}

TEST(AutSearchTest, GeneratorsAreAutomorphismsAndOrderMatchesChain) {
  for (const auto& [name, g] : fixtures::NamedGraphs()) {
    SCOPED_TRACE(name);
    const SearchResult r = SearchAutomorphisms(g);
    for (const Perm& gamma : r.generators) EXPECT_TRUE(IsAutomorphism(g, gamma));
    EXPECT_EQ(PermGroup::SchreierSims(g.n(), r.generators).order(), r.order);
    EXPECT_EQ(CanonicalKeyOf(Relabel(g, r.canonical_labeling)), r.key);
  }
}

// Every graph on up to 6 vertices, compared with the number of adjacency
// preserving permutations.
TEST(AutSearchTest, BruteForceAllGraphsUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) g.AddEdge(pairs[i].first, pairs[i].second);
      }
      const auto brute = oracle::Automorphisms(g);
      ASSERT_EQ(SearchAutomorphisms(g).order, brute.size()) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(AutSearchTest, BruteForceSevenAndEightVertices) {
  std::mt19937_64 rng(23);
  for (const int n : {7, 8}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Graph g = oracle::RandomGraph(n, 0.15 + 0.03 * trial, rng);
      EXPECT_EQ(SearchAutomorphisms(g).order, oracle::Automorphisms(g).size());
    }
  }
  for (const char* spec : {"C:8", "K:8", "knn:4", "knnm:4", "kmb:4,2", "hamming:3,2", "K:7"}) {
    const Graph g = Build(ParseFamilySpec(spec));
    EXPECT_EQ(SearchAutomorphisms(g).order, oracle::Automorphisms(g).size()) << spec;
  }
}

TEST(AutSearchTest, ColouringIsRespected) {
  SearchOptions options;
  options.colouring = OrderedPartition{{{0}, {1, 2, 3}}};
  const SearchResult r = SearchAutomorphisms(Complete(4), options);
  EXPECT_EQ(r.order, 6);
  for (const Perm& gamma : r.generators) EXPECT_EQ(gamma[0], 0);
}

TEST(AutSearchTest, BudgetExceededThrows) {
  SearchOptions options;
  options.node_budget = 2;
  EXPECT_THROW(SearchAutomorphisms(Hamming(3, 3), options), SearchBudgetExceeded);
}

TEST(AutSearchTest, BudgetFromEnvironment) {
  ASSERT_EQ(setenv("GEODEX_NODE_BUDGET", "1234", 1), 0);
  EXPECT_EQ(DefaultNodeBudget(), 1234u);
  ASSERT_EQ(unsetenv("GEODEX_NODE_BUDGET"), 0);
  EXPECT_EQ(DefaultNodeBudget(), 10000000u);
}

TEST(CanonicalKeyTest, StableUnderRandomRelabelings) {
  std::mt19937_64 rng(29);
  for (const auto& [name, g] : fixtures::NamedGraphs()) {
    SCOPED_TRACE(name);
    const CanonicalKey key = CanonicalKeyOf(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph h = Relabel(g, oracle::RandomPerm(g.n(), rng));
      ASSERT_EQ(CanonicalKeyOf(h), key);
    }
  }
}

TEST(CanonicalKeyTest, DistinguishesNonIsomorphicGraphs) {
  const auto named = fixtures::NamedGraphs();
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      if (named[i].graph.n() != named[j].graph.n()) continue;
      // The cube is K4,4 minus a perfect matching.
      if (named[i].name == "K4,4-4K2" && named[j].name == "H(3,2)") {
        EXPECT_TRUE(AreIsomorphic(named[i].graph, named[j].graph));
        continue;
      }
      EXPECT_NE(CanonicalKeyOf(named[i].graph), CanonicalKeyOf(named[j].graph))
          << named[i].name << " vs " << named[j].name;
    }
  }
  // H(2,4) and the Shrikhande graph are both SRG(16,6,2,2).
  const FiniteGroup z4sq = DirectProduct(Cyclic(4), Cyclic(4));
  std::vector<int> s;
  for (const auto [x, y] : {std::pair{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}}) {
    s.push_back(4 * x + y);
  }
  const Graph shrikhande = Cayley(z4sq, ConnectionSet(z4sq, s));
  ASSERT_EQ(StronglyRegularParameters(shrikhande), StronglyRegularParameters(Hamming(2, 4)));
  EXPECT_NE(CanonicalKeyOf(shrikhande), CanonicalKeyOf(Hamming(2, 4)));
  EXPECT_FALSE(AreIsomorphic(shrikhande, Hamming(2, 4)));
}

TEST(CanonicalKeyTest, AgreesWithBruteForceIsomorphismOnSmallGraphs) {
  std::mt19937_64 rng(31);
  std::vector<Graph> graphs;
  for (int i = 0; i < 40; ++i) graphs.push_back(oracle::RandomGraph(6, 0.5, rng));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      EXPECT_EQ(CanonicalKeyOf(graphs[i]) == CanonicalKeyOf(graphs[j]),
                oracle::CanonicalForm(graphs[i]) == oracle::CanonicalForm(graphs[j]));
    }
  }
}

TEST(CanonicalKeyTest, IsomorphismWitness) {
  std::mt19937_64 rng(37);
  for (const auto& [name, g] : fixtures::NamedGraphs()) {
    SCOPED_TRACE(name);
    const Graph h = Relabel(g, oracle::RandomPerm(g.n(), rng));
    Perm witness;
    ASSERT_TRUE(AreIsomorphic(g, h, &witness));
    for (int u = 0; u < g.n(); ++u) {
      for (int v = 0; v < g.n(); ++v) {
        ASSERT_EQ(g.Adjacent(u, v), h.Adjacent(witness[u], witness[v]));
      }
    }
  }
  EXPECT_FALSE(AreIsomorphic(Cycle(9), CompleteMultipartite(3, 3)));
  EXPECT_FALSE(AreIsomorphic(Cycle(8), Cycle(9)));
}

TEST(CanonicalKeyTest, FamilyBMatchesIndependentConstruction) {
  // Cay(E(27), <b>* u <b^i a b^i>*) built from the matrix model.
  const int p = 3;
  const oracle::Heisenberg h{p};
  std::vector<std::array<int, 3>> elements;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      for (int k = 0; k < p; ++k) elements.push_back(h.Word(i, j, k));
    }
  }
  auto index_of = [&](std::array<int, 3> x) {
    return static_cast<int>(std::find(elements.begin(), elements.end(), x) - elements.begin());
  };
  const std::array<int, 3> a = h.Word(1, 0, 0), b = h.Word(0, 1, 0);
  std::set<std::array<int, 3>> s;
  auto add_star = [&](std::array<int, 3> x) {
    for (int k = 1; k < p; ++k) s.insert(h.Pow(x, k));
  };
  add_star(b);
  for (int i = 0; i < p; ++i) add_star(h.Mul(h.Mul(h.Pow(b, i), a), h.Pow(b, i)));
  ASSERT_EQ(static_cast<int>(s.size()), p * p - 1);
  Graph g(p * p * p);
  for (const auto& x : elements) {
    for (const auto& y : s) {
      const int u = index_of(x), v = index_of(h.Mul(y, x));
      if (u < v) g.AddEdge(u, v);
    }
  }
  Perm witness;
  ASSERT_TRUE(AreIsomorphic(g, Ep3FamilyB(p), &witness));
  EXPECT_EQ(Relabel(g, witness), Ep3FamilyB(p));
}

}  // namespace
}  // namespace geodex
