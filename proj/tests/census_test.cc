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

#include "geodex/census.h"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "geodex/families.h"
#include "oracles.h"

namespace geodex {
namespace {

using NameSet = std::multiset<std::string>;

NameSet Names(const CensusResult& result, bool two_arc) {
  NameSet out;
  for (const CensusRecord* r : result.TwoGeodesicTransitive(two_arc)) {
    out.insert(r->classification.name);
  }
  return out;
}

TEST(CensusTest, GroupsAndInverseClasses) {
  std::vector<std::string> names;
  for (const auto& g : CensusGroups(8)) names.push_back(g.name());
  EXPECT_EQ(names, (std::vector<std::string>{"Z8", "Z4xZ2", "Z2^3", "D8", "Q8"}));
  EXPECT_EQ(CensusGroups(27).size(), 5u);
  EXPECT_EQ(CensusGroups(25).size(), 2u);
  EXPECT_THROW(CensusGroups(12), std::invalid_argument);
  EXPECT_THROW(RunCensus(16), std::invalid_argument);

  const auto classes = InverseClasses(Cyclic(9));
  EXPECT_EQ(classes,
            (std::vector<std::vector<int>>{{1, 8}, {2, 7}, {3, 6}, {4, 5}}));
  EXPECT_EQ(MaskToConnection(classes, 0b0101), (std::vector<int>{1, 3, 6, 8}));
  EXPECT_EQ(InverseClasses(ElementaryAbelian(2, 3)).size(), 7u);
}

TEST(CensusTest, OrderFour) {
  const CensusResult r = RunCensus(4);
  EXPECT_EQ(Names(r, true), (NameSet{"C4", "K4"}));
  EXPECT_TRUE(Names(r, false).empty());
}

TEST(CensusTest, OrderEight) {
  const CensusResult r = RunCensus(8);
  EXPECT_EQ(Names(r, true), (NameSet{"C8", "H(3,2)", "K4,4", "K8"}));
  EXPECT_EQ(Names(r, false), (NameSet{"K4[2]"}));
}

TEST(CensusTest, OrderNine) {
  const CensusResult r = RunCensus(9);
  EXPECT_EQ(r.candidates, 30);
  EXPECT_EQ(Names(r, true), (NameSet{"C9", "K9"}));
  EXPECT_EQ(Names(r, false), (NameSet{"H(2,3)", "K3[3]"}));
}

TEST(CensusTest, OrderTwentyFive) {
  const CensusResult r = RunCensus(25, 2);
  EXPECT_EQ(Names(r, true), (NameSet{"C25", "K25"}));
  EXPECT_EQ(Names(r, false), (NameSet{"H(2,5)", "H(2,5)-complement", "K5[5]"}));
}

TEST(CensusTest, OutputDoesNotDependOnJobs) {
  for (const int order : {8, 9}) {
    EXPECT_EQ(FormatCensus(RunCensus(order, 1)), FormatCensus(RunCensus(order, 3)));
  }
}

TEST(CensusTest, FlagMonotonicity) {
  for (const int order : {4, 8, 9, 25}) {
    for (const CensusRecord& c : RunCensus(order).classes) {
      if (c.report.two_arc_transitive) EXPECT_TRUE(c.report.two_geodesic_transitive);
      if (c.report.distance_transitive) EXPECT_TRUE(c.report.arc_transitive);
      if (c.report.arc_transitive) EXPECT_TRUE(c.report.vertex_transitive);
      EXPECT_TRUE(c.report.vertex_transitive);
    }
  }
}

struct BruteClass {
  bool arc = false;
  bool two_arc = false;
  bool two_geodesic = false;
};

// Oracle: every connected Cayley graph of the groups, flags from the full
// list of automorphisms, classes by exhaustive canonical form.
std::map<std::string, BruteClass> BruteCensus(const std::vector<FiniteGroup>& groups) {
  std::map<std::string, BruteClass> out;
  for (const FiniteGroup& g : groups) {
    const int n = g.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (mask >> g.identity() & 1) continue;
      bool closed = true;
      for (int x = 0; x < n; ++x) {
        if ((mask >> x & 1) && !(mask >> g.Inv(x) & 1)) closed = false;
      }
      if (!closed) continue;
      Graph h(n);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (mask >> g.Mul(j, g.Inv(i)) & 1) h.AddEdge(i, j);
        }
      }
      const std::vector<int> from0 = oracle::AllDistances(h)[0];
      if (std::count(from0.begin(), from0.end(), -1) > 0) continue;
      const std::string form = oracle::CanonicalForm(h);
      if (out.count(form)) continue;
      const auto elements = oracle::Automorphisms(h);
      const oracle::Flags f = oracle::FlagsFromElements(h, elements);
      out[form] = {f.arc, f.two_arc, f.two_geodesic};
    }
  }
  return out;
}

void ExpectCompleteCensus(int order) {
  const auto brute = BruteCensus(CensusGroups(order));
  const CensusResult r = RunCensus(order);
  EXPECT_EQ(r.classes.size(), brute.size());
  std::set<std::string> census_two_arc, census_other;
  for (const bool two_arc : {true, false}) {
    for (const CensusRecord* c : r.TwoGeodesicTransitive(two_arc)) {
      const std::string form = oracle::CanonicalForm(Build(ParseFamilySpec(c->classification.tag)));
      (two_arc ? census_two_arc : census_other).insert(form);
    }
  }
  std::set<std::string> brute_two_arc, brute_other;
  for (const auto& [form, flags] : brute) {
    if (!flags.arc || !flags.two_geodesic) continue;
    (flags.two_arc ? brute_two_arc : brute_other).insert(form);
  }
  EXPECT_EQ(census_two_arc, brute_two_arc);
  EXPECT_EQ(census_other, brute_other);
}

TEST(CensusOracleTest, OrderEightIsComplete) { ExpectCompleteCensus(8); }

TEST(CensusOracleTest, OrderNineIsComplete) { ExpectCompleteCensus(9); }

TEST(CensusOracleTest, NonArcTransitiveTwoGeodesicClassAtOrderEight) {
  // Cay(Z8, {1, 3, 4, 5, 7}) has one orbit on 2-geodesics but two on arcs.
  const auto brute = BruteCensus({Cyclic(8)});
  int count = 0;
  for (const auto& [form, flags] : brute) count += flags.two_geodesic && !flags.arc;
  EXPECT_EQ(count, 1);
  const FiniteGroup z8 = Cyclic(8);
  const Graph g = Cayley(z8, ConnectionSet(z8, {1, 3, 4, 5, 7}));
  const auto f = oracle::FlagsFromElements(g, oracle::Automorphisms(g));
  EXPECT_TRUE(f.two_geodesic);
  EXPECT_FALSE(f.arc);
}

}  // namespace
}  // namespace geodex
