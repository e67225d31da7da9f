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

#include "geodex/graph_io.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "geodex/families.h"
#include "oracles.h"

namespace geodex {
namespace {

// Reference strings produced by networkx.to_graph6_bytes on the same edge
// sets.
constexpr const char* kPetersenGraph6 = "IheA@GUAo";
constexpr const char* kK42Graph6 = "G]~v~w";
constexpr const char* kSchlafliGraph6 =
    R"(Z~~{ACbCwV_~NNVVllzjn]]}]^D\\LlkmyyNrrXemiizZHfxxKuyyIl}]BLw)";

TEST(Graph6Test, KnownEncodings) {
  EXPECT_EQ(WriteGraph6(Complete(3)), "Bw");
  EXPECT_EQ(WriteGraph6(Cycle(4)), "Cl");
  EXPECT_EQ(WriteGraph6(fixtures::Petersen()), kPetersenGraph6);
  EXPECT_EQ(WriteGraph6(CompleteMultipartite(4, 2)), kK42Graph6);
  EXPECT_EQ(WriteGraph6(Schlafli()), kSchlafliGraph6);
  EXPECT_EQ(ReadGraph6(kSchlafliGraph6), Schlafli());
  EXPECT_EQ(ReadGraph6("Bw"), Complete(3));
  EXPECT_EQ(WriteGraph6(Graph(0)), "?");
  EXPECT_EQ(ReadGraph6("?").n(), 0);
}

TEST(Graph6Test, LongFormHeader) {
  const std::string text = WriteGraph6(Ep3FamilyB(5));
  EXPECT_EQ(text.substr(0, 4), "~?@|");
  EXPECT_EQ(ReadGraph6(text), Ep3FamilyB(5));
}

TEST(Graph6Test, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(41);
  for (const int n : {1, 2, 5, 6, 7, 8, 62, 63, 64, 100, 130}) {
    const Graph g = oracle::RandomGraph(n, 0.3, rng);
    EXPECT_EQ(ReadGraph6(WriteGraph6(g)), g) << n;
  }
}

TEST(Graph6Test, ToleratesHeaderAndWhitespace) {
  EXPECT_EQ(ReadGraph6(">>graph6<<Bw\n"), Complete(3));
  EXPECT_EQ(ReadGraph6("  Bw  "), Complete(3));
}

TEST(Graph6Test, RejectsMalformedInput) {
  for (const char* bad : {"", "B", "Bww", "B\x7f", "Bx", "~?@"}) {
    EXPECT_THROW(ReadGraph6(bad), FormatError) << bad;
  }
}

TEST(EdgeListTest, CycleOfLengthFour) {
  EXPECT_EQ(WriteEdgeList(Cycle(4)), "4 4\n0 1\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(ReadEdgeList("4 4\n2 3\n0 1\n3 0\n1 2\n"), Cycle(4));
}

TEST(EdgeListTest, RoundTripsNamedGraphs) {
  for (const auto& [name, g] : fixtures::NamedGraphs()) {
    EXPECT_EQ(ReadEdgeList(WriteEdgeList(g)), g) << name;
    EXPECT_EQ(ReadGraphAuto(WriteEdgeList(g)), g) << name;
    EXPECT_EQ(ReadGraphAuto(WriteGraph6(g)), g) << name;
  }
}

TEST(EdgeListTest, RejectsMalformedInput) {
  for (const char* bad : {"", "3", "3 1\n0 0\n", "3 1\n0 3\n", "3 2\n0 1\n1 0\n", "3 2\n0 1\n",
                          "3 1\n0 1\n1 2\n", "3 1\n0 x\n", "-1 0\n"}) {
    EXPECT_THROW(ReadEdgeList(bad), FormatError) << bad;
  }
}

}  // namespace
}  // namespace geodex
