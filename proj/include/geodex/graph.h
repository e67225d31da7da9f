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

#ifndef GEODEX_GRAPH_H_
#define GEODEX_GRAPH_H_

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geodex/perm.h"

namespace geodex {

using Word = std::uint64_t;

inline int WordsFor(int n) { return (n + 63) / 64; }

// Simple undirected graph on {0, ..., n-1}, adjacency stored as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int words() const { return words_; }
  bool Adjacent(int u, int v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1;
  }
  std::span<const Word> Row(int u) const {
    return {rows_.data() + static_cast<std::size_t>(u) * words_,
            static_cast<std::size_t>(words_)};
  }
  int Degree(int u) const;
  std::vector<int> Neighbors(int u) const;
  // |N(u) & N(v)|
  int CommonNeighbors(int u, int v) const;
  long long EdgeCount() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> Edges() const;

  // Throws std::invalid_argument on loops or out-of-range endpoints.
  void AddEdge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Word> rows_;
};

Graph FromEdges(int n, std::span<const std::pair<int, int>> edges);
Graph Complement(const Graph& g);
// Vertex v of the result is vertex perm^-1(v) of g, i.e. perm maps old
// labels to new ones.
Graph Relabel(const Graph& g, const Perm& perm);
bool IsAutomorphism(const Graph& g, const Perm& perm);

bool IsConnected(const Graph& g);
// BFS distances from u; -1 for unreachable vertices.
std::vector<int> Distances(const Graph& g, int u);
// Throws std::invalid_argument for disconnected graphs.
int Diameter(const Graph& g);
// Length of a shortest cycle; nullopt for forests.
std::optional<int> Girth(const Graph& g);
std::optional<int> ValencyIfRegular(const Graph& g);
bool IsComplete(const Graph& g);

struct DistancePartition {
  int root = 0;
  std::vector<std::vector<int>> layers;  // layers[i] = vertices at distance i

  std::vector<int> LayerSizes() const;
};

DistancePartition MakeDistancePartition(const Graph& g, int u);

using Arc = std::array<int, 2>;
using Triple = std::array<int, 3>;

std::vector<Arc> EnumerateArcs(const Graph& g);
// (u, v, w) with u ~ v ~ w and u != w.
std::vector<Triple> Enumerate2Arcs(const Graph& g);
// 2-arcs whose endpoints are not adjacent.
std::vector<Triple> Enumerate2Geodesics(const Graph& g);

// Strongly regular parameters (n, k, lambda, mu) if g is strongly regular.
std::optional<std::array<int, 4>> StronglyRegularParameters(const Graph& g);

}  // namespace geodex

#endif  // GEODEX_GRAPH_H_
