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

#include "geodex/graph.h"

#include <algorithm>
#include <stdexcept>

namespace geodex {

Graph::Graph(int n) : n_(n), words_(WordsFor(n)) {
  if (n < 0 || n > kMaxDegree) throw std::invalid_argument("Graph: bad order");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

int Graph::Degree(int u) const {
  int d = 0;
  for (const Word w : Row(u)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::Neighbors(int u) const {
  std::vector<int> result;
  const auto row = Row(u);
  for (int k = 0; k < words_; ++k) {
    for (Word w = row[k]; w != 0; w &= w - 1) {
      result.push_back(k * 64 + std::countr_zero(w));
    }
  }
  return result;
}

int Graph::CommonNeighbors(int u, int v) const {
  const auto a = Row(u);
  const auto b = Row(v);
  int c = 0;
  for (int k = 0; k < words_; ++k) c += std::popcount(a[k] & b[k]);
  return c;
}

long long Graph::EdgeCount() const {
  long long twice = 0;
  for (int u = 0; u < n_; ++u) twice += Degree(u);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_; ++u) {
    for (const int v : Neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

void Graph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("AddEdge: vertex out of range");
  }
  if (u == v) throw std::invalid_argument("AddEdge: loop");
  rows_[u * words_ + v / 64] |= Word{1} << (v % 64);
  rows_[v * words_ + u / 64] |= Word{1} << (u % 64);
}

Graph FromEdges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  return g;
}

Graph Complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.Adjacent(u, v)) h.AddEdge(u, v);
    }
  }
  return h;
}

Graph Relabel(const Graph& g, const Perm& perm) {
  if (perm.degree() != g.n()) throw std::invalid_argument("Relabel: degree mismatch");
  Graph h(g.n());
  for (const auto& [u, v] : g.Edges()) h.AddEdge(perm[u], perm[v]);
  return h;
}

bool IsAutomorphism(const Graph& g, const Perm& perm) {
  if (perm.degree() != g.n()) return false;
  for (int u = 0; u < g.n(); ++u) {
    if (g.Degree(u) != g.Degree(perm[u])) return false;
    for (const int v : g.Neighbors(u)) {
      if (!g.Adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

std::vector<int> Distances(const Graph& g, int u) {
  if (u < 0 || u >= g.n()) throw std::out_of_range("Distances: vertex out of range");
  std::vector<int> dist(g.n(), -1);
  std::vector<int> queue = {u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (const int y : g.Neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

bool IsConnected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto dist = Distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int Diameter(const Graph& g) {
  int diameter = 0;
  for (int u = 0; u < g.n(); ++u) {
    for (const int d : Distances(g, u)) {
      if (d < 0) throw std::invalid_argument("Diameter: graph is disconnected");
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

std::optional<int> Girth(const Graph& g) {
  // A BFS from every root sees a shortest cycle through that root exactly.
  std::optional<int> girth;
  std::vector<int> dist(g.n()), parent(g.n());
  for (int root = 0; root < g.n(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue = {root};
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      if (girth && 2 * dist[x] + 1 >= *girth) break;
      for (const int y : g.Neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const int len = dist[x] + dist[y] + 1;
          if (!girth || len < *girth) girth = len;
        }
      }
    }
  }
  return girth;
}

std::optional<int> ValencyIfRegular(const Graph& g) {
  if (g.n() == 0) return 0;
  const int k = g.Degree(0);
  for (int u = 1; u < g.n(); ++u) {
    if (g.Degree(u) != k) return std::nullopt;
  }
  return k;
}

bool IsComplete(const Graph& g) {
  const auto k = ValencyIfRegular(g);
  return k && *k == g.n() - 1;
}

std::vector<int> DistancePartition::LayerSizes() const {
  std::vector<int> sizes;
  for (const auto& layer : layers) sizes.push_back(static_cast<int>(layer.size()));
  return sizes;
}

DistancePartition MakeDistancePartition(const Graph& g, int u) {
  const auto dist = Distances(g, u);
  DistancePartition partition;
  partition.root = u;
  for (int v = 0; v < g.n(); ++v) {
    if (dist[v] < 0) continue;
    if (dist[v] >= static_cast<int>(partition.layers.size())) {
      partition.layers.resize(dist[v] + 1);
    }
    partition.layers[dist[v]].push_back(v);
  }
  return partition;
}

std::vector<Arc> EnumerateArcs(const Graph& g) {
  std::vector<Arc> arcs;
  for (int u = 0; u < g.n(); ++u) {
    for (const int v : g.Neighbors(u)) arcs.push_back({u, v});
  }
  return arcs;
}

namespace {

template <bool kGeodesicsOnly>
std::vector<Triple> EnumerateTriples(const Graph& g) {
  std::vector<Triple> result;
  std::vector<std::vector<int>> nbrs(g.n());
  for (int u = 0; u < g.n(); ++u) nbrs[u] = g.Neighbors(u);
  for (int u = 0; u < g.n(); ++u) {
    for (const int v : nbrs[u]) {
      for (const int w : nbrs[v]) {
        if (w == u) continue;
        if (kGeodesicsOnly && g.Adjacent(u, w)) continue;
        result.push_back({u, v, w});
      }
    }
  }
  return result;
}

}  // namespace

std::vector<Triple> Enumerate2Arcs(const Graph& g) { return EnumerateTriples<false>(g); }

std::vector<Triple> Enumerate2Geodesics(const Graph& g) {
  return EnumerateTriples<true>(g);
}

std::optional<std::array<int, 4>> StronglyRegularParameters(const Graph& g) {
  const auto k = ValencyIfRegular(g);
  if (!k) return std::nullopt;
  int lambda = -1, mu = -1;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      int& slot = g.Adjacent(u, v) ? lambda : mu;
      const int c = g.CommonNeighbors(u, v);
      if (slot < 0) slot = c;
      if (slot != c) return std::nullopt;
    }
  }
  return std::array<int, 4>{g.n(), *k, std::max(lambda, 0), std::max(mu, 0)};
}

}  // namespace geodex
