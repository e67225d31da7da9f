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

#include "geodex/analyze.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace geodex {

namespace {

bool SingleOrbit(int n, const std::vector<Perm>& gens, std::span<const int> first,
                 long long total) {
  if (total == 0) return true;
  return static_cast<long long>(TupleOrbitSize(n, gens, first)) == total;
}

}  // namespace

TransitivityReport Analyze(const Graph& g) {
  const SearchResult search = SearchAutomorphisms(g);
  return Analyze(g, GroupFromSearch(g, search), true);
}

TransitivityReport Analyze(const Graph& g, const std::vector<Perm>& supplied_generators) {
  return Analyze(g, PermGroup::SchreierSims(g.n(), supplied_generators), false);
}

TransitivityReport Analyze(const Graph& g, const PermGroup& group, bool full_aut) {
  if (!IsConnected(g) || g.n() == 0) {
    throw std::invalid_argument("Analyze: graph must be connected and nonempty");
  }
  for (const Perm& gamma : group.generators()) {
    if (!IsAutomorphism(g, gamma)) {
      throw std::invalid_argument("Analyze: generator is not an automorphism");
    }
  }
  const int n = g.n();
  const std::vector<Perm>& gens = group.generators();
  TransitivityReport r;
  r.n = n;
  r.valency = ValencyIfRegular(g);
  r.girth = Girth(g);
  r.distance_distribution = MakeDistancePartition(g, 0).LayerSizes();
  r.aut_order = group.order();
  r.full_aut = full_aut;

  r.vertex_transitive = static_cast<int>(Orbit(n, gens, 0).size()) == n;

  const auto arcs = EnumerateArcs(g);
  const auto two_arcs = Enumerate2Arcs(g);
  const auto geodesics = Enumerate2Geodesics(g);
  r.arcs = static_cast<long long>(arcs.size());
  r.two_arcs = static_cast<long long>(two_arcs.size());
  r.two_geodesics = static_cast<long long>(geodesics.size());
  r.arc_transitive = arcs.empty() || SingleOrbit(n, gens, arcs[0], r.arcs);
  r.two_arc_transitive = two_arcs.empty() || SingleOrbit(n, gens, two_arcs[0], r.two_arcs);
  r.two_geodesic_transitive =
      geodesics.empty() || SingleOrbit(n, gens, geodesics[0], r.two_geodesics);

  std::vector<std::vector<int>> dist(n);
  for (int u = 0; u < n; ++u) dist[u] = Distances(g, u);
  for (int u = 0; u < n; ++u) {
    for (const int d : dist[u]) r.diameter = std::max(r.diameter, d);
  }
  r.distance_transitive = r.vertex_transitive;
  for (int i = 1; i <= r.diameter && r.distance_transitive; ++i) {
    long long count = 0;
    std::array<int, 2> first = {-1, -1};
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (dist[u][v] != i) continue;
        if (count++ == 0) first = {u, v};
      }
    }
    r.distance_transitive = SingleOrbit(n, gens, first, count);
  }

  if (full_aut && r.vertex_transitive) r.primitive = IsPrimitive(group);
  return r;
}

std::vector<Perm> NormalizerGenerators(const FiniteGroup& group, const ConnectionSet& s) {
  std::vector<Perm> gens = RightRegularGenerators(group);
  for (const GroupAutomorphism& alpha : AutStabSet(group, s)) {
    Perm p = ToPerm(alpha);
    if (!p.IsIdentity()) gens.push_back(std::move(p));
  }
  return gens;
}

bool IsNormalCayley(const FiniteGroup& group, const ConnectionSet& s, const PermGroup& aut) {
  if (aut.degree() != group.size()) {
    throw std::invalid_argument("IsNormalCayley: degree mismatch");
  }
  const BigInt stabilizer = AutStabSet(group, s).size();
  const bool by_order = aut.order() == stabilizer * group.size();

  const std::vector<Perm> regular = RightRegular(group);
  bool by_conjugation = true;
  for (const Perm& r : RightRegularGenerators(group)) {
    for (const Perm& gamma : aut.generators()) {
      const Perm conj = Inverse(gamma) * r * gamma;
      if (conj != regular[conj[group.identity()]]) by_conjugation = false;
    }
  }
  if (by_order != by_conjugation) {
    throw std::logic_error("IsNormalCayley: order test and conjugation test disagree");
  }
  return by_order;
}

namespace {

struct Invariants {
  int n = 0;
  long long edges = 0;
  std::optional<int> valency;
  std::vector<int> layers;
  std::vector<int> lambda;  // sorted common-neighbour counts over edges at 0

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants InvariantsOf(const Graph& g) {
  Invariants inv;
  inv.n = g.n();
  inv.edges = g.EdgeCount();
  inv.valency = ValencyIfRegular(g);
  if (g.n() > 0) {
    inv.layers = MakeDistancePartition(g, 0).LayerSizes();
    for (const int v : g.Neighbors(0)) inv.lambda.push_back(g.CommonNeighbors(0, v));
    std::sort(inv.lambda.begin(), inv.lambda.end());
  }
  return inv;
}

struct CatalogItem {
  FamilySpec spec;
  Invariants invariants;
  std::optional<CanonicalKey> key;
};

std::mutex catalog_mutex;

const std::vector<CatalogItem>& CatalogFor(int n) {
  static auto* cache = new std::map<int, std::vector<CatalogItem>>();
  std::lock_guard<std::mutex> lock(catalog_mutex);
  auto it = cache->find(n);
  if (it != cache->end()) return it->second;
  std::vector<CatalogItem> items;
  for (const FamilySpec& spec : Catalog(n)) {
    const Graph g = Build(spec);
    CatalogItem item{spec, InvariantsOf(g), std::nullopt};
    if (n <= kCanonicalClassifyLimit) item.key = CanonicalKeyOf(g);
    items.push_back(std::move(item));
  }
  return cache->emplace(n, std::move(items)).first->second;
}

void RequirePrimePowerOrder(int n) {
  for (int p = 2; p <= n; ++p) {
    if (!IsPrime(p)) continue;
    long long q = p;
    for (int k = 1; k <= 3; ++k, q *= p) {
      if (q == n) return;
    }
  }
  throw std::invalid_argument("ClassifyNamed: order is not p, p^2 or p^3");
}

Classification Classify(const Graph& g, const CanonicalKey* key) {
  RequirePrimePowerOrder(g.n());
  const Invariants inv = InvariantsOf(g);
  for (const CatalogItem& item : CatalogFor(g.n())) {
    if (!(item.invariants == inv)) continue;
    if (item.key && key != nullptr) {
      if (*item.key == *key) return {FormatFamilySpec(item.spec), DisplayName(item.spec), false};
      continue;
    }
    return {FormatFamilySpec(item.spec), DisplayName(item.spec), true};
  }
  return {"unrecognized", "unrecognized", false};
}

}  // namespace

Classification ClassifyNamed(const Graph& g) {
  if (g.n() <= kCanonicalClassifyLimit) {
    const CanonicalKey key = CanonicalKeyOf(g);
    return Classify(g, &key);
  }
  return Classify(g, nullptr);
}

Classification ClassifyNamed(const Graph& g, const CanonicalKey& key) {
  return Classify(g, g.n() <= kCanonicalClassifyLimit ? &key : nullptr);
}

}  // namespace geodex
