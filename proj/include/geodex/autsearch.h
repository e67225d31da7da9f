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

// Graph automorphism groups and canonical forms by individualization and
// equitable refinement.
//
// The search tree is the usual one: the root is the coarsest equitable
// refinement of the unit partition; a node's children individualize each
// vertex of its target cell (the first smallest non-singleton cell) and
// refine again; leaves are discrete partitions, i.e. vertex orderings.
//
// Every refinement emits a trace hash built only from cell positions, sizes
// and neighbour counts, so it is invariant under relabeling. Leaves are
// ranked by (trace sequence, relabeled adjacency matrix); the canonical form
// is the minimal leaf. Two kinds of pruning are used:
//   * a child in the same orbit as an explored sibling, under the
//     discovered automorphisms fixing the node's prefix, is skipped;
//   * a node whose trace is worse than the best leaf's, and which cannot
//     lead to a leaf equivalent to the first leaf, is skipped.
// A leaf equivalent to the first leaf yields an automorphism and the search
// backjumps to the deepest first-path ancestor. With this discipline the
// generators found form a strong generating set relative to the first path,
// and |Aut| is the product of the first-path orbit lengths.

#ifndef GEODEX_AUTSEARCH_H_
#define GEODEX_AUTSEARCH_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geodex/graph.h"
#include "geodex/perm.h"

namespace geodex {

struct OrderedPartition {
  std::vector<std::vector<int>> cells;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

// Throws std::invalid_argument unless the cells are disjoint, nonempty and
// cover {0, ..., n-1}.
void ValidatePartition(const OrderedPartition& partition, int n);
// Coarsest equitable refinement. Cells keep their relative order; a split
// cell is replaced in place by its fragments in ascending neighbour-count
// order. Vertices inside a cell are listed ascending.
OrderedPartition Refine(const Graph& g, const OrderedPartition& partition);
bool IsEquitable(const Graph& g, const OrderedPartition& partition);

struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string Hex() const;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 10^7, or the value of GEODEX_NODE_BUDGET when set.
std::uint64_t DefaultNodeBudget();

struct SearchOptions {
  std::uint64_t node_budget = DefaultNodeBudget();
  // Optional vertex colouring; automorphisms must preserve it.
  std::optional<OrderedPartition> colouring;
};

struct SearchResult {
  std::vector<Perm> generators;   // each verified to preserve adjacency
  BigInt order;                   // product of first-path orbit lengths
  std::vector<int> first_path;    // individualized vertices; a base for Aut
  Perm canonical_labeling;        // vertex -> canonical position
  CanonicalKey key;
  std::uint64_t nodes = 0;
};

// Throws SearchBudgetExceeded when the node budget runs out.
SearchResult SearchAutomorphisms(const Graph& g, const SearchOptions& options = {});

std::vector<Perm> AutomorphismGenerators(const Graph& g);
// Full automorphism group with stabilizer chain (order confirmed by
// Schreier-Sims over the search's base).
PermGroup AutomorphismGroup(const Graph& g);
PermGroup GroupFromSearch(const Graph& g, const SearchResult& result);

CanonicalKey CanonicalKeyOf(const Graph& g);
// When isomorphic and `witness` is non-null, stores a bijection mapping
// vertex v of a to vertex (*witness)[v] of b.
bool AreIsomorphic(const Graph& a, const Graph& b, Perm* witness = nullptr);

}  // namespace geodex

#endif  // GEODEX_AUTSEARCH_H_
