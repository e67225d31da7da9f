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

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <span>

namespace geodex {

namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  std::uint64_t z = h + 0x9E3779B97F4A7C15ULL + x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Ordered partition as a vertex ordering with cell boundaries.
struct Part {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell_end;  // meaningful at cell starts
  std::vector<int> cell_of;   // vertex -> start of its cell
  int cells = 0;

  static Part FromCells(int n, const std::vector<std::vector<int>>& cells) {
    Part p;
    p.lab.reserve(n);
    p.pos.assign(n, -1);
    p.cell_end.assign(n + 1, 0);
    p.cell_of.assign(n, 0);
    for (const auto& cell : cells) {
      const int start = static_cast<int>(p.lab.size());
      std::vector<int> sorted = cell;
      std::sort(sorted.begin(), sorted.end());
      for (const int v : sorted) {
        p.pos[v] = static_cast<int>(p.lab.size());
        p.cell_of[v] = start;
        p.lab.push_back(v);
      }
      p.cell_end[start] = static_cast<int>(p.lab.size());
      ++p.cells;
    }
    return p;
  }

  std::vector<std::vector<int>> ToCells() const {
    std::vector<std::vector<int>> cells;
    const int n = static_cast<int>(lab.size());
    for (int s = 0; s < n; s = cell_end[s]) {
      std::vector<int> cell(lab.begin() + s, lab.begin() + cell_end[s]);
      std::sort(cell.begin(), cell.end());
      cells.push_back(std::move(cell));
    }
    return cells;
  }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g),
        n_(g.n()),
        wbits_(g.words()),
        count_(g.n()),
        in_queue_(g.n() + 1, 0) {}

  // Refines `p` to the coarsest equitable partition finer than it, starting
  // from the given splitter cells. Returns the trace hash.
  std::uint64_t Run(Part& p, std::span<const int> splitters, std::uint64_t h) {
    for (const int s : splitters) Enqueue(s);
    while (!queue_.empty()) {
      const int ws = queue_.front();
      queue_.pop_front();
      in_queue_[ws] = 0;
      const int we = p.cell_end[ws];
      std::fill(wbits_.begin(), wbits_.end(), 0);
      for (int i = ws; i < we; ++i) {
        wbits_[p.lab[i] / 64] |= Word{1} << (p.lab[i] % 64);
      }
      h = Mix(h, (static_cast<std::uint64_t>(ws) << 20) | (we - ws));
      for (int xs = 0, xe; xs < n_; xs = xe) {
        xe = p.cell_end[xs];
        if (xe - xs == 1) continue;
        bool uniform = true;
        for (int i = xs; i < xe; ++i) {
          const int v = p.lab[i];
          const auto row = g_.Row(v);
          int c = 0;
          for (int k = 0; k < g_.words(); ++k) c += std::popcount(row[k] & wbits_[k]);
          count_[v] = c;
          if (c != count_[p.lab[xs]]) uniform = false;
        }
        if (uniform) continue;
        h = Split(p, xs, xe, h);
      }
    }
    return Mix(h, p.cells);
  }

 private:
  void Enqueue(int s) {
    if (!in_queue_[s]) {
      in_queue_[s] = 1;
      queue_.push_back(s);
    }
  }

  std::uint64_t Split(Part& p, int xs, int xe, std::uint64_t h) {
    std::sort(p.lab.begin() + xs, p.lab.begin() + xe, [&](int a, int b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });
    std::vector<int> starts;
    for (int i = xs; i < xe; ++i) {
      if (i == xs || count_[p.lab[i]] != count_[p.lab[i - 1]]) starts.push_back(i);
    }
    starts.push_back(xe);
    h = Mix(h, (static_cast<std::uint64_t>(xs) << 20) | (starts.size() - 1));
    int largest = 0;
    for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
      const int fs = starts[f], fe = starts[f + 1];
      p.cell_end[fs] = fe;
      for (int i = fs; i < fe; ++i) {
        p.cell_of[p.lab[i]] = fs;
        p.pos[p.lab[i]] = i;
      }
      h = Mix(h, (static_cast<std::uint64_t>(count_[p.lab[fs]]) << 20) | (fe - fs));
      if (fe - fs > starts[largest + 1] - starts[largest]) largest = static_cast<int>(f);
    }
    p.cells += static_cast<int>(starts.size()) - 2;
    const bool was_queued = in_queue_[xs];
    for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
      if (was_queued || static_cast<int>(f) != largest) Enqueue(starts[f]);
    }
    return h;
  }

  const Graph& g_;
  int n_;
  std::vector<Word> wbits_;
  std::vector<int> count_;
  std::vector<char> in_queue_;
  std::deque<int> queue_;
};

constexpr int kNoJump = -1;

class Searcher {
 public:
  Searcher(const Graph& g, const SearchOptions& options)
      : g_(g), n_(g.n()), options_(options), refiner_(g) {}

  SearchResult Run() {
    std::vector<std::vector<int>> cells;
    if (options_.colouring) {
      ValidatePartition(*options_.colouring, n_);
      cells = options_.colouring->cells;
    } else if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    Part root = Part::FromCells(n_, cells);
    std::vector<int> splitters;
    for (int s = 0; s < n_; s = root.cell_end[s]) splitters.push_back(s);
    trace_.assign(n_ + 1, 0);
    eq_first_.assign(n_ + 1, 1);
    best_cmp_.assign(n_ + 1, 0);
    trace_[0] = refiner_.Run(root, splitters, Mix(0, n_));
    Explore(0, root);

    SearchResult result;
    result.generators = gens_;
    result.first_path = first_path_;
    result.nodes = nodes_;
    result.order = 1;
    for (std::size_t level = 0; level < first_path_.size(); ++level) {
      const auto stab = StabilizerGens(std::span(first_path_).first(level));
      result.order *= Orbit(n_, stab, first_path_[level]).size();
    }
    std::vector<int> labeling(n_);
    for (int i = 0; i < n_; ++i) labeling[best_lab_[i]] = i;
    result.canonical_labeling = Perm(std::move(labeling));
    result.key = MakeKey();
    return result;
  }

 private:
  std::vector<Perm> StabilizerGens(std::span<const int> prefix) const {
    std::vector<Perm> stab;
    for (const Perm& gamma : gens_) {
      if (std::all_of(prefix.begin(), prefix.end(),
                      [&](int v) { return gamma[v] == v; })) {
        stab.push_back(gamma);
      }
    }
    return stab;
  }

  // Orbit representative per vertex under the generators fixing `prefix`.
  std::vector<int> OrbitReps(std::span<const int> prefix) const {
    std::vector<int> rep(n_, -1);
    const auto stab = StabilizerGens(prefix);
    for (int v = 0; v < n_; ++v) {
      if (rep[v] >= 0) continue;
      for (const int w : Orbit(n_, stab, v)) rep[w] = v;
    }
    return rep;
  }

  int Explore(int level, const Part& part) {
    if (++nodes_ > options_.node_budget) {
      throw SearchBudgetExceeded("automorphism search exceeded its node budget");
    }
    if (part.cells == n_) return ProcessLeaf(level, part);

    int target = -1, target_size = n_ + 1;
    for (int s = 0; s < n_; s = part.cell_end[s]) {
      const int size = part.cell_end[s] - s;
      if (size > 1 && size < target_size) {
        target = s;
        target_size = size;
      }
    }
    std::vector<int> children(part.lab.begin() + target,
                              part.lab.begin() + part.cell_end[target]);
    std::sort(children.begin(), children.end());

    std::vector<int> explored;
    std::vector<int> reps;
    std::size_t reps_stamp = static_cast<std::size_t>(-1);
    for (const int v : children) {
      if (!explored.empty()) {
        if (reps_stamp != gens_.size()) {
          reps = OrbitReps(std::span(path_).first(level));
          reps_stamp = gens_.size();
        }
        const bool covered = std::any_of(explored.begin(), explored.end(),
                                         [&](int u) { return reps[u] == reps[v]; });
        if (covered) continue;
      }
      Part child = part;
      const std::uint64_t t = Individualize(child, v);
      path_.resize(level + 1);
      path_[level] = v;
      const int next = level + 1;
      trace_[next] = t;
      bool eq = true;
      int cmp = 0;
      if (have_first_) {
        eq = eq_first_[level] && next < static_cast<int>(first_trace_.size()) &&
             first_trace_[next] == t;
        if (best_cmp_[level] < 0) {
          cmp = -1;
        } else if (next >= static_cast<int>(best_trace_.size())) {
          cmp = 1;
        } else {
          cmp = t < best_trace_[next] ? -1 : (t == best_trace_[next] ? 0 : 1);
        }
        if (!eq && cmp > 0) {
          explored.push_back(v);
          continue;
        }
      }
      eq_first_[next] = eq;
      best_cmp_[next] = cmp;
      const int jump = Explore(next, child);
      explored.push_back(v);
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  std::uint64_t Individualize(Part& p, int v) {
    const int s = p.cell_of[v];
    const int e = p.cell_end[s];
    const int at = p.pos[v];
    std::swap(p.lab[s], p.lab[at]);
    p.pos[p.lab[at]] = at;
    p.pos[v] = s;
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    p.cell_of[v] = s;
    for (int i = s + 1; i < e; ++i) p.cell_of[p.lab[i]] = s + 1;
    ++p.cells;
    const int splitter[] = {s};
    return refiner_.Run(p, splitter, Mix(1, s));
  }

  std::vector<Word> LeafRows(const Part& part) const {
    const int words = g_.words();
    std::vector<Word> rows(static_cast<std::size_t>(n_) * words, 0);
    for (int i = 0; i < n_; ++i) {
      for (const int u : g_.Neighbors(part.lab[i])) {
        const int j = part.pos[u];
        rows[static_cast<std::size_t>(i) * words + j / 64] |= Word{1} << (j % 64);
      }
    }
    return rows;
  }

  void AddGenerator(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    std::vector<int> images(n_);
    for (int i = 0; i < n_; ++i) images[from_lab[i]] = to_lab[i];
    Perm gamma(std::move(images));
    if (gamma.IsIdentity()) return;
    if (!IsAutomorphism(g_, gamma)) {
      throw std::logic_error("automorphism search produced a non-automorphism");
    }
    if (options_.colouring) {
      for (const auto& cell : options_.colouring->cells) {
        for (const int v : cell) {
          if (std::find(cell.begin(), cell.end(), gamma[v]) == cell.end()) {
            throw std::logic_error("automorphism search broke the colouring");
          }
        }
      }
    }
    gens_.push_back(std::move(gamma));
  }

  int ProcessLeaf(int level, const Part& part) {
    std::vector<Word> rows = LeafRows(part);
    const std::vector<std::uint64_t> trace(trace_.begin(), trace_.begin() + level + 1);
    if (!have_first_) {
      have_first_ = true;
      first_trace_ = best_trace_ = trace;
      first_lab_ = best_lab_ = part.lab;
      first_rows_ = best_rows_ = rows;
      first_path_.assign(path_.begin(), path_.begin() + level);
      return kNoJump;
    }
    if (eq_first_[level] && rows == first_rows_) {
      AddGenerator(first_lab_, part.lab);
      int k = 0;
      while (k < level && k < static_cast<int>(first_path_.size()) &&
             path_[k] == first_path_[k]) {
        ++k;
      }
      return k;
    }
    if (best_cmp_[level] < 0 || (best_cmp_[level] == 0 && rows < best_rows_)) {
      best_trace_ = trace;
      best_lab_ = part.lab;
      best_rows_ = std::move(rows);
      std::fill(best_cmp_.begin(), best_cmp_.begin() + level + 1, 0);
    } else if (best_cmp_[level] == 0 && rows == best_rows_) {
      AddGenerator(best_lab_, part.lab);
    }
    return kNoJump;
  }

  CanonicalKey MakeKey() const {
    CanonicalKey key;
    key.bytes.push_back(static_cast<std::uint8_t>(n_ & 0xff));
    key.bytes.push_back(static_cast<std::uint8_t>(n_ >> 8));
    const int words = g_.words();
    std::uint8_t acc = 0;
    int filled = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const bool bit =
            (best_rows_[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64)) & 1;
        acc = static_cast<std::uint8_t>(acc | (bit << filled));
        if (++filled == 8) {
          key.bytes.push_back(acc);
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) key.bytes.push_back(acc);
    return key;
  }

  const Graph& g_;
  int n_;
  SearchOptions options_;
  Refiner refiner_;
  std::uint64_t nodes_ = 0;

  std::vector<int> path_;
  std::vector<std::uint64_t> trace_;
  std::vector<char> eq_first_;
  std::vector<int> best_cmp_;

  bool have_first_ = false;
  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<Word> first_rows_, best_rows_;
  std::vector<int> first_path_;
  std::vector<Perm> gens_;
};

}  // namespace

void ValidatePartition(const OrderedPartition& partition, int n) {
  std::vector<bool> seen(n, false);
  int covered = 0;
  for (const auto& cell : partition.cells) {
    if (cell.empty()) throw std::invalid_argument("partition has an empty cell");
    for (const int v : cell) {
      if (v < 0 || v >= n || seen[v]) {
        throw std::invalid_argument("partition cells overlap or are out of range");
      }
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition does not cover all vertices");
}

OrderedPartition Refine(const Graph& g, const OrderedPartition& partition) {
  ValidatePartition(partition, g.n());
  Part p = Part::FromCells(g.n(), partition.cells);
  std::vector<int> splitters;
  for (int s = 0; s < g.n(); s = p.cell_end[s]) splitters.push_back(s);
  Refiner refiner(g);
  refiner.Run(p, splitters, 0);
  return {p.ToCells()};
}

bool IsEquitable(const Graph& g, const OrderedPartition& partition) {
  for (const auto& x : partition.cells) {
    for (const auto& w : partition.cells) {
      int expected = -1;
      for (const int v : x) {
        int c = 0;
        for (const int u : w) c += g.Adjacent(v, u);
        if (expected < 0) expected = c;
        if (c != expected) return false;
      }
    }
  }
  return true;
}

std::string CanonicalKey::Hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (const std::uint8_t b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 15];
  }
  return out;
}

std::uint64_t DefaultNodeBudget() {
  if (const char* env = std::getenv("GEODEX_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

SearchResult SearchAutomorphisms(const Graph& g, const SearchOptions& options) {
  return Searcher(g, options).Run();
}

std::vector<Perm> AutomorphismGenerators(const Graph& g) {
  return SearchAutomorphisms(g).generators;
}

PermGroup GroupFromSearch(const Graph& g, const SearchResult& result) {
  SchreierSimsOptions ss;
  ss.base_prefix = result.first_path;
  ss.known_order = result.order;
  return PermGroup::SchreierSims(g.n(), result.generators, ss);
}

PermGroup AutomorphismGroup(const Graph& g) {
  return GroupFromSearch(g, SearchAutomorphisms(g));
}

CanonicalKey CanonicalKeyOf(const Graph& g) { return SearchAutomorphisms(g).key; }

bool AreIsomorphic(const Graph& a, const Graph& b, Perm* witness) {
  if (a.n() != b.n() || a.EdgeCount() != b.EdgeCount()) return false;
  const SearchResult ra = SearchAutomorphisms(a);
  const SearchResult rb = SearchAutomorphisms(b);
  if (ra.key != rb.key) return false;
  if (witness != nullptr) {
    const Perm to_b = Inverse(rb.canonical_labeling);
    std::vector<int> images(a.n());
    for (int v = 0; v < a.n(); ++v) images[v] = to_b[ra.canonical_labeling[v]];
    *witness = Perm(std::move(images));
    if (Relabel(a, *witness) != b) {
      throw std::logic_error("AreIsomorphic: canonical labelings disagree");
    }
  }
  return true;
}

}  // namespace geodex
