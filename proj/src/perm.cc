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

#include "geodex/perm.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace geodex {

Perm::Perm(int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw std::invalid_argument("Perm: degree out of range");
  }
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n > kMaxDegree) throw std::invalid_argument("Perm: degree out of range");
  std::vector<bool> seen(n, false);
  for (const int x : images_) {
    if (x < 0 || x >= n || seen[x]) {
      throw std::invalid_argument("Perm: images are not a bijection");
    }
    seen[x] = true;
  }
}

Perm Perm::FromCycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int x = cycle[i];
      if (x < 0 || x >= degree || used[x]) {
        throw std::invalid_argument("Perm::FromCycles: bad cycle point");
      }
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::IsIdentity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Perm::FirstMovedPoint() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return i;
  }
  return -1;
}

std::string Perm::ToCycleString() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out << '(';
    int x = i;
    bool first = true;
    while (!done[x]) {
      if (!first) out << ' ';
      out << x;
      done[x] = true;
      x = images_[x];
      first = false;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Perm Compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("Compose: degree mismatch");
  }
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = q[p[x]];
  return Perm(std::move(images));
}

Perm Inverse(const Perm& p) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[p[x]] = x;
  return Perm(std::move(images));
}

Perm Power(const Perm& p, long long k) {
  Perm base = k < 0 ? Inverse(p) : p;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Perm result(p.degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

namespace {

void CheckGenerators(int degree, std::span<const Perm> gens) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator degree mismatch");
    }
  }
}

}  // namespace

std::vector<int> Orbit(int degree, std::span<const Perm> gens, int x) {
  CheckGenerators(degree, gens);
  if (x < 0 || x >= degree) throw std::out_of_range("Orbit: point out of range");
  std::vector<bool> seen(degree, false);
  std::vector<int> orbit = {x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : gens) {
      const int y = g[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<int>> Orbits(int degree, std::span<const Perm> gens) {
  std::vector<bool> covered(degree, false);
  std::vector<std::vector<int>> result;
  for (int x = 0; x < degree; ++x) {
    if (covered[x]) continue;
    result.push_back(Orbit(degree, gens, x));
    for (const int y : result.back()) covered[y] = true;
  }
  return result;
}

namespace {

std::uint64_t EncodeTuple(std::span<const int> t, std::uint64_t n) {
  std::uint64_t code = 0;
  for (std::size_t i = t.size(); i-- > 0;) code = code * n + t[i];
  return code;
}

void DecodeTuple(std::uint64_t code, std::uint64_t n, std::vector<int>& t) {
  for (auto& x : t) {
    x = static_cast<int>(code % n);
    code /= n;
  }
}

void CheckTuple(int degree, std::span<const int> tuple) {
  for (const int x : tuple) {
    if (x < 0 || x >= degree) {
      throw std::out_of_range("tuple entry out of range");
    }
  }
}

}  // namespace

std::vector<std::vector<int>> OrbitTuples(int degree, std::span<const Perm> gens,
                                          std::span<const int> tuple) {
  CheckGenerators(degree, gens);
  CheckTuple(degree, tuple);
  const std::uint64_t n = degree;
  std::unordered_set<std::uint64_t> seen = {EncodeTuple(tuple, n)};
  std::vector<std::uint64_t> queue = {EncodeTuple(tuple, n)};
  std::vector<int> t(tuple.size()), image(tuple.size());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    DecodeTuple(queue[head], n, t);
    for (const Perm& g : gens) {
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = g[t[i]];
      const std::uint64_t code = EncodeTuple(image, n);
      if (seen.insert(code).second) queue.push_back(code);
    }
  }
  std::vector<std::vector<int>> result;
  result.reserve(queue.size());
  for (const std::uint64_t code : queue) {
    DecodeTuple(code, n, t);
    result.push_back(t);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t TupleOrbitSize(int degree, std::span<const Perm> gens,
                           std::span<const int> tuple) {
  CheckGenerators(degree, gens);
  CheckTuple(degree, tuple);
  if (tuple.size() > 3) return OrbitTuples(degree, gens, tuple).size();
  const std::uint64_t n = degree;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) space *= n;
  std::vector<std::uint64_t> visited((space + 63) / 64, 0);
  auto mark = [&](std::uint64_t code) {
    std::uint64_t& word = visited[code >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (code & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  };
  std::vector<std::uint64_t> queue = {EncodeTuple(tuple, n)};
  mark(queue[0]);
  std::vector<int> t(tuple.size()), image(tuple.size());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    DecodeTuple(queue[head], n, t);
    for (const Perm& g : gens) {
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = g[t[i]];
      const std::uint64_t code = EncodeTuple(image, n);
      if (mark(code)) queue.push_back(code);
    }
  }
  return queue.size();
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup PermGroup::SchreierSims(int degree, std::vector<Perm> gens,
                                  const SchreierSimsOptions& options) {
  if (degree < 0 || degree > kMaxDegree) {
    throw std::invalid_argument("SchreierSims: degree out of range");
  }
  CheckGenerators(degree, gens);
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(gens);
  for (const Perm& g : group.generators_) {
    if (g.IsIdentity()) continue;
    if (std::find(group.strong_.begin(), group.strong_.end(), g) ==
        group.strong_.end()) {
      group.strong_.push_back(g);
    }
  }

  for (const int b : options.base_prefix) {
    if (b < 0 || b >= degree ||
        std::find(group.base_.begin(), group.base_.end(), b) != group.base_.end()) {
      throw std::invalid_argument("SchreierSims: bad base prefix");
    }
    group.AppendBasePoint(b);
  }
  for (const Perm& s : group.strong_) {
    const bool fixes_base = std::all_of(group.base_.begin(), group.base_.end(),
                                        [&](int b) { return s[b] == b; });
    if (fixes_base) group.AppendBasePoint(s.FirstMovedPoint());
  }
  // Level i receives the strong generators fixing base[0..i-1].
  for (int s = 0; s < static_cast<int>(group.strong_.size()); ++s) {
    for (int i = 0; i < static_cast<int>(group.levels_.size()); ++i) {
      group.levels_[i].gens.push_back(s);
      if (group.strong_[s][group.base_[i]] != group.base_[i]) break;
    }
  }
  for (int i = 0; i < static_cast<int>(group.levels_.size()); ++i) {
    group.RebuildLevel(i);
  }

  auto reached_known = [&] {
    return options.known_order && group.order() == *options.known_order;
  };
  if (reached_known()) return group;

  int i = static_cast<int>(group.levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    Level* level = &group.levels_[i];
    for (std::size_t t = 0; t < level->orbit.size() && !restart; ++t) {
      for (std::size_t gi = 0; gi < level->gens.size(); ++gi) {
        const Perm& s = group.strong_[level->gens[gi]];
        const int q = s[level->orbit[t]];
        Perm h = level->transversal[t] * s *
                 level->inverse_transversal[level->slot[q]];
        if (h.IsIdentity()) continue;
        auto [residue, stop] = group.Sift(std::move(h), i + 1);
        if (stop == static_cast<int>(group.levels_.size()) &&
            residue.IsIdentity()) {
          continue;
        }
        const int index = static_cast<int>(group.strong_.size());
        if (stop == static_cast<int>(group.levels_.size())) {
          group.AppendBasePoint(residue.FirstMovedPoint());
        }
        group.strong_.push_back(std::move(residue));
        for (int l = i + 1; l <= stop; ++l) {
          group.levels_[l].gens.push_back(index);
          group.RebuildLevel(l);
        }
        if (reached_known()) return group;
        i = stop;
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
  if (options.known_order && group.order() != *options.known_order) {
    throw std::logic_error("SchreierSims: group order differs from known order");
  }
  return group;
}

void PermGroup::AppendBasePoint(int point) {
  base_.push_back(point);
  Level level;
  level.base_point = point;
  levels_.push_back(std::move(level));
}

void PermGroup::RebuildLevel(int i) {
  Level& level = levels_[i];
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.slot[level.base_point] = 0;
  level.transversal.assign(1, Perm(degree_));
  level.inverse_transversal.assign(1, Perm(degree_));
  for (std::size_t t = 0; t < level.orbit.size(); ++t) {
    for (const int s : level.gens) {
      const int y = strong_[s][level.orbit[t]];
      if (level.slot[y] != -1) continue;
      level.slot[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[t] * strong_[s]);
      level.inverse_transversal.push_back(Inverse(level.transversal.back()));
    }
  }
}

std::pair<Perm, int> PermGroup::Sift(Perm g, int from_level) const {
  for (int l = from_level; l < static_cast<int>(levels_.size()); ++l) {
    const int image = g[levels_[l].base_point];
    const int slot = levels_[l].slot[image];
    if (slot < 0) return {std::move(g), l};
    g = g * levels_[l].inverse_transversal[slot];
  }
  return {std::move(g), static_cast<int>(levels_.size())};
}

BigInt PermGroup::order() const {
  BigInt order = 1;
  for (const Level& level : levels_) order *= level.orbit.size();
  return order;
}

std::vector<Perm> PermGroup::StabilizerGenerators(int level) const {
  std::vector<Perm> result;
  if (level >= static_cast<int>(levels_.size())) return result;
  for (const int s : levels_[level].gens) result.push_back(strong_[s]);
  return result;
}

bool PermGroup::Contains(const Perm& p) const {
  if (p.degree() != degree_) {
    throw std::invalid_argument("Contains: degree mismatch");
  }
  auto [residue, stop] = Sift(p, 0);
  return stop == static_cast<int>(levels_.size()) && residue.IsIdentity();
}

bool PermGroup::IsTransitive() const {
  if (degree_ <= 1) return true;
  return static_cast<int>(Orbit(degree_, generators_, 0).size()) == degree_;
}

// ---------------------------------------------------------------------------
// Blocks

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Smaller representative wins.
  void Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<std::vector<int>> MinimalBlocks(const PermGroup& group, int x, int y) {
  const int n = group.degree();
  if (x < 0 || x >= n || y < 0 || y >= n) {
    throw std::out_of_range("MinimalBlocks: point out of range");
  }
  if (!group.IsTransitive()) {
    throw std::invalid_argument("MinimalBlocks: group is not transitive");
  }
  UnionFind classes(n);
  std::deque<std::pair<int, int>> pending;
  if (x != y) {
    classes.Unite(x, y);
    pending.emplace_back(x, y);
  }
  while (!pending.empty()) {
    const auto [a, b] = pending.front();
    pending.pop_front();
    for (const Perm& g : group.generators()) {
      const int c = classes.Find(g[a]);
      const int d = classes.Find(g[b]);
      if (c != d) {
        classes.Unite(c, d);
        pending.emplace_back(c, d);
      }
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = classes.Find(v);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(v);
  }
  return blocks;
}

bool IsPrimitive(const PermGroup& group) {
  if (!group.IsTransitive()) {
    throw std::invalid_argument("IsPrimitive: group is not transitive");
  }
  for (int y = 1; y < group.degree(); ++y) {
    if (MinimalBlocks(group, 0, y).size() != 1) return false;
  }
  return true;
}

}  // namespace geodex
