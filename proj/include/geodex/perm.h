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

#ifndef GEODEX_PERM_H_
#define GEODEX_PERM_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace geodex {

// Exact group orders; |Aut(K_125)| = 125! does not fit any machine word.
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxDegree = 1024;

// A permutation of {0, ..., n-1}.
//
// Permutations act on the right throughout the project: Compose(p, q) first
// applies p and then q, i.e. x -> q(p(x)). This matches the right-regular
// action R(g): x -> xg, so that R(g) * R(h) = R(gh).
class Perm {
 public:
  Perm() = default;
  // Identity of the given degree.
  explicit Perm(int degree);
  // Throws std::invalid_argument unless `images` is a bijection of
  // {0, ..., images.size()-1}.
  explicit Perm(std::vector<int> images);

  static Perm Identity(int degree) { return Perm(degree); }
  // Cycles given as lists of points, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm FromCycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }
  bool IsIdentity() const;
  // Smallest point not fixed, or -1.
  int FirstMovedPoint() const;

  std::string ToCycleString() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// x -> q(p(x)). Throws std::invalid_argument on degree mismatch.
Perm Compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return Compose(p, q); }
Perm Inverse(const Perm& p);
// p^k for any integer k.
Perm Power(const Perm& p, long long k);

// BFS closure of {x} under the generators, sorted ascending. `degree` is used
// for range checking when `gens` is empty.
std::vector<int> Orbit(int degree, std::span<const Perm> gens, int x);
// All orbits of <gens>, each sorted, ordered by smallest element.
std::vector<std::vector<int>> Orbits(int degree, std::span<const Perm> gens);

// Closure of an ordered tuple under the coordinatewise action; result sorted
// lexicographically.
std::vector<std::vector<int>> OrbitTuples(int degree, std::span<const Perm> gens,
                                          std::span<const int> tuple);
// Size of the tuple orbit only. Uses a dense visited bitmap indexed by the
// base-n encoding of the tuple, so it is meant for tuple length <= 3.
std::size_t TupleOrbitSize(int degree, std::span<const Perm> gens,
                           std::span<const int> tuple);

struct SchreierSimsOptions {
  // Points placed first in the base, in order. Further base points are the
  // lowest-index points moved by the stabilizer generators.
  std::vector<int> base_prefix;
  // When set, construction stops as soon as the product of basic orbit
  // lengths reaches this value. The caller guarantees it is the true order
  // (e.g. read off an automorphism search tree); if the full deterministic
  // algorithm finishes below it, std::logic_error is thrown.
  std::optional<BigInt> known_order;
};

// A permutation group together with a stabilizer chain.
class PermGroup {
 public:
  // Deterministic Schreier-Sims. Empty `gens` gives the trivial group.
  static PermGroup SchreierSims(int degree, std::vector<Perm> gens,
                                const SchreierSimsOptions& options = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  BigInt order() const;
  // Orbit of base()[level] under the level-th stabilizer, in discovery order.
  const std::vector<int>& basic_orbit(int level) const {
    return levels_[level].orbit;
  }
  // Strong generators fixing base()[0..level-1] pointwise.
  std::vector<Perm> StabilizerGenerators(int level) const;

  bool Contains(const Perm& p) const;
  bool IsTransitive() const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<int> gens;          // indices into strong_
    std::vector<int> orbit;         // discovery order
    std::vector<int> slot;          // point -> index into orbit/transversal, -1
    std::vector<Perm> transversal;  // u with base_point -> orbit point
    std::vector<Perm> inverse_transversal;
  };

  PermGroup() = default;
  void RebuildLevel(int i);
  // Returns the residue and the level at which sifting stopped
  // (levels_.size() if it went all the way through).
  std::pair<Perm, int> Sift(Perm g, int from_level) const;
  void AppendBasePoint(int point);

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

// Finest block system of the (transitive) group whose block through x also
// contains y. Blocks are sorted and listed by smallest element. Throws
// std::invalid_argument if the group is not transitive.
std::vector<std::vector<int>> MinimalBlocks(const PermGroup& group, int x, int y);
// Throws std::invalid_argument if the group is not transitive.
bool IsPrimitive(const PermGroup& group);

}  // namespace geodex

#endif  // GEODEX_PERM_H_
