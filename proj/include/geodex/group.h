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

#ifndef GEODEX_GROUP_H_
#define GEODEX_GROUP_H_

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "geodex/perm.h"

namespace geodex {

enum class GroupKind {
  kCyclic,              // params {n}
  kElementaryAbelian,   // params {p, r}
  kDirectProduct,       // params {} ; factors recorded in name only
  kDihedral8,
  kQuaternion8,
  kModularP3,           // params {p}
  kExtraspecialP3,      // params {p}
};

// A finite group with elements addressed by dense indices 0..size-1.
//
// Enumeration orders (all lexicographic on exponent tuples, first coordinate
// most significant):
//   Z_n            k                         index k
//   G x H          (g, h)                    g * |H| + h
//   Z_p^r          (x_1, ..., x_r)           base-p number x_1 ... x_r
//   D_8            r^i s^j                   2i + j
//   Q_8            1, -1, i, -i, j, -j, k, -k
//   M(p^3)         a^i b^j  (i mod p^2)      p*i + j
//   E(p^3)         a^i b^j c^k               p^2*i + p*j + k
class FiniteGroup {
 public:
  using MulFn = std::function<int(int, int)>;

  // Tabulates `mul`; the identity is located as the unique two-sided neutral
  // element. Throws std::invalid_argument if there is none.
  FiniteGroup(std::string name, GroupKind kind, std::vector<int> params,
              int size, const MulFn& mul, std::vector<std::string> labels,
              std::vector<int> generators);

  const std::string& name() const { return name_; }
  GroupKind kind() const { return kind_; }
  const std::vector<int>& params() const { return params_; }
  int size() const { return size_; }
  int identity() const { return identity_; }
  int Mul(int x, int y) const { return table_[x * size_ + y]; }
  int Inv(int x) const { return inverse_[x]; }
  int Pow(int x, long long k) const;
  // x^-1 y^-1 x y
  int Commutator(int x, int y) const { return Mul(Mul(Inv(x), Inv(y)), Mul(x, y)); }
  int ElementOrder(int x) const;
  const std::string& Label(int x) const { return labels_[x]; }
  // A generating set (recorded at construction; verified by the tests).
  const std::vector<int>& generators() const { return generators_; }
  bool IsAbelian() const;
  // Subgroup generated by `elements`, sorted.
  std::vector<int> Closure(std::span<const int> elements) const;

  // Exhaustive associativity / identity / inverse check.
  bool SatisfiesAxioms() const;

 private:
  std::string name_;
  GroupKind kind_;
  std::vector<int> params_;
  int size_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = -1;
  std::vector<std::string> labels_;
  std::vector<int> generators_;
};

bool IsPrime(int n);

FiniteGroup Cyclic(int n);
FiniteGroup ElementaryAbelian(int p, int r);
FiniteGroup DirectProduct(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup Dihedral8();
FiniteGroup Quaternion8();
// <a, b | a^{p^2} = b^p = 1, a^b = a^{1+p}>
FiniteGroup ModularP3(int p);
// Extraspecial group of order p^3 and exponent p, p odd.
FiniteGroup ExtraspecialP3(int p);

// Normal-form arithmetic in E(p^3) = <a, b, c | [a,b] = c central>.
// The commutator convention is [x, y] = x^-1 y^-1 x y, so xy = yx[x, y],
// which gives b^j a^i = a^i b^j c^{-ij} and the product law
//   (i1, j1, k1)(i2, j2, k2) = (i1 + i2, j1 + j2, k1 + k2 - j1 i2).
struct ExtraspecialElement {
  int i = 0;
  int j = 0;
  int k = 0;
  friend bool operator==(const ExtraspecialElement&,
                         const ExtraspecialElement&) = default;
};

class Extraspecial {
 public:
  explicit Extraspecial(int p);
  int p() const { return p_; }
  int size() const { return p_ * p_ * p_; }
  ExtraspecialElement Mul(ExtraspecialElement x, ExtraspecialElement y) const;
  ExtraspecialElement Inv(ExtraspecialElement x) const;
  ExtraspecialElement Pow(ExtraspecialElement x, long long k) const;
  int Index(ExtraspecialElement x) const { return (x.i * p_ + x.j) * p_ + x.k; }
  ExtraspecialElement Element(int index) const {
    return {index / (p_ * p_), (index / p_) % p_, index % p_};
  }
  static constexpr ExtraspecialElement a() { return {1, 0, 0}; }
  static constexpr ExtraspecialElement b() { return {0, 1, 0}; }
  static constexpr ExtraspecialElement c() { return {0, 0, 1}; }

 private:
  int Mod(long long v) const {
    const long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int p_;
};

// Identity-free, inverse-closed subset of a group: the S of Cay(G, S).
class ConnectionSet {
 public:
  // Throws std::invalid_argument if `members` contains the identity, an
  // out-of-range index, or is not closed under inversion.
  ConnectionSet(const FiniteGroup& group, std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool Contains(int x) const;
  // True when <s> minus the identity lies in S for every s in S.
  bool IsPowerClosed(const FiniteGroup& group) const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  std::vector<int> members_;  // sorted, unique
};

// R(g): x -> xg, one permutation per element (index = element).
std::vector<Perm> RightRegular(const FiniteGroup& group);
// R(g) for g in group.generators().
std::vector<Perm> RightRegularGenerators(const FiniteGroup& group);

// {s1 s2 | s1, s2 in S}, sorted.
std::vector<int> ProductSet(const FiniteGroup& group, const ConnectionSet& s);

// <x>^* : the non-identity powers of x, sorted.
std::vector<int> CyclicStar(const FiniteGroup& group, int x);

struct GroupAutomorphism {
  std::vector<int> image;  // element index -> element index

  int operator()(int x) const { return image[x]; }
  friend bool operator==(const GroupAutomorphism&,
                         const GroupAutomorphism&) = default;
  friend auto operator<=>(const GroupAutomorphism&,
                          const GroupAutomorphism&) = default;
};

// alpha then beta.
GroupAutomorphism Compose(const GroupAutomorphism& alpha,
                          const GroupAutomorphism& beta);
// Exhaustive multiplicativity + bijectivity check.
bool IsAutomorphism(const FiniteGroup& group, const GroupAutomorphism& alpha);
Perm ToPerm(const GroupAutomorphism& alpha);

// The automorphism a -> x, b -> y of E(p^3); consequently c -> [x, y].
// Throws std::invalid_argument unless <x, y> = E(p^3).
GroupAutomorphism SigmaXY(const FiniteGroup& e, int x, int y);

// Visits every automorphism of a supported group once. Supported: cyclic,
// elementary abelian (invertible matrices), E(p^3) (sigma pairs), and groups
// with a small generating set (generator-image candidates filtered by the
// homomorphism property): direct products, D_8, Q_8, M(p^3).
void ForEachAutomorphism(const FiniteGroup& group,
                         const std::function<void(const GroupAutomorphism&)>& visit);
std::vector<GroupAutomorphism> AutomorphismGroup(const FiniteGroup& group);
// Aut(G, S) = {alpha in Aut(G) | S^alpha = S}.
std::vector<GroupAutomorphism> AutStabSet(const FiniteGroup& group,
                                          const ConnectionSet& s);

// 2x2 matrix over Z_p acting on row vectors.
struct Mat2 {
  int p = 0;
  std::array<std::array<int, 2>, 2> m{};

  int Det() const;
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};
Mat2 operator*(const Mat2& x, const Mat2& y);

// Action of alpha on E/C in the basis (aC, bC): row 0 is the image of aC,
// row 1 the image of bC. The map alpha -> matrix is a homomorphism for the
// left-to-right composition of Compose().
Mat2 InducedMatrix(const FiniteGroup& e, const GroupAutomorphism& alpha);

// Elements of autES whose induced determinant is an m-th power in Z_p^*.
// Throws std::invalid_argument if m does not divide p - 1 or if the induced
// matrix map is not injective on autES.
std::vector<GroupAutomorphism> DetIndexSubgroup(
    const FiniteGroup& e, const std::vector<GroupAutomorphism>& aut_es, int m);
// The determinant-one elements (index p - 1).
std::vector<GroupAutomorphism> DetOneSubgroup(
    const FiniteGroup& e, const std::vector<GroupAutomorphism>& aut_es);

// Orbits of a set of automorphisms on the group elements.
std::vector<std::vector<int>> AutomorphismOrbits(
    const FiniteGroup& group, const std::vector<GroupAutomorphism>& autos);

// Standard connection sets on E(p^3).
// <a>^* u <b>^*
ConnectionSet ExtraspecialSetA(const FiniteGroup& e);
// <b>^* u (union over i in Z_p of <b^i a b^i>^*)
ConnectionSet ExtraspecialSetB(const FiniteGroup& e);
// <a>^* u (union over i in Z_p of <a^i b a^i>^*)
ConnectionSet ExtraspecialSetBAlt(const FiniteGroup& e);

}  // namespace geodex

#endif  // GEODEX_GROUP_H_
