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

#include "geodex/group.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace geodex {

namespace {

int Mod(long long v, int n) {
  const long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void RequirePrime(int p, const char* who) {
  if (!IsPrime(p)) throw std::invalid_argument(std::string(who) + ": p not prime");
}

std::string PowerLabel(const std::string& symbol, int e) {
  if (e == 0) return "";
  if (e == 1) return symbol;
  return symbol + "^" + std::to_string(e);
}

std::string JoinLabel(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out.empty() ? "1" : out;
}

}  // namespace

bool IsPrime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteGroup::FiniteGroup(std::string name, GroupKind kind, std::vector<int> params,
                         int size, const MulFn& mul,
                         std::vector<std::string> labels,
                         std::vector<int> generators)
    : name_(std::move(name)),
      kind_(kind),
      params_(std::move(params)),
      size_(size),
      labels_(std::move(labels)),
      generators_(std::move(generators)) {
  if (size_ < 1) throw std::invalid_argument("FiniteGroup: empty group");
  table_.resize(static_cast<std::size_t>(size_) * size_);
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      const int z = mul(x, y);
      if (z < 0 || z >= size_) {
        throw std::invalid_argument("FiniteGroup: product out of range");
      }
      table_[x * size_ + y] = z;
    }
  }
  for (int e = 0; e < size_ && identity_ < 0; ++e) {
    bool neutral = true;
    for (int x = 0; x < size_ && neutral; ++x) {
      neutral = Mul(e, x) == x && Mul(x, e) == x;
    }
    if (neutral) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity");
  inverse_.assign(size_, -1);
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      if (Mul(x, y) == identity_) {
        inverse_[x] = y;
        break;
      }
    }
    if (inverse_[x] < 0) throw std::invalid_argument("FiniteGroup: no inverse");
  }
  if (static_cast<int>(labels_.size()) != size_) {
    labels_.resize(size_);
    for (int x = 0; x < size_; ++x) {
      if (labels_[x].empty()) labels_[x] = std::to_string(x);
    }
  }
}

int FiniteGroup::Pow(int x, long long k) const {
  int base = k < 0 ? Inv(x) : x;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  int result = identity_;
  while (e > 0) {
    if (e & 1) result = Mul(result, base);
    base = Mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteGroup::ElementOrder(int x) const {
  int order = 1;
  for (int y = x; y != identity_; y = Mul(y, x)) ++order;
  return order;
}

bool FiniteGroup::IsAbelian() const {
  for (int x = 0; x < size_; ++x) {
    for (int y = x + 1; y < size_; ++y) {
      if (Mul(x, y) != Mul(y, x)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::Closure(std::span<const int> elements) const {
  std::vector<bool> in(size_, false);
  std::vector<int> members = {identity_};
  in[identity_] = true;
  for (std::size_t t = 0; t < members.size(); ++t) {
    for (const int g : elements) {
      const int y = Mul(members[t], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool FiniteGroup::SatisfiesAxioms() const {
  for (int x = 0; x < size_; ++x) {
    if (Mul(identity_, x) != x || Mul(x, identity_) != x) return false;
    if (Mul(x, Inv(x)) != identity_ || Mul(Inv(x), x) != identity_) return false;
    for (int y = 0; y < size_; ++y) {
      const int xy = Mul(x, y);
      for (int z = 0; z < size_; ++z) {
        if (Mul(xy, z) != Mul(x, Mul(y, z))) return false;
      }
    }
  }
  return true;
}

FiniteGroup Cyclic(int n) {
  if (n < 1) throw std::invalid_argument("Cyclic: n must be positive");
  std::vector<std::string> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = std::to_string(k);
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup("Z" + std::to_string(n), GroupKind::kCyclic, {n}, n,
                     [n](int x, int y) { return (x + y) % n; }, std::move(labels),
                     std::move(gens));
}

FiniteGroup ElementaryAbelian(int p, int r) {
  RequirePrime(p, "ElementaryAbelian");
  if (r < 1) throw std::invalid_argument("ElementaryAbelian: r must be positive");
  int size = 1;
  for (int t = 0; t < r; ++t) size *= p;
  auto digits = [p, r](int x) {
    std::vector<int> d(r);
    for (int t = r - 1; t >= 0; --t) {
      d[t] = x % p;
      x /= p;
    }
    return d;
  };
  auto mul = [p, r, digits](int x, int y) {
    const auto dx = digits(x);
    const auto dy = digits(y);
    int z = 0;
    for (int t = 0; t < r; ++t) z = z * p + (dx[t] + dy[t]) % p;
    return z;
  };
  std::vector<std::string> labels(size);
  for (int x = 0; x < size; ++x) {
    std::string s = "(";
    const auto d = digits(x);
    for (int t = 0; t < r; ++t) s += (t ? "," : "") + std::to_string(d[t]);
    labels[x] = s + ")";
  }
  std::vector<int> gens;
  for (int t = 0, unit = size / p; t < r; ++t, unit /= p) gens.push_back(unit);
  std::string name = r == 1 ? "Z" + std::to_string(p)
                            : "Z" + std::to_string(p) + "^" + std::to_string(r);
  return FiniteGroup(name, GroupKind::kElementaryAbelian, {p, r}, size, mul,
                     std::move(labels), std::move(gens));
}

FiniteGroup DirectProduct(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.size();
  std::vector<std::string> labels(g.size() * m);
  for (int x = 0; x < g.size(); ++x) {
    for (int y = 0; y < m; ++y) {
      labels[x * m + y] = "(" + g.Label(x) + "," + h.Label(y) + ")";
    }
  }
  std::vector<int> gens;
  for (const int x : g.generators()) gens.push_back(x * m + h.identity());
  for (const int y : h.generators()) gens.push_back(g.identity() * m + y);
  return FiniteGroup(
      g.name() + "x" + h.name(), GroupKind::kDirectProduct, {}, g.size() * m,
      [&g, &h, m](int x, int y) {
        return g.Mul(x / m, y / m) * m + h.Mul(x % m, y % m);
      },
      std::move(labels), std::move(gens));
}

FiniteGroup Dihedral8() {
  // r^i s^j, i in Z_4, j in Z_2; s r s = r^-1.
  std::vector<std::string> labels(8);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      labels[2 * i + j] = JoinLabel({PowerLabel("r", i), PowerLabel("s", j)});
    }
  }
  return FiniteGroup(
      "D8", GroupKind::kDihedral8, {}, 8,
      [](int x, int y) {
        const int i1 = x / 2, j1 = x % 2, i2 = y / 2, j2 = y % 2;
        const int i = Mod(i1 + (j1 ? -i2 : i2), 4);
        return 2 * i + (j1 + j2) % 2;
      },
      std::move(labels), {2, 1});
}

FiniteGroup Quaternion8() {
  // index = 2 * unit + negative, unit in {1, i, j, k}.
  // unit_product[u][v] = {sign, unit} of u * v.
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup(
      "Q8", GroupKind::kQuaternion8, {}, 8,
      [](int x, int y) {
        const int u = x / 2, v = y / 2;
        const int sign = (x % 2) ^ (y % 2) ^ kSign[u][v];
        return 2 * kUnit[u][v] + sign;
      },
      std::move(labels), {2, 4});
}

FiniteGroup ModularP3(int p) {
  RequirePrime(p, "ModularP3");
  const int p2 = p * p;
  // b^j a^i = a^{i (1+p)^{-j}} b^j and (1+p)^{-1} = 1 - p (mod p^2).
  std::vector<int> twist(p);
  twist[0] = 1;
  for (int j = 1; j < p; ++j) twist[j] = Mod(static_cast<long long>(twist[j - 1]) * (1 - p), p2);
  std::vector<std::string> labels(p2 * p);
  for (int i = 0; i < p2; ++i) {
    for (int j = 0; j < p; ++j) {
      labels[p * i + j] = JoinLabel({PowerLabel("a", i), PowerLabel("b", j)});
    }
  }
  return FiniteGroup(
      "M" + std::to_string(p2 * p), GroupKind::kModularP3, {p}, p2 * p,
      [p, p2, twist](int x, int y) {
        const int i1 = x / p, j1 = x % p, i2 = y / p, j2 = y % p;
        const int i = Mod(i1 + static_cast<long long>(i2) * twist[j1], p2);
        return p * i + (j1 + j2) % p;
      },
      std::move(labels), {p, 1});
}

Extraspecial::Extraspecial(int p) : p_(p) {
  if (p % 2 == 0 || !IsPrime(p)) {
    throw std::invalid_argument("Extraspecial: p must be an odd prime");
  }
}

ExtraspecialElement Extraspecial::Mul(ExtraspecialElement x,
                                      ExtraspecialElement y) const {
  return {Mod(x.i + y.i), Mod(x.j + y.j),
          Mod(static_cast<long long>(x.k) + y.k - static_cast<long long>(x.j) * y.i)};
}

ExtraspecialElement Extraspecial::Inv(ExtraspecialElement x) const {
  return {Mod(-x.i), Mod(-x.j), Mod(-static_cast<long long>(x.k) -
                                    static_cast<long long>(x.i) * x.j)};
}

ExtraspecialElement Extraspecial::Pow(ExtraspecialElement x, long long k) const {
  ExtraspecialElement base = k < 0 ? Inv(x) : x;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  ExtraspecialElement result;
  while (e > 0) {
    if (e & 1) result = Mul(result, base);
    base = Mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteGroup ExtraspecialP3(int p) {
  const Extraspecial arith(p);
  const int size = arith.size();
  std::vector<std::string> labels(size);
  for (int x = 0; x < size; ++x) {
    const auto e = arith.Element(x);
    labels[x] = JoinLabel(
        {PowerLabel("a", e.i), PowerLabel("b", e.j), PowerLabel("c", e.k)});
  }
  return FiniteGroup(
      "E" + std::to_string(size), GroupKind::kExtraspecialP3, {p}, size,
      [arith](int x, int y) {
        return arith.Index(arith.Mul(arith.Element(x), arith.Element(y)));
      },
      std::move(labels), {arith.Index(Extraspecial::a()), arith.Index(Extraspecial::b())});
}

// ---------------------------------------------------------------------------

ConnectionSet::ConnectionSet(const FiniteGroup& group, std::vector<int> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (const int x : members_) {
    if (x < 0 || x >= group.size()) {
      throw std::invalid_argument("ConnectionSet: element out of range");
    }
    if (x == group.identity()) {
      throw std::invalid_argument("ConnectionSet: contains the identity");
    }
  }
  for (const int x : members_) {
    if (!Contains(group.Inv(x))) {
      throw std::invalid_argument("ConnectionSet: not closed under inversion");
    }
  }
}

bool ConnectionSet::Contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ConnectionSet::IsPowerClosed(const FiniteGroup& group) const {
  for (const int s : members_) {
    for (const int y : CyclicStar(group, s)) {
      if (!Contains(y)) return false;
    }
  }
  return true;
}

std::vector<Perm> RightRegular(const FiniteGroup& group) {
  std::vector<Perm> result;
  result.reserve(group.size());
  std::vector<int> images(group.size());
  for (int g = 0; g < group.size(); ++g) {
    for (int x = 0; x < group.size(); ++x) images[x] = group.Mul(x, g);
    result.emplace_back(images);
  }
  return result;
}

std::vector<Perm> RightRegularGenerators(const FiniteGroup& group) {
  std::vector<Perm> result;
  std::vector<int> images(group.size());
  for (const int g : group.generators()) {
    for (int x = 0; x < group.size(); ++x) images[x] = group.Mul(x, g);
    result.emplace_back(images);
  }
  return result;
}

std::vector<int> ProductSet(const FiniteGroup& group, const ConnectionSet& s) {
  std::vector<bool> in(group.size(), false);
  for (const int x : s.members()) {
    for (const int y : s.members()) in[group.Mul(x, y)] = true;
  }
  std::vector<int> result;
  for (int z = 0; z < group.size(); ++z) {
    if (in[z]) result.push_back(z);
  }
  return result;
}

std::vector<int> CyclicStar(const FiniteGroup& group, int x) {
  std::vector<int> result;
  for (int y = x; y != group.identity(); y = group.Mul(y, x)) result.push_back(y);
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// Automorphisms

GroupAutomorphism Compose(const GroupAutomorphism& alpha,
                          const GroupAutomorphism& beta) {
  GroupAutomorphism result;
  result.image.resize(alpha.image.size());
  for (std::size_t x = 0; x < alpha.image.size(); ++x) {
    result.image[x] = beta.image[alpha.image[x]];
  }
  return result;
}

bool IsAutomorphism(const FiniteGroup& group, const GroupAutomorphism& alpha) {
  const int n = group.size();
  if (static_cast<int>(alpha.image.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (const int y : alpha.image) {
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (alpha(group.Mul(x, y)) != group.Mul(alpha(x), alpha(y))) return false;
    }
  }
  return true;
}

Perm ToPerm(const GroupAutomorphism& alpha) { return Perm(alpha.image); }

namespace {

void RequireExtraspecial(const FiniteGroup& e, const char* who) {
  if (e.kind() != GroupKind::kExtraspecialP3) {
    throw std::invalid_argument(std::string(who) + ": group is not E(p^3)");
  }
}

// Table of the automorphism a -> x, b -> y; no generation check.
GroupAutomorphism SigmaTable(const Extraspecial& arith, ExtraspecialElement x,
                             ExtraspecialElement y) {
  const ExtraspecialElement cx =
      arith.Mul(arith.Mul(arith.Inv(x), arith.Inv(y)), arith.Mul(x, y));
  std::vector<ExtraspecialElement> xp(arith.p()), yp(arith.p()), cp(arith.p());
  for (int t = 0; t < arith.p(); ++t) {
    xp[t] = arith.Pow(x, t);
    yp[t] = arith.Pow(y, t);
    cp[t] = arith.Pow(cx, t);
  }
  GroupAutomorphism alpha;
  alpha.image.resize(arith.size());
  for (int idx = 0; idx < arith.size(); ++idx) {
    const auto e = arith.Element(idx);
    alpha.image[idx] = arith.Index(arith.Mul(arith.Mul(xp[e.i], yp[e.j]), cp[e.k]));
  }
  return alpha;
}

// <x, y> = E(p^3) iff the images in E/C are linearly independent, C being
// the Frattini subgroup.
bool IndependentModCenter(const Extraspecial& arith, ExtraspecialElement x,
                          ExtraspecialElement y) {
  return Mod(static_cast<long long>(x.i) * y.j - static_cast<long long>(x.j) * y.i,
             arith.p()) != 0;
}

void ForEachCyclic(const FiniteGroup& group,
                   const std::function<void(const GroupAutomorphism&)>& visit) {
  const int n = group.size();
  for (int k = 1; k <= std::max(1, n - 1); ++k) {
    if (std::gcd(k, n) != 1) continue;
    GroupAutomorphism alpha;
    alpha.image.resize(n);
    for (int x = 0; x < n; ++x) alpha.image[x] = static_cast<int>((1LL * k * x) % n);
    visit(alpha);
  }
}

void ForEachElementaryAbelian(
    const FiniteGroup& group,
    const std::function<void(const GroupAutomorphism&)>& visit) {
  const int p = group.params()[0];
  const int r = group.params()[1];
  const int n = group.size();
  // image rows chosen one at a time; span tracks the subgroup they generate.
  std::vector<int> rows(r);
  std::function<void(int, const std::vector<int>&)> choose =
      [&](int t, const std::vector<int>& span) {
        if (t == r) {
          GroupAutomorphism alpha;
          alpha.image.resize(n);
          for (int x = 0; x < n; ++x) {
            int y = group.identity();
            int rest = x;
            for (int u = r - 1; u >= 0; --u) {
              y = group.Mul(y, group.Pow(rows[u], rest % p));
              rest /= p;
            }
            alpha.image[x] = y;
          }
          visit(alpha);
          return;
        }
        std::vector<bool> in(n, false);
        for (const int s : span) in[s] = true;
        for (int v = 0; v < n; ++v) {
          if (in[v]) continue;
          rows[t] = v;
          std::vector<int> next;
          next.reserve(span.size() * p);
          for (const int s : span) {
            for (int k = 0; k < p; ++k) next.push_back(group.Mul(s, group.Pow(v, k)));
          }
          choose(t + 1, next);
        }
      };
  choose(0, {group.identity()});
}

void ForEachExtraspecial(const FiniteGroup& e,
                         const std::function<void(const GroupAutomorphism&)>& visit) {
  const Extraspecial arith(e.params()[0]);
  for (int xi = 0; xi < arith.size(); ++xi) {
    const auto x = arith.Element(xi);
    for (int yi = 0; yi < arith.size(); ++yi) {
      const auto y = arith.Element(yi);
      if (!IndependentModCenter(arith, x, y)) continue;
      visit(SigmaTable(arith, x, y));
    }
  }
}

// Generator-image enumeration for groups with a short generating set.
void ForEachByGeneratorImages(
    const FiniteGroup& group,
    const std::function<void(const GroupAutomorphism&)>& visit) {
  const int n = group.size();
  const std::vector<int>& gens = group.generators();
  const int k = static_cast<int>(gens.size());
  if (group.Closure(gens).size() != static_cast<std::size_t>(n)) {
    throw std::logic_error("recorded generators do not generate the group");
  }
  // BFS words: element = parent * gens[via].
  std::vector<int> parent(n, -1), via(n, -1), order = {group.identity()};
  std::vector<bool> seen(n, false);
  seen[group.identity()] = true;
  for (std::size_t t = 0; t < order.size(); ++t) {
    for (int g = 0; g < k; ++g) {
      const int y = group.Mul(order[t], gens[g]);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = order[t];
        via[y] = g;
        order.push_back(y);
      }
    }
  }
  std::vector<std::vector<int>> candidates(k);
  for (int g = 0; g < k; ++g) {
    const int ord = group.ElementOrder(gens[g]);
    for (int x = 0; x < n; ++x) {
      if (group.ElementOrder(x) == ord) candidates[g].push_back(x);
    }
  }
  std::vector<int> choice(k);
  std::function<void(int)> assign = [&](int g) {
    if (g < k) {
      for (const int x : candidates[g]) {
        choice[g] = x;
        assign(g + 1);
      }
      return;
    }
    GroupAutomorphism alpha;
    alpha.image.assign(n, -1);
    alpha.image[group.identity()] = group.identity();
    std::vector<bool> hit(n, false);
    hit[group.identity()] = true;
    for (std::size_t t = 1; t < order.size(); ++t) {
      const int x = order[t];
      const int y = group.Mul(alpha.image[parent[x]], choice[via[x]]);
      if (hit[y]) return;
      hit[y] = true;
      alpha.image[x] = y;
    }
    for (int x = 0; x < n; ++x) {
      for (int g = 0; g < k; ++g) {
        if (alpha(group.Mul(x, gens[g])) != group.Mul(alpha(x), choice[g])) return;
      }
    }
    visit(alpha);
  };
  assign(0);
}

}  // namespace

GroupAutomorphism SigmaXY(const FiniteGroup& e, int x, int y) {
  RequireExtraspecial(e, "SigmaXY");
  const int pair[] = {x, y};
  if (x < 0 || y < 0 || x >= e.size() || y >= e.size() ||
      e.Closure(pair).size() != static_cast<std::size_t>(e.size())) {
    throw std::invalid_argument("SigmaXY: x and y do not generate E(p^3)");
  }
  const Extraspecial arith(e.params()[0]);
  return SigmaTable(arith, arith.Element(x), arith.Element(y));
}

void ForEachAutomorphism(const FiniteGroup& group,
                         const std::function<void(const GroupAutomorphism&)>& visit) {
  switch (group.kind()) {
    case GroupKind::kCyclic:
      ForEachCyclic(group, visit);
      return;
    case GroupKind::kElementaryAbelian:
      ForEachElementaryAbelian(group, visit);
      return;
    case GroupKind::kExtraspecialP3:
      ForEachExtraspecial(group, visit);
      return;
    case GroupKind::kDirectProduct:
    case GroupKind::kDihedral8:
    case GroupKind::kQuaternion8:
    case GroupKind::kModularP3:
      if (group.size() > 343) {
        throw std::invalid_argument("ForEachAutomorphism: group too large");
      }
      ForEachByGeneratorImages(group, visit);
      return;
  }
  throw std::invalid_argument("ForEachAutomorphism: unsupported group");
}

std::vector<GroupAutomorphism> AutomorphismGroup(const FiniteGroup& group) {
  std::vector<GroupAutomorphism> result;
  ForEachAutomorphism(group, [&](const GroupAutomorphism& alpha) {
    result.push_back(alpha);
  });
  return result;
}

std::vector<GroupAutomorphism> AutStabSet(const FiniteGroup& group,
                                          const ConnectionSet& s) {
  std::vector<GroupAutomorphism> result;
  auto keeps_set = [&](const GroupAutomorphism& alpha) {
    for (const int x : s.members()) {
      if (!s.Contains(alpha(x))) return false;
    }
    return true;
  };
  if (group.kind() == GroupKind::kExtraspecialP3) {
    // An automorphism is fixed by the images of a and b; when a (or b) lies
    // in S its image must too.
    const Extraspecial arith(group.params()[0]);
    auto candidates = [&](ExtraspecialElement g) {
      std::vector<int> out;
      if (s.Contains(arith.Index(g))) return s.members();
      for (int x = 0; x < arith.size(); ++x) out.push_back(x);
      return out;
    };
    const auto xs = candidates(Extraspecial::a());
    const auto ys = candidates(Extraspecial::b());
    for (const int xi : xs) {
      for (const int yi : ys) {
        const auto x = arith.Element(xi);
        const auto y = arith.Element(yi);
        if (!IndependentModCenter(arith, x, y)) continue;
        GroupAutomorphism alpha = SigmaTable(arith, x, y);
        if (keeps_set(alpha)) result.push_back(std::move(alpha));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }
  ForEachAutomorphism(group, [&](const GroupAutomorphism& alpha) {
    if (keeps_set(alpha)) result.push_back(alpha);
  });
  std::sort(result.begin(), result.end());
  return result;
}

int Mat2::Det() const {
  return Mod(static_cast<long long>(m[0][0]) * m[1][1] -
                 static_cast<long long>(m[0][1]) * m[1][0],
             p);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 z;
  z.p = x.p;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      z.m[r][c] = Mod(static_cast<long long>(x.m[r][0]) * y.m[0][c] +
                          static_cast<long long>(x.m[r][1]) * y.m[1][c],
                      x.p);
    }
  }
  return z;
}

Mat2 InducedMatrix(const FiniteGroup& e, const GroupAutomorphism& alpha) {
  RequireExtraspecial(e, "InducedMatrix");
  const Extraspecial arith(e.params()[0]);
  const auto ia = arith.Element(alpha(arith.Index(Extraspecial::a())));
  const auto ib = arith.Element(alpha(arith.Index(Extraspecial::b())));
  Mat2 m;
  m.p = arith.p();
  m.m = {{{ia.i, ia.j}, {ib.i, ib.j}}};
  return m;
}

std::vector<GroupAutomorphism> DetIndexSubgroup(
    const FiniteGroup& e, const std::vector<GroupAutomorphism>& aut_es, int m) {
  RequireExtraspecial(e, "DetIndexSubgroup");
  const int p = e.params()[0];
  if (m < 1 || (p - 1) % m != 0) {
    throw std::invalid_argument("DetIndexSubgroup: m does not divide p - 1");
  }
  std::set<Mat2> matrices;
  for (const auto& alpha : aut_es) matrices.insert(InducedMatrix(e, alpha));
  if (matrices.size() != aut_es.size()) {
    throw std::invalid_argument("DetIndexSubgroup: induced matrix map not injective");
  }
  std::vector<bool> mth_power(p, false);
  for (int x = 1; x < p; ++x) {
    long long y = 1;
    for (int t = 0; t < m; ++t) y = y * x % p;
    mth_power[y] = true;
  }
  std::vector<GroupAutomorphism> result;
  for (const auto& alpha : aut_es) {
    if (mth_power[InducedMatrix(e, alpha).Det()]) result.push_back(alpha);
  }
  return result;
}

std::vector<GroupAutomorphism> DetOneSubgroup(
    const FiniteGroup& e, const std::vector<GroupAutomorphism>& aut_es) {
  std::vector<GroupAutomorphism> result;
  for (const auto& alpha : aut_es) {
    if (InducedMatrix(e, alpha).Det() == 1) result.push_back(alpha);
  }
  return result;
}

std::vector<std::vector<int>> AutomorphismOrbits(
    const FiniteGroup& group, const std::vector<GroupAutomorphism>& autos) {
  std::vector<Perm> perms;
  perms.reserve(autos.size());
  for (const auto& alpha : autos) perms.push_back(ToPerm(alpha));
  return Orbits(group.size(), perms);
}

namespace {

void AddStar(const FiniteGroup& g, int x, std::vector<int>& out) {
  const auto star = CyclicStar(g, x);
  out.insert(out.end(), star.begin(), star.end());
}

}  // namespace

ConnectionSet ExtraspecialSetA(const FiniteGroup& e) {
  RequireExtraspecial(e, "ExtraspecialSetA");
  const Extraspecial arith(e.params()[0]);
  std::vector<int> members;
  AddStar(e, arith.Index(Extraspecial::a()), members);
  AddStar(e, arith.Index(Extraspecial::b()), members);
  return ConnectionSet(e, members);
}

ConnectionSet ExtraspecialSetB(const FiniteGroup& e) {
  RequireExtraspecial(e, "ExtraspecialSetB");
  const Extraspecial arith(e.params()[0]);
  std::vector<int> members;
  AddStar(e, arith.Index(Extraspecial::b()), members);
  for (int i = 0; i < arith.p(); ++i) {
    const auto bi = arith.Pow(Extraspecial::b(), i);
    AddStar(e, arith.Index(arith.Mul(arith.Mul(bi, Extraspecial::a()), bi)), members);
  }
  return ConnectionSet(e, members);
}

ConnectionSet ExtraspecialSetBAlt(const FiniteGroup& e) {
  RequireExtraspecial(e, "ExtraspecialSetBAlt");
  const Extraspecial arith(e.params()[0]);
  std::vector<int> members;
  AddStar(e, arith.Index(Extraspecial::a()), members);
  for (int i = 0; i < arith.p(); ++i) {
    const auto ai = arith.Pow(Extraspecial::a(), i);
    AddStar(e, arith.Index(arith.Mul(arith.Mul(ai, Extraspecial::b()), ai)), members);
  }
  return ConnectionSet(e, members);
}

}  // namespace geodex
