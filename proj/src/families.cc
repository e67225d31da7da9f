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

#include "geodex/families.h"

#include <charconv>
#include <map>
#include <stdexcept>
#include <utility>

namespace geodex {

namespace {

struct TagInfo {
  Family family;
  const char* tag;
  int arity;  // number of integer parameters; -1 for cayley
};

constexpr TagInfo kTags[] = {
    {Family::kCycle, "cycle", 1},
    {Family::kComplete, "complete", 1},
    {Family::kCompleteBipartite, "complete_bipartite", 1},
    {Family::kCbmMinusMatching, "cbm_minus_matching", 1},
    {Family::kCompleteMultipartite, "complete_multipartite", 2},
    {Family::kHamming, "hamming", 2},
    {Family::kHamming2Complement, "hamming2_complement", 1},
    {Family::kCayley, "cayley", -1},
    {Family::kEp3FamilyA, "ep3_family_A", 1},
    {Family::kEp3FamilyB, "ep3_family_B", 1},
    {Family::kSchlafli, "schlafli", 0},
    {Family::kSchlafliComplement, "schlafli_complement", 0},
};

const std::map<std::string_view, Family>& Aliases() {
  static const auto* aliases = new std::map<std::string_view, Family>{
      {"C", Family::kCycle},
      {"K", Family::kComplete},
      {"knn", Family::kCompleteBipartite},
      {"knnm", Family::kCbmMinusMatching},
      {"kmb", Family::kCompleteMultipartite},
      {"hamming2c", Family::kHamming2Complement},
      {"ep3A", Family::kEp3FamilyA},
      {"ep3B", Family::kEp3FamilyB},
      {"schlaflic", Family::kSchlafliComplement},
  };
  return *aliases;
}

const TagInfo& Info(Family family) {
  for (const auto& info : kTags) {
    if (info.family == family) return info;
  }
  throw std::logic_error("unknown family");
}

int ParseInt(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> ParseIntList(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(ParseInt(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string JoinInts(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void CheckParams(const FamilySpec& spec) {
  const auto& q = spec.params;
  switch (spec.family) {
    case Family::kCycle:
      Require(q[0] >= 3, "cycle needs n >= 3");
      break;
    case Family::kComplete:
    case Family::kCompleteBipartite:
      Require(q[0] >= 1, "order must be positive");
      break;
    case Family::kCbmMinusMatching:
      Require(q[0] >= 2, "cbm_minus_matching needs n >= 2");
      break;
    case Family::kCompleteMultipartite:
      Require(q[0] >= 3 && q[1] >= 2, "complete_multipartite needs m >= 3, b >= 2");
      break;
    case Family::kHamming:
      Require(q[0] >= 2 && q[1] >= 2, "hamming needs d, n >= 2");
      break;
    case Family::kHamming2Complement:
      Require(q[0] >= 3, "hamming2_complement needs n >= 3");
      break;
    case Family::kEp3FamilyA:
    case Family::kEp3FamilyB:
      Require(q[0] > 2 && IsPrime(q[0]), "ep3 families need an odd prime p");
      break;
    default:
      break;
  }
}

}  // namespace

FamilySpec ParseFamilySpec(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view tag = text.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  FamilySpec spec;
  bool found = false;
  for (const auto& info : kTags) {
    if (tag == info.tag) {
      spec.family = info.family;
      found = true;
    }
  }
  if (!found) {
    const auto it = Aliases().find(tag);
    if (it == Aliases().end()) {
      throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
    }
    spec.family = it->second;
  }
  const TagInfo& info = Info(spec.family);
  if (spec.family == Family::kCayley) {
    const std::size_t second = rest.find(':');
    Require(colon != std::string_view::npos && second != std::string_view::npos,
            "cayley spec is cayley:GROUP:i,j,...");
    spec.group = std::string(rest.substr(0, second));
    spec.connection = ParseIntList(rest.substr(second + 1));
    ParseGroupSpec(spec.group);
    return spec;
  }
  spec.params = ParseIntList(rest);
  Require(static_cast<int>(spec.params.size()) == info.arity,
          std::string(info.tag) + " takes " + std::to_string(info.arity) + " parameter(s)");
  CheckParams(spec);
  return spec;
}

std::string FormatFamilySpec(const FamilySpec& spec) {
  std::string out = Info(spec.family).tag;
  if (spec.family == Family::kCayley) {
    return out + ":" + spec.group + ":" + JoinInts(spec.connection);
  }
  if (!spec.params.empty()) out += ":" + JoinInts(spec.params);
  return out;
}

std::string DisplayName(const FamilySpec& spec) {
  const auto& q = spec.params;
  auto s = [](int v) { return std::to_string(v); };
  switch (spec.family) {
    case Family::kCycle:
      return "C" + s(q[0]);
    case Family::kComplete:
      return "K" + s(q[0]);
    case Family::kCompleteBipartite:
      return "K" + s(q[0]) + "," + s(q[0]);
    case Family::kCbmMinusMatching:
      return "K" + s(q[0]) + "," + s(q[0]) + "-" + s(q[0]) + "K2";
    case Family::kCompleteMultipartite:
      return "K" + s(q[0]) + "[" + s(q[1]) + "]";
    case Family::kHamming:
      return "H(" + s(q[0]) + "," + s(q[1]) + ")";
    case Family::kHamming2Complement:
      return "H(2," + s(q[0]) + ")-complement";
    case Family::kCayley:
      return "Cay(" + spec.group + ",{" + JoinInts(spec.connection) + "})";
    case Family::kEp3FamilyA:
      return q[0] == 3 ? "G(27,4)" : "Cay(E(" + s(q[0]) + "^3),S_A)";
    case Family::kEp3FamilyB:
      return q[0] == 3 ? "G(27,8)" : "Cay(E(" + s(q[0]) + "^3),S_B)";
    case Family::kSchlafli:
      return "Schlafli";
    case Family::kSchlafliComplement:
      return "Schlafli-complement";
  }
  return "?";
}

Graph Build(const FamilySpec& spec) {
  const auto& q = spec.params;
  switch (spec.family) {
    case Family::kCycle:
      return Cycle(q[0]);
    case Family::kComplete:
      return Complete(q[0]);
    case Family::kCompleteBipartite:
      return CompleteBipartite(q[0]);
    case Family::kCbmMinusMatching:
      return CbmMinusMatching(q[0]);
    case Family::kCompleteMultipartite:
      return CompleteMultipartite(q[0], q[1]);
    case Family::kHamming:
      return Hamming(q[0], q[1]);
    case Family::kHamming2Complement:
      return Hamming2Complement(q[0]);
    case Family::kCayley: {
      const FiniteGroup g = ParseGroupSpec(spec.group);
      return Cayley(g, ConnectionSet(g, spec.connection));
    }
    case Family::kEp3FamilyA:
      return Ep3FamilyA(q[0]);
    case Family::kEp3FamilyB:
      return Ep3FamilyB(q[0]);
    case Family::kSchlafli:
      return Schlafli();
    case Family::kSchlafliComplement:
      return SchlafliComplement();
  }
  throw std::logic_error("unknown family");
}

FiniteGroup ParseGroupSpec(std::string_view text) {
  // Direct products split at the last 'x'; the factors are parsed recursively.
  if (const std::size_t x = text.rfind('x'); x != std::string_view::npos) {
    return DirectProduct(ParseGroupSpec(text.substr(0, x)), ParseGroupSpec(text.substr(x + 1)));
  }
  if (text == "D8") return Dihedral8();
  if (text == "Q8") return Quaternion8();
  Require(text.size() >= 2, "bad group spec '" + std::string(text) + "'");
  const char kind = text[0];
  const std::string_view body = text.substr(1);
  if (kind == 'Z') {
    const std::size_t caret = body.find('^');
    if (caret == std::string_view::npos) return Cyclic(ParseInt(body));
    return ElementaryAbelian(ParseInt(body.substr(0, caret)), ParseInt(body.substr(caret + 1)));
  }
  if (kind == 'E' || kind == 'M') {
    const int order = ParseInt(body);
    int p = 2;
    while (p * p * p < order) ++p;
    Require(p * p * p == order, "E/M groups need order p^3");
    return kind == 'E' ? ExtraspecialP3(p) : ModularP3(p);
  }
  throw std::invalid_argument("bad group spec '" + std::string(text) + "'");
}

Graph Cycle(int n) {
  Require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.AddEdge(i, (i + 1) % n);
  return g;
}

Graph Complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

Graph CompleteBipartite(int n) {
  Graph g(2 * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) g.AddEdge(u, n + v);
  }
  return g;
}

Graph CbmMinusMatching(int n) {
  Graph g(2 * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) g.AddEdge(u, n + v);
    }
  }
  return g;
}

Graph CompleteMultipartite(int m, int b) {
  Require(m >= 3 && b >= 2, "complete_multipartite needs m >= 3, b >= 2");
  Graph g(m * b);
  for (int u = 0; u < m * b; ++u) {
    for (int v = u + 1; v < m * b; ++v) {
      if (u / b != v / b) g.AddEdge(u, v);
    }
  }
  return g;
}

Graph Hamming(int d, int n) {
  Require(d >= 2 && n >= 2, "hamming needs d, n >= 2");
  int size = 1;
  for (int i = 0; i < d; ++i) {
    size *= n;
    Require(size <= kMaxDegree, "hamming graph too large");
  }
  Graph g(size);
  for (int u = 0; u < size; ++u) {
    for (int v = u + 1; v < size; ++v) {
      int differ = 0;
      for (int x = u, y = v, i = 0; i < d; ++i, x /= n, y /= n) differ += (x % n) != (y % n);
      if (differ == 1) g.AddEdge(u, v);
    }
  }
  return g;
}

Graph Hamming2Complement(int n) {
  Require(n >= 3, "hamming2_complement needs n >= 3");
  return Complement(Hamming(2, n));
}

Graph Cayley(const FiniteGroup& group, const ConnectionSet& s) {
  Graph g(group.size());
  for (int i = 0; i < group.size(); ++i) {
    for (const int x : s.members()) g.AddEdge(i, group.Mul(x, i));
  }
  return g;
}

Graph Ep3FamilyA(int p) {
  const FiniteGroup e = ExtraspecialP3(p);
  return Cayley(e, ExtraspecialSetA(e));
}

Graph Ep3FamilyB(int p) {
  const FiniteGroup e = ExtraspecialP3(p);
  return Cayley(e, ExtraspecialSetB(e));
}

Graph SchlafliComplement() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  }
  auto a = [](int i) { return i; };
  auto b = [](int i) { return 6 + i; };
  Graph g(27);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i != j) g.AddEdge(a(i), b(j));
    }
  }
  for (int k = 0; k < 15; ++k) {
    const auto [i, j] = pairs[k];
    for (const int t : {i, j}) {
      g.AddEdge(a(t), 12 + k);
      g.AddEdge(b(t), 12 + k);
    }
    for (int l = k + 1; l < 15; ++l) {
      const auto [x, y] = pairs[l];
      if (x != i && x != j && y != i && y != j) g.AddEdge(12 + k, 12 + l);
    }
  }
  return g;
}

Graph Schlafli() { return Complement(SchlafliComplement()); }

std::vector<FamilySpec> Catalog(int n) {
  std::vector<FamilySpec> out;
  auto add = [&](Family f, std::vector<int> params) {
    out.push_back(FamilySpec{f, std::move(params), {}, {}});
  };
  if (n >= 3) add(Family::kCycle, {n});
  if (n >= 1) add(Family::kComplete, {n});
  for (int q = 2; q * q <= n; ++q) {
    long long size = q;
    int d = 1;
    for (; size < n; ++d) size *= q;
    if (size == n) add(Family::kHamming, {d, q});
  }
  for (int q = 3; q * q <= n; ++q) {
    if (q * q == n) add(Family::kHamming2Complement, {q});
  }
  if (n % 2 == 0) {
    add(Family::kCompleteBipartite, {n / 2});
    if (n / 2 >= 2) add(Family::kCbmMinusMatching, {n / 2});
  }
  for (int m = 3; m * 2 <= n; ++m) {
    if (n % m == 0) add(Family::kCompleteMultipartite, {m, n / m});
  }
  for (int p = 3; p * p * p <= n; ++p) {
    if (p * p * p == n && IsPrime(p)) {
      add(Family::kEp3FamilyA, {p});
      add(Family::kEp3FamilyB, {p});
    }
  }
  if (n == 27) {
    add(Family::kSchlafli, {});
    add(Family::kSchlafliComplement, {});
  }
  return out;
}

}  // namespace geodex
