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

#include "geodex/graph_io.h"

#include <cctype>
#include <sstream>

namespace geodex {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string WriteEdgeList(const Graph& g) {
  const auto edges = g.Edges();
  std::string out = std::to_string(g.n()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph ReadEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0 || n > kMaxDegree) {
    throw FormatError("edge list: malformed header");
  }
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    long long u, v;
    if (!(in >> u >> v)) throw FormatError("edge list: too few edge lines");
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge list: vertex out of range");
    if (u == v) throw FormatError("edge list: loop");
    if (g.Adjacent(static_cast<int>(u), static_cast<int>(v))) {
      throw FormatError("edge list: repeated edge");
    }
    g.AddEdge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw FormatError("edge list: trailing data");
  return g;
}

std::string WriteGraph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.Adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph ReadGraph6(std::string_view text) {
  text = Trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  for (const char ch : text) {
    if (ch < 63 || ch > 126) throw FormatError("graph6: character out of range");
  }
  if (text.empty()) throw FormatError("graph6: empty input");
  std::size_t at = 0;
  int n;
  if (text[0] != 126) {
    n = text[0] - 63;
    at = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw FormatError("graph6: unsupported size field");
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    at = 4;
  }
  if (n > kMaxDegree) throw FormatError("graph6: graph too large");
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  if (static_cast<long long>(text.size() - at) != (bits + 5) / 6) {
    throw FormatError("graph6: wrong length");
  }
  Graph g(n);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[at + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.AddEdge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int chunk = text[at + k / 6] - 63;
    if (chunk & ((1 << (6 - k % 6)) - 1)) throw FormatError("graph6: nonzero padding");
  }
  return g;
}

Graph ReadGraphAuto(std::string_view text) {
  const std::string_view t = Trim(text);
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.front()))) return ReadEdgeList(t);
  return ReadGraph6(t);
}

}  // namespace geodex
