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

// Edge-list text and graph6.
//
// Edge list: a header line "n m" followed by m lines "u v" with u < v, in
// ascending order. The reader accepts any edge order but rejects loops,
// out-of-range vertices, repeated edges and a wrong edge count.

#ifndef GEODEX_GRAPH_IO_H_
#define GEODEX_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "geodex/graph.h"

namespace geodex {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string WriteEdgeList(const Graph& g);
// Throws FormatError.
Graph ReadEdgeList(std::string_view text);

// Single line, no trailing newline.
std::string WriteGraph6(const Graph& g);
// Throws FormatError. Surrounding whitespace and a ">>graph6<<" header are
// tolerated.
Graph ReadGraph6(std::string_view text);

// graph6 if the first non-blank character is not a digit, else edge list.
Graph ReadGraphAuto(std::string_view text);

}  // namespace geodex

#endif  // GEODEX_GRAPH_IO_H_
