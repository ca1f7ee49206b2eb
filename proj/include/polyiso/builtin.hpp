//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyiso/graph.hpp"

namespace polyiso {

/// Six-vertex worked example: two degree-4 hubs (1 and 6) joined to the
/// degree-3 vertices 2..5, plus the edges 2-3 and 4-5.
inline Graph worked_example_g() {
  return Graph::from_edges_1based(6,
                                  {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 2},
                                   {6, 3}, {6, 4}, {6, 5}, {2, 3}, {4, 5}},
                                  "example-g");
}

/// Relabelled copy of worked_example_g(): hubs 3 and 4, rim edges 1-2, 5-6.
inline Graph worked_example_h() {
  return Graph::from_edges_1based(6,
                                  {{3, 1}, {3, 2}, {3, 5}, {3, 6}, {4, 1},
                                   {4, 2}, {4, 5}, {4, 6}, {1, 2}, {5, 6}},
                                  "example-h");
}

/// Checks the SRG(v, k, lambda, mu) parameters by direct counting.
inline bool is_strongly_regular(const Graph &g, std::size_t v, std::size_t k,
                                std::size_t lambda, std::size_t mu) {
  if (g.size() != v)
    return false;
  for (Vertex a = 0; a < v; ++a)
    if (g.degree(a) != k)
      return false;
  for (Vertex a = 0; a < v; ++a) {
    for (Vertex b = a + 1; b < v; ++b) {
      std::size_t common = 0;
      for (Vertex c = 0; c < v; ++c)
        common += g.adjacent(a, c) && g.adjacent(b, c);
      if (common != (g.adjacent(a, b) ? lambda : mu))
        return false;
    }
  }
  return true;
}

/// Built-in SRG(16,6,2,2) instances: "shrikhande" (Cayley graph of Z4 x Z4
/// on {±(1,0), ±(0,1), ±(1,1)}) and "rook4x4" (the 4x4 rook's graph).
inline Graph builtin_srg(std::string_view name) {
  Graph g;
  if (name == "shrikhande") {
    g = Graph::from_edges_1based(
        16,
        {{1, 2},   {1, 4},   {1, 5},   {1, 6},   {1, 13},  {1, 16},
         {2, 3},   {2, 6},   {2, 7},   {2, 13},  {2, 14},  {3, 4},
         {3, 7},   {3, 8},   {3, 14},  {3, 15},  {4, 5},   {4, 8},
         {4, 15},  {4, 16},  {5, 6},   {5, 8},   {5, 9},   {5, 10},
         {6, 7},   {6, 10},  {6, 11},  {7, 8},   {7, 11},  {7, 12},
         {8, 9},   {8, 12},  {9, 10},  {9, 12},  {9, 13},  {9, 14},
         {10, 11}, {10, 14}, {10, 15}, {11, 12}, {11, 15}, {11, 16},
         {12, 13}, {12, 16}, {13, 14}, {13, 16}, {14, 15}, {15, 16}},
        "shrikhande");
  } else if (name == "rook4x4") {
    g = Graph::from_edges_1based(
        16,
        {{1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 9},   {1, 13},
         {2, 3},   {2, 4},   {2, 6},   {2, 10},  {2, 14},  {3, 4},
         {3, 7},   {3, 11},  {3, 15},  {4, 8},   {4, 12},  {4, 16},
         {5, 6},   {5, 7},   {5, 8},   {5, 9},   {5, 13},  {6, 7},
         {6, 8},   {6, 10},  {6, 14},  {7, 8},   {7, 11},  {7, 15},
         {8, 12},  {8, 16},  {9, 10},  {9, 11},  {9, 12},  {9, 13},
         {10, 11}, {10, 12}, {10, 14}, {11, 12}, {11, 15}, {12, 16},
         {13, 14}, {13, 15}, {13, 16}, {14, 15}, {14, 16}, {15, 16}},
        "rook4x4");
  } else {
    throw std::invalid_argument("unknown built-in graph '" + std::string(name)
                                + "'");
  }
  if (!is_strongly_regular(g, 16, 6, 2, 2))
    throw std::logic_error("built-in graph failed SRG(16,6,2,2) validation");
  return g;
}

/// Resolves "example-g", "example-h", "shrikhande", "rook4x4".
inline Graph builtin_graph(std::string_view name) {
  if (name == "example-g")
    return worked_example_g();
  if (name == "example-h")
    return worked_example_h();
  return builtin_srg(name);
}

}  // namespace polyiso
