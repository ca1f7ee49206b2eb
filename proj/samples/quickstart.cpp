//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Decide isomorphism of the six-vertex example pair and a strongly regular
// pair, then print the coefficient table of a triangle.

#include <iostream>

#include "polyiso/builtin.hpp"
#include "polyiso/match.hpp"
#include "polyiso/poly.hpp"

int main() {
  using namespace polyiso;

  MatchConfig cfg;
  cfg.seed = 1;
  const MatchResult r =
      recursive_match(worked_example_g(), worked_example_h(), cfg);
  std::cout << "example: " << to_string(r.verdict);
  if (r.phi) {
    std::cout << ", phi =";
    for (Vertex v: r.phi->to_1based())
      std::cout << ' ' << v;
  }
  std::cout << '\n';

  const MatchResult s = recursive_match(builtin_srg("shrikhande"),
                                        builtin_srg("rook4x4"), cfg);
  std::cout << "shrikhande vs rook4x4: " << to_string(s.verdict) << " after "
            << s.stats.nodes << " nodes\n";

  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  std::cout << "det(A(K3) + X) = " << to_string(expand_eta(k3.adjacency())) << '\n';
}
