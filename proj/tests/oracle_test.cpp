//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "polyiso/oracle.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "polyiso/builtin.hpp"
#include "test_support.hpp"

namespace polyiso {
namespace {
using testing::complete_graph;
using testing::path_graph;

TEST(OracleTest, BruteForceIsomorphism) {
  const Graph g = worked_example_g(), h = worked_example_h();
  const auto p = brute_force_isomorphism(g, h);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(verify_isomorphism(g, h, *p));

  EXPECT_FALSE(brute_force_isomorphism(complete_graph(3), path_graph(3)));
  EXPECT_EQ(brute_force_isomorphism(g, g), Permutation::identity(6));
}

TEST(OracleTest, LexicographicallyFirst) {
  const Graph g = worked_example_g(), h = worked_example_h();
  const auto all = all_isomorphisms(g, h);
  ASSERT_EQ(all.size(), 16u);
  EXPECT_EQ(*brute_force_isomorphism(g, h), *std::min_element(all.begin(),
                                                              all.end()));
  for (const auto &p: all)
    EXPECT_TRUE(verify_isomorphism(g, h, p));
}

TEST(OracleTest, RefusesAboveLimit) {
  const Graph big(11);
  EXPECT_THROW(brute_force_isomorphism(big, big), OracleLimitError);
  EXPECT_THROW(automorphism_group_size(big), OracleLimitError);
  EXPECT_NO_THROW(brute_force_isomorphism(big, big, 11));
}

TEST(OracleTest, AutomorphismsAndOrbits) {
  const Graph g = worked_example_g();
  EXPECT_EQ(automorphism_group_size(g), 16u);
  const auto orb = orbits(g);
  ASSERT_EQ(orb.size(), 2u);
  EXPECT_EQ(orb[0], (std::vector<Vertex> {0, 5}));
  EXPECT_EQ(orb[1], (std::vector<Vertex> {1, 2, 3, 4}));

  EXPECT_EQ(automorphism_group_size(complete_graph(3)), 6u);
  EXPECT_EQ(orbits(complete_graph(3)).size(), 1u);

  EXPECT_EQ(automorphism_group_size(path_graph(3)), 2u);
  const auto p3 = orbits(path_graph(3));
  EXPECT_EQ(p3, (std::vector<std::vector<Vertex>> {{0, 2}, {1}}));
}

TEST(OracleTest, WeightedDiagonalBreaksSymmetry) {
  IntMatrix m = complete_graph(3).adjacency();
  m(0, 0) = 5;
  EXPECT_EQ(automorphism_group_size(m), 2u);
  m(1, 1) = 7;
  EXPECT_EQ(automorphism_group_size(m), 1u);
}

TEST(OracleTest, GroupOrderDividesFactorialAndOrbitsRespectDegree) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 7;
    const Graph g = testing::random_graph(rng, n, 0.5);
    std::uint64_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k)
      fact *= k;
    EXPECT_EQ(fact % automorphism_group_size(g), 0u);
    for (const auto &orbit: orbits(g))
      for (Vertex v: orbit)
        EXPECT_EQ(g.degree(v), g.degree(orbit.front()));
  }
}

// For isomorphic g, h: {p(j) : p an isomorphism} is the orbit of p0(j) in h.
TEST(OracleTest, ImagesOfAVertexFormAnOrbit) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + t % 5;
    const Graph g = testing::random_graph(rng, n, 0.5);
    const Graph h = permuted_copy(g, testing::random_permutation(rng, n));
    const auto isos = all_isomorphisms(g, h);
    ASSERT_FALSE(isos.empty());
    const auto orb = orbits(h);
    for (Vertex j = 0; j < n; ++j) {
      std::set<Vertex> images;
      for (const auto &p: isos)
        images.insert(p(j));
      const Vertex anchor = isos.front()(j);
      const auto it = std::find_if(orb.begin(), orb.end(), [&](const auto &o) {
        return std::find(o.begin(), o.end(), anchor) != o.end();
      });
      ASSERT_NE(it, orb.end());
      EXPECT_EQ(images, std::set<Vertex>(it->begin(), it->end()));
    }
  }
}

TEST(OracleTest, BuiltinSrgsAreValidAndDistinct) {
  const Graph s = builtin_srg("shrikhande"), r = builtin_srg("rook4x4");
  EXPECT_TRUE(is_strongly_regular(s, 16, 6, 2, 2));
  EXPECT_TRUE(is_strongly_regular(r, 16, 6, 2, 2));
  EXPECT_FALSE(brute_force_isomorphism(s, r, 16).has_value());
  EXPECT_THROW(builtin_srg("petersen"), std::invalid_argument);
}

}  // namespace
}  // namespace polyiso
