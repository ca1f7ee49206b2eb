//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyiso/builtin.hpp"
#include "polyiso/graph.hpp"
#include "polyiso/oracle.hpp"
#include "polyiso/rng.hpp"

namespace polyiso {

enum class GroundTruth { kIsomorphic, kNotIsomorphic, kUnknown };

inline const char *to_string(GroundTruth t) {
  switch (t) {
    case GroundTruth::kIsomorphic:
      return "iso";
    case GroundTruth::kNotIsomorphic:
      return "non-iso";
    case GroundTruth::kUnknown:
      return "unknown";
  }
  return "?";
}

inline GroundTruth ground_truth_from_string(const std::string &s) {
  if (s == "iso")
    return GroundTruth::kIsomorphic;
  if (s == "non-iso")
    return GroundTruth::kNotIsomorphic;
  if (s == "unknown")
    return GroundTruth::kUnknown;
  throw std::invalid_argument("unknown ground truth '" + s + "'");
}

struct CorpusEntry {
  std::string name;
  Graph g, h;
  GroundTruth truth = GroundTruth::kUnknown;
  std::optional<Permutation> witness;
  std::string provenance;
};

using Corpus = std::vector<CorpusEntry>;

/// Throws unless every witness maps g onto h.
inline void check_witnesses(const Corpus &corpus) {
  for (const auto &e: corpus)
    if (e.witness && !verify_isomorphism(e.g, e.h, *e.witness))
      throw std::invalid_argument("corpus entry '" + e.name
                                  + "': witness is not an isomorphism");
}

namespace detail {
  inline double unit(CounterRng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }

  inline Graph random_graph(CounterRng &rng, std::size_t n, double p) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit(rng) < p)
          g.add_edge(u, v);
    return g;
  }

  inline Permutation random_permutation(CounterRng &rng, std::size_t n) {
    std::vector<Vertex> m(n);
    for (Vertex i = 0; i < n; ++i)
      m[i] = i;
    for (std::size_t i = n; i > 1; --i)
      std::swap(m[i - 1], m[rng.uniform(i)]);
    return Permutation(std::move(m));
  }

  /// Degree-preserving rewiring: replaces edges ab, cd by ac, bd when both
  /// new edges are absent. Returns the number of successful swaps.
  inline std::size_t double_edge_swaps(CounterRng &rng, Graph &g,
                                       std::size_t swaps) {
    std::size_t done = 0;
    for (std::size_t attempt = 0; attempt < 20 * swaps && done < swaps;
         ++attempt) {
      const auto edges = g.edges();
      if (edges.size() < 2)
        return done;
      auto [a, b] = edges[rng.uniform(edges.size())];
      auto [c, d] = edges[rng.uniform(edges.size())];
      if (rng() & 1)
        std::swap(c, d);
      if (a == c || a == d || b == c || b == d || g.adjacent(a, c)
          || g.adjacent(b, d))
        continue;
      g.remove_edge(a, b);
      g.remove_edge(c, d);
      g.add_edge(a, c);
      g.add_edge(b, d);
      ++done;
    }
    return done;
  }
}  // namespace detail

/// Random pairs with equal degree sequences. The first
/// round(count * fraction_isomorphic) entries are (g, p(g)) with witness p;
/// the rest are (g, p(g')) for a degree-preserving rewiring g' of g, with
/// ground truth from the brute-force oracle when n <= oracle_limit.
inline Corpus generate_random_pairs(std::size_t n, std::size_t count,
                                    double edge_probability,
                                    double fraction_isomorphic,
                                    std::uint64_t seed,
                                    std::size_t oracle_limit = kDefaultOracleLimit) {
  if (!(edge_probability > 0 && edge_probability < 1))
    throw std::invalid_argument("generate_random_pairs: p must lie in (0, 1)");
  if (!(fraction_isomorphic >= 0 && fraction_isomorphic <= 1))
    throw std::invalid_argument(
        "generate_random_pairs: fraction must lie in [0, 1]");
  if (n == 0)
    throw std::invalid_argument("generate_random_pairs: n must be >= 1");

  const auto iso_count =
      static_cast<std::size_t>(std::llround(count * fraction_isomorphic));
  const bool oracle = n <= oracle_limit;
  Corpus corpus;
  for (std::size_t k = 0; k < count; ++k) {
    CounterRng rng(seed, k);
    const std::string name = "random-n" + std::to_string(n) + "-s"
                             + std::to_string(seed) + "-" + std::to_string(k);
    CorpusEntry e {name, Graph(n), Graph(n), GroundTruth::kUnknown, {}, ""};
    if (k < iso_count) {
      e.g = detail::random_graph(rng, n, edge_probability);
      e.witness = detail::random_permutation(rng, n);
      e.h = permuted_copy(e.g, *e.witness);
      e.truth = GroundTruth::kIsomorphic;
      e.provenance = "random permuted copy";
    } else {
      // A few tries for a non-isomorphic rewiring; tiny n may have none.
      for (int attempt = 0; attempt < 32; ++attempt) {
        e.g = detail::random_graph(rng, n, edge_probability);
        Graph r = e.g;
        detail::double_edge_swaps(rng, r, std::max<std::size_t>(1, n / 2));
        e.h = permuted_copy(r, detail::random_permutation(rng, n));
        if (!oracle)
          break;
        if (!brute_force_isomorphism(e.g, e.h, oracle_limit))
          break;
      }
      e.provenance = "degree-preserving rewiring";
      if (oracle) {
        e.witness = brute_force_isomorphism(e.g, e.h, oracle_limit);
        e.truth = e.witness ? GroundTruth::kIsomorphic
                            : GroundTruth::kNotIsomorphic;
      }
    }
    e.g.set_name(name + "-g");
    e.h.set_name(name + "-h");
    corpus.push_back(std::move(e));
  }
  return corpus;
}

/// Permuted copies of both built-in strongly regular graphs plus the
/// non-isomorphic Shrikhande / rook pair.
inline Corpus srg_corpus(std::size_t permuted_count, std::uint64_t seed) {
  Corpus corpus;
  const Graph s = builtin_srg("shrikhande"), r = builtin_srg("rook4x4");
  for (std::size_t k = 0; k < permuted_count; ++k) {
    CounterRng rng(seed, k);
    const Graph &base = k % 2 == 0 ? s : r;
    const Permutation p = detail::random_permutation(rng, base.size());
    corpus.push_back({std::string(k % 2 == 0 ? "shrikhande" : "rook4x4")
                          + "-permuted-" + std::to_string(k),
                      base, permuted_copy(base, p), GroundTruth::kIsomorphic, p,
                      "built-in SRG(16,6,2,2), permuted"});
  }
  corpus.push_back({"shrikhande-vs-rook4x4", s, r, GroundTruth::kNotIsomorphic,
                    std::nullopt, "built-in SRG(16,6,2,2) pair"});
  return corpus;
}

}  // namespace polyiso
