//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyiso/matrix.hpp"

namespace polyiso {

/// Vertices are 0-based internally; every file format and report uses 1..n.
using Vertex = std::size_t;

/// Simple undirected graph stored as a dense 0/1 adjacency matrix.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n, std::string name = {})
      : n_(n), adj_(n * n, 0), name_(std::move(name)) {
    if (n == 0)
      throw std::invalid_argument("Graph: vertex count must be at least 1");
  }

  /// Builds a graph from 0-based edge pairs. Loops and duplicates are
  /// rejected.
  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<Vertex, Vertex>> &edges,
                          std::string name = {}) {
    Graph g(n, std::move(name));
    for (auto [u, v]: edges) {
      if (u >= n || v >= n)
        throw std::out_of_range("Graph: edge endpoint out of range");
      if (u == v)
        throw std::invalid_argument("Graph: loops are not allowed");
      if (g.adjacent(u, v))
        throw std::invalid_argument("Graph: duplicate edge");
      g.add_edge(u, v);
    }
    return g;
  }

  /// Same as from_edges but with 1-based labels, as written in the tables.
  static Graph
  from_edges_1based(std::size_t n,
                    const std::vector<std::pair<Vertex, Vertex>> &edges,
                    std::string name = {}) {
    std::vector<std::pair<Vertex, Vertex>> zero;
    zero.reserve(edges.size());
    for (auto [u, v]: edges) {
      if (u == 0 || v == 0)
        throw std::out_of_range("Graph: 1-based label expected");
      zero.emplace_back(u - 1, v - 1);
    }
    return from_edges(n, zero, std::move(name));
  }

  std::size_t size() const noexcept { return n_; }
  const std::string &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }

  void add_edge(Vertex u, Vertex v) {
    if (u == v)
      throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  }

  void remove_edge(Vertex u, Vertex v) { adj_[u * n_ + v] = adj_[v * n_ + u] = 0; }

  std::size_t degree(Vertex u) const {
    std::size_t d = 0;
    for (Vertex v = 0; v < n_; ++v)
      d += adj_[u * n_ + v];
    return d;
  }

  std::vector<Vertex> neighbors(Vertex u) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
      if (adjacent(u, v))
        out.push_back(v);
    return out;
  }

  std::size_t edge_count() const {
    return std::accumulate(adj_.begin(), adj_.end(), std::size_t{0}) / 2;
  }

  /// Edges as 0-based pairs (u < v) in row-major order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (adjacent(u, v))
          out.emplace_back(u, v);
    return out;
  }

  IntMatrix adjacency() const {
    IntMatrix m(n_, mpz_class(0));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (adjacent(u, v))
          m(u, v) = 1;
    return m;
  }

  /// Equality of labelled structure; the name is ignored.
  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::string name_;
};

/// A bijection of {0..n-1}; map[i] is the image of vertex i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Vertex> map): map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (Vertex v: map_) {
      if (v >= map_.size() || seen[v])
        throw std::invalid_argument("Permutation: not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), Vertex{0});
    return Permutation(std::move(m));
  }

  static Permutation from_1based(const std::vector<Vertex> &images) {
    std::vector<Vertex> m;
    m.reserve(images.size());
    for (Vertex v: images) {
      if (v == 0)
        throw std::invalid_argument("Permutation: 1-based label expected");
      m.push_back(v - 1);
    }
    return Permutation(std::move(m));
  }

  std::size_t size() const noexcept { return map_.size(); }
  Vertex operator()(Vertex i) const { return map_[i]; }
  const std::vector<Vertex> &map() const noexcept { return map_; }

  Permutation inverse() const {
    std::vector<Vertex> inv(map_.size());
    for (Vertex i = 0; i < map_.size(); ++i)
      inv[map_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation &other) const {
    std::vector<Vertex> out(map_.size());
    for (Vertex i = 0; i < map_.size(); ++i)
      out[i] = map_[other(i)];
    return Permutation(std::move(out));
  }

  std::vector<Vertex> to_1based() const {
    std::vector<Vertex> out(map_);
    for (auto &v: out)
      ++v;
    return out;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<Vertex> map_;
};

/// Partial injective map V(G) -> V(H). Domain and image are kept in sync.
class PartialMapping {
 public:
  PartialMapping() = default;
  explicit PartialMapping(std::size_t n)
      : forward_(n), used_(n, false) { }

  std::size_t size() const noexcept { return forward_.size(); }
  std::size_t assigned_count() const noexcept { return count_; }
  bool complete() const noexcept { return count_ == forward_.size(); }

  bool is_assigned(Vertex i) const { return forward_[i].has_value(); }
  bool image_used(Vertex j) const { return used_[j]; }
  std::optional<Vertex> operator[](Vertex i) const { return forward_[i]; }

  void assign(Vertex i, Vertex j) {
    if (forward_[i] || used_[j])
      throw std::logic_error("PartialMapping: assignment breaks injectivity");
    forward_[i] = j;
    used_[j] = true;
    ++count_;
  }

  void unassign(Vertex i) {
    if (!forward_[i])
      return;
    used_[*forward_[i]] = false;
    forward_[i].reset();
    --count_;
  }

  /// Unused image vertices in ascending order.
  std::vector<Vertex> free_images() const {
    std::vector<Vertex> out;
    for (Vertex j = 0; j < used_.size(); ++j)
      if (!used_[j])
        out.push_back(j);
    return out;
  }

  Permutation to_permutation() const {
    if (!complete())
      throw std::logic_error("PartialMapping: mapping is not total");
    std::vector<Vertex> m(forward_.size());
    for (Vertex i = 0; i < forward_.size(); ++i)
      m[i] = *forward_[i];
    return Permutation(std::move(m));
  }

  friend bool operator==(const PartialMapping &,
                         const PartialMapping &) = default;

 private:
  std::vector<std::optional<Vertex>> forward_;
  std::vector<bool> used_;
  std::size_t count_ = 0;
};

inline std::size_t max_degree(const Graph &g) {
  std::size_t d = 0;
  for (Vertex u = 0; u < g.size(); ++u)
    d = std::max(d, g.degree(u));
  return d;
}

/// Degrees sorted in descending order.
inline std::vector<std::size_t> degree_sequence(const Graph &g) {
  std::vector<std::size_t> out;
  out.reserve(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    out.push_back(g.degree(u));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// A(G) + 2dE. The caller picks d; with two graphs it must be the shared
/// maximum degree so both sides get the same shift.
inline IntMatrix stabilize(const Graph &g, std::size_t d) {
  IntMatrix m = g.adjacency();
  for (Vertex i = 0; i < g.size(); ++i)
    m(i, i) = mpz_class(static_cast<unsigned long>(2 * d));
  return m;
}

inline IntMatrix stabilize(const Graph &g) { return stabilize(g, max_degree(g)); }

/// result[p(i)][p(j)] = m[i][j]
template <class T>
Matrix<T> permute(const Matrix<T> &m, const Permutation &p) {
  if (m.size() != p.size())
    throw std::invalid_argument("permute: dimension mismatch");
  Matrix<T> out(m.size());
  for (Vertex i = 0; i < m.size(); ++i)
    for (Vertex j = 0; j < m.size(); ++j)
      out(p(i), p(j)) = m(i, j);
  return out;
}

/// The graph H with (p(i), p(j)) ∈ E(H) iff (i, j) ∈ E(G).
inline Graph permuted_copy(const Graph &g, const Permutation &p,
                           std::string name = {}) {
  if (g.size() != p.size())
    throw std::invalid_argument("permuted_copy: dimension mismatch");
  Graph h(g.size(), std::move(name));
  for (auto [u, v]: g.edges())
    h.add_edge(p(u), p(v));
  return h;
}

/// O(n^2) check that p maps E(G) onto E(H).
inline bool verify_isomorphism(const Graph &g, const Graph &h,
                               const Permutation &p) {
  if (g.size() != h.size() || p.size() != g.size())
    throw std::invalid_argument("verify_isomorphism: size mismatch");
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j) != h.adjacent(p(i), p(j)))
        return false;
  return true;
}

}  // namespace polyiso
