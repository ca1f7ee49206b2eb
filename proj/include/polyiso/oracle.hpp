//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyiso/graph.hpp"
#include "polyiso/matrix.hpp"

namespace polyiso {

// Exhaustive search oracles. They share nothing with the polynomial
// machinery and serve as ground truth for it.

inline constexpr std::size_t kDefaultOracleLimit = 10;

class OracleLimitError: public std::runtime_error {
 public:
  OracleLimitError(std::size_t n, std::size_t limit)
      : std::runtime_error("oracle refused: n=" + std::to_string(n)
                           + " exceeds limit " + std::to_string(limit)) { }
};

namespace detail {
  template <class T>
  std::vector<std::vector<T>> row_signatures(const Matrix<T> &m) {
    std::vector<std::vector<T>> sig(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != i)
          sig[i].push_back(m(i, j));
      std::sort(sig[i].begin(), sig[i].end());
      sig[i].push_back(m(i, i));
    }
    return sig;
  }

  template <class T>
  class IsoSearch {
   public:
    IsoSearch(const Matrix<T> &a, const Matrix<T> &b)
        : a_(a), b_(b), sig_a_(row_signatures(a)), sig_b_(row_signatures(b)),
          map_(a.size()), used_(a.size(), false) { }

    // Visits isomorphisms in lexicographic order until `visit` returns false.
    void run(const std::function<bool(const Permutation &)> &visit) {
      visit_ = &visit;
      stop_ = false;
      if (a_.size() == b_.size())
        extend(0);
    }

   private:
    void extend(std::size_t i) {
      const std::size_t n = a_.size();
      if (i == n) {
        if (!(*visit_)(Permutation(map_)))
          stop_ = true;
        return;
      }
      for (std::size_t j = 0; j < n && !stop_; ++j) {
        if (used_[j] || sig_a_[i] != sig_b_[j])
          continue;
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k)
          ok = a_(i, k) == b_(j, map_[k]);
        if (!ok)
          continue;
        map_[i] = j;
        used_[j] = true;
        extend(i + 1);
        used_[j] = false;
      }
    }

    const Matrix<T> &a_;
    const Matrix<T> &b_;
    std::vector<std::vector<T>> sig_a_, sig_b_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    const std::function<bool(const Permutation &)> *visit_ = nullptr;
    bool stop_ = false;
  };

  inline void check_limit(std::size_t n, std::size_t limit) {
    if (n > limit)
      throw OracleLimitError(n, limit);
  }
}  // namespace detail

/// Calls `visit(p)` for each p with a(i,j) == b(p(i),p(j)), in lexicographic
/// order of p, until it returns false. Diagonal entries act as vertex weights.
template <class T>
void for_each_isomorphism(const Matrix<T> &a, const Matrix<T> &b,
                          const std::function<bool(const Permutation &)> &visit,
                          std::size_t limit = kDefaultOracleLimit) {
  detail::check_limit(a.size(), limit);
  detail::IsoSearch<T>(a, b).run(visit);
}

/// Lexicographically first isomorphism G -> H, if any.
inline std::optional<Permutation>
brute_force_isomorphism(const Graph &g, const Graph &h,
                        std::size_t limit = kDefaultOracleLimit) {
  if (g.size() != h.size())
    throw std::invalid_argument("brute_force_isomorphism: size mismatch");
  std::optional<Permutation> found;
  for_each_isomorphism<mpz_class>(
      g.adjacency(), h.adjacency(),
      [&](const Permutation &p) {
        found = p;
        return false;
      },
      limit);
  return found;
}

inline std::vector<Permutation>
all_isomorphisms(const Graph &g, const Graph &h,
                 std::size_t limit = kDefaultOracleLimit) {
  std::vector<Permutation> out;
  for_each_isomorphism<mpz_class>(
      g.adjacency(), h.adjacency(),
      [&](const Permutation &p) {
        out.push_back(p);
        return true;
      },
      limit);
  return out;
}

/// |Aut| of a weighted symmetric matrix (loop weights on the diagonal).
template <class T>
std::uint64_t automorphism_group_size(const Matrix<T> &m,
                                      std::size_t limit = kDefaultOracleLimit) {
  std::uint64_t count = 0;
  for_each_isomorphism<T>(
      m, m,
      [&](const Permutation &) {
        ++count;
        return true;
      },
      limit);
  return count;
}

inline std::uint64_t
automorphism_group_size(const Graph &g, std::size_t limit = kDefaultOracleLimit) {
  return automorphism_group_size(g.adjacency(), limit);
}

/// Orbit partition under Aut, each orbit sorted, orbits ordered by their
/// smallest vertex.
template <class T>
std::vector<std::vector<Vertex>> orbits(const Matrix<T> &m,
                                        std::size_t limit = kDefaultOracleLimit) {
  const std::size_t n = m.size();
  std::vector<Vertex> parent(n);
  for (Vertex v = 0; v < n; ++v)
    parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for_each_isomorphism<T>(
      m, m,
      [&](const Permutation &p) {
        for (Vertex v = 0; v < n; ++v) {
          const Vertex a = find(v), b = find(p(v));
          if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
        }
        return true;
      },
      limit);

  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = find(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

inline std::vector<std::vector<Vertex>>
orbits(const Graph &g, std::size_t limit = kDefaultOracleLimit) {
  return orbits(g.adjacency(), limit);
}

}  // namespace polyiso
