//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyiso/determinant.hpp"
#include "polyiso/graph.hpp"
#include "polyiso/poly.hpp"
#include "polyiso/result.hpp"
#include "polyiso/rng.hpp"

namespace polyiso {

inline constexpr std::size_t kDefaultCoefficientLimit = 12;

/// Coefficient-by-coefficient search on the plain adjacency matrices. For
/// each i it looks for an unused j with
///   eta_G(eps_c + eps e_i) = eta_H(eps_phi(c) + eps e_j)  for all c in C_I,
/// the empty set included, at eps = 0 and at the given eps > 0; this pins
/// the new coefficients A_{c + i} = B_{phi(c) + j} one by one. Full
/// backtracking over j.
class CoefficientMatcher {
 public:
  CoefficientMatcher(const Graph &g, const Graph &h, const ScaledExact &eps,
                     std::size_t limit = kDefaultCoefficientLimit,
                     std::uint64_t budget = 1'000'000)
      : g_(g), h_(h), eps_(eps), budget_(budget), phi_(g.size()) {
    if (g.size() != h.size())
      throw std::invalid_argument("algorithm1: graphs differ in size");
    if (g.size() > limit || g.size() >= 63)
      throw ExpansionLimitError("algorithm1: " + std::to_string(g.size())
                                + " vertices exceeds the limit "
                                + std::to_string(limit));
    if (eps.sign() <= 0)
      throw std::invalid_argument("algorithm1: epsilon must be positive");
    n_ = g.size();
    a_ = ScaledMatrix::lift(g.adjacency(), eps.scale());
    b_ = ScaledMatrix::lift(h.adjacency(), eps.scale());
    e_ = eps.mantissa_at(eps.scale());
  }

  MatchResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    MatchResult r;
    if (degree_sequence(g_) != degree_sequence(h_)) {
      r.reason = "degree-sequence";
    } else if (eta_zero(a_) != eta_zero(b_)) {
      // the eps = 0 half of every check: all of them reduce to det A = det B
      r.reason = "determinant";
    } else if (check(0)) {
      r.verdict = Verdict::kIsomorphic;
      r.phi = phi_.to_permutation();
      r.verified = verify_isomorphism(g_, h_, *r.phi);
      r.reason = "search";
    } else if (aborted_) {
      r.verdict = Verdict::kAborted;
      r.reason = "budget";
      r.mistake_bound = MistakeBound {0};
    } else {
      r.reason = "exhausted";
    }
    stats_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    r.stats = stats_;
    return r;
  }

 private:
  mpz_class eta_zero(const ScaledMatrix &m) {
    ++stats_.determinants;
    return bareiss_determinant(m.ints());
  }

  /// det of the source or target matrix with eps added on `support`,
  /// memoized by support.
  const mpz_class &eta(bool target, SubsetMask support) {
    auto &memo = target ? memo_h_ : memo_g_;
    auto it = memo.find(support);
    if (it != memo.end())
      return it->second;
    IntMatrix m = (target ? b_ : a_).ints();
    for (Vertex v = 0; v < n_; ++v)
      if (support >> v & 1)
        m(v, v) += e_;
    ++stats_.determinants;
    return memo.emplace(support, bareiss_determinant(std::move(m))).first->second;
  }

  bool admissible(Vertex i, Vertex j) {
    ++stats_.trials;
    // c ranges over all subsets of the assigned vertices I = {0..i-1}.
    const SubsetMask full = (SubsetMask {1} << i) - 1;
    SubsetMask c = 0;
    do {
      SubsetMask image = 0;
      for (Vertex v = 0; v < i; ++v)
        if (c >> v & 1)
          image |= SubsetMask {1} << *phi_[v];
      if (eta(false, c | SubsetMask {1} << i)
          != eta(true, image | SubsetMask {1} << j))
        return false;
      c = (c - full) & full;  // next subset of `full`
    } while (c != 0);
    return true;
  }

  bool check(Vertex i) {
    if (++stats_.nodes > budget_) {
      aborted_ = true;
      return false;
    }
    if (i == n_)
      return true;
    for (Vertex j = 0; j < n_; ++j) {
      if (phi_.image_used(j) || !admissible(i, j))
        continue;
      phi_.assign(i, j);
      if (check(i + 1))
        return true;
      phi_.unassign(i);
      if (aborted_)
        return false;
    }
    return false;
  }

  const Graph &g_, &h_;
  ScaledExact eps_;
  std::uint64_t budget_;
  std::size_t n_ = 0;
  ScaledMatrix a_, b_;
  mpz_class e_;
  PartialMapping phi_;
  std::unordered_map<SubsetMask, mpz_class> memo_g_, memo_h_;
  MatchStats stats_;
  bool aborted_ = false;
};

inline MatchResult algorithm1(const Graph &g, const Graph &h,
                              const EpsilonSample &eps,
                              std::size_t limit = kDefaultCoefficientLimit) {
  return CoefficientMatcher(g, h, eps.value, limit).run();
}

}  // namespace polyiso
