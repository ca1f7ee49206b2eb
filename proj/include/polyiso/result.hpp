//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "polyiso/graph.hpp"

namespace polyiso {

enum class Verdict { kIsomorphic, kNotIsomorphic, kAborted };

inline const char *to_string(Verdict v) {
  switch (v) {
    case Verdict::kIsomorphic:
      return "isomorphic";
    case Verdict::kNotIsomorphic:
      return "not-isomorphic";
    case Verdict::kAborted:
      return "aborted";
  }
  return "?";
}

struct MatchStats {
  std::uint64_t nodes = 0;           // search-tree nodes entered
  std::uint64_t trials = 0;          // (i, j) candidate tests
  std::uint64_t epsilon_draws = 0;
  std::uint64_t solver_sweeps = 0;
  std::uint64_t determinants = 0;    // exact determinant/adjugate passes
  double wall_seconds = 0;
};

/// A probability bound p stored as log10(p); -infinity means zero.
struct MistakeBound {
  double log10 = -std::numeric_limits<double>::infinity();

  bool is_zero() const { return std::isinf(log10) && log10 < 0; }
  double probability() const { return std::pow(10.0, log10); }
};

struct MatchResult {
  Verdict verdict = Verdict::kNotIsomorphic;
  std::optional<Permutation> phi;
  bool verified = false;
  bool heuristic = false;  // a NotIsomorphic verdict that may be wrong
  std::string reason;
  MistakeBound mistake_bound;
  MatchStats stats;
};

enum class MistakeKind { kDirect, kRecursive };

/// Direct: n / 10^N. Recursive: 10^-(n (n - lg n)) when N = n, otherwise
/// the product prod_{i=1..n} i / 10^N.
inline MistakeBound mistake_bound(std::size_t n, unsigned N, MistakeKind kind) {
  if (N < 1)
    throw std::invalid_argument("mistake_bound: N must be >= 1");
  const double dn = static_cast<double>(n);
  if (kind == MistakeKind::kDirect)
    return {std::log10(dn) - N};
  if (N == n)
    return {-dn * (dn - std::log10(dn))};
  double s = 0;
  for (std::size_t i = 1; i <= n; ++i)
    s += std::log10(static_cast<double>(i)) - N;
  return {s};
}

}  // namespace polyiso
