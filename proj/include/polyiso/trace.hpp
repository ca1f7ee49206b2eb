//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyiso/match.hpp"
#include "polyiso/oracle.hpp"

namespace polyiso {

struct TraceRow {
  std::size_t iteration = 0;
  std::optional<ScaledExact> epsilon;  // perturbation applied to reach this row
  std::optional<Vertex> source;        // vertex assigned to reach this row
  std::vector<std::vector<Vertex>> candidates;  // per source vertex
  std::optional<std::uint64_t> aut_g, aut_h;     // absent above the oracle limit
  std::vector<double> inverse_diagonal_g;
  std::vector<double> inverse_diagonal_h;
};

struct TraceOptions {
  std::vector<ScaledExact> epsilons;  // used in order, then drawn at random
  unsigned gs_iterations = 10;
  unsigned gs_bits = BoundedFloat::kDoubleBits;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

struct Trace {
  std::vector<TraceRow> rows;
  bool complete = false;  // reached |Aut| = 1 or a full assignment
};

/// Greedy run that records, after each accepted step, the admissible images
/// of every source vertex and the automorphism counts of the loop-weighted
/// graphs. Stops at the first row with |Aut(G^(t))| = 1.
inline Trace candidate_trace(const Graph &g, const Graph &h,
                             const MatchConfig &cfg,
                             const TraceOptions &opt = {}) {
  Matcher m(g, h, cfg);
  unsigned scale = m.state().scale();
  for (const auto &e: opt.epsilons) {
    if (e.sign() <= 0 || e >= ScaledExact(1))
      throw std::invalid_argument("candidate_trace: epsilon outside (0, 1)");
    scale = std::max(scale, e.scale());
  }
  if (scale != m.state().scale())
    m.rescale(scale);

  const std::size_t n = g.size();
  const bool with_aut = n <= opt.oracle_limit;
  std::size_t next_eps = 0;
  auto epsilon = [&]() {
    return next_eps < opt.epsilons.size() ? opt.epsilons[next_eps++]
                                          : m.draw_epsilon().value;
  };

  Trace out;
  std::optional<ScaledExact> applied;
  std::optional<Vertex> source;
  for (std::size_t k = 0;; ++k) {
    const ScaledExact eps = epsilon();
    TraceRow row;
    row.iteration = k;
    row.epsilon = applied;
    row.source = source;
    row.candidates.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      if (const auto img = m.state().phi()[v]) {
        row.candidates[v] = {*img};
        continue;
      }
      for (Vertex j = 0; j < n; ++j)
        if (!m.state().phi().image_used(j) && m.decide(v, j, eps))
          row.candidates[v].push_back(j);
    }
    if (with_aut) {
      row.aut_g = automorphism_group_size(m.state().a().ints(), opt.oracle_limit);
      row.aut_h = automorphism_group_size(m.state().b().ints(), opt.oracle_limit);
    }
    for (const auto &x: m.inverse_diagonal(false, opt.gs_iterations, opt.gs_bits))
      row.inverse_diagonal_g.push_back(x.to_double());
    for (const auto &x: m.inverse_diagonal(true, opt.gs_iterations, opt.gs_bits))
      row.inverse_diagonal_h.push_back(x.to_double());
    out.rows.push_back(std::move(row));

    const TraceRow &last = out.rows.back();
    if ((last.aut_g && *last.aut_g == 1) || k == n) {
      out.complete = true;
      break;
    }
    // The next source vertex in order takes its first admissible image.
    const Vertex i = k;
    if (last.candidates[i].empty())
      break;
    m.push(i, last.candidates[i].front(), eps);
    applied = eps;
    source = i;
  }
  return out;
}

}  // namespace polyiso
