//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polyiso/determinant.hpp"
#include "polyiso/graph.hpp"
#include "polyiso/matrix.hpp"
#include "polyiso/scaled.hpp"

namespace polyiso {

/// Vertex subsets as bitmasks: bit v set iff vertex v is in the subset.
using SubsetMask = std::uint64_t;

inline constexpr std::size_t kDefaultExpansionLimit = 14;

class ExpansionLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of R^n built by successive diagonal increments. Entry v of
/// increments() is the total amount added to vertex v so far.
class EvaluationPoint {
 public:
  struct Record {
    std::size_t iteration;
    std::vector<std::pair<Vertex, ScaledExact>> increments;
    ScaledExact epsilon;
  };

  EvaluationPoint() = default;
  explicit EvaluationPoint(std::size_t n) : increments_(n, ScaledExact(0)) { }

  /// Point with the given coordinates and no history.
  static EvaluationPoint from_values(std::vector<ScaledExact> values) {
    EvaluationPoint p(values.size());
    p.increments_ = std::move(values);
    return p;
  }

  std::size_t size() const noexcept { return increments_.size(); }
  const std::vector<ScaledExact> &increments() const noexcept {
    return increments_;
  }
  const ScaledExact &operator[](Vertex v) const { return increments_.at(v); }
  const std::vector<Record> &history() const noexcept { return history_; }

  /// Largest decimal scale among the coordinates.
  unsigned scale() const {
    unsigned s = 0;
    for (const auto &v: increments_)
      s = std::max(s, v.scale());
    return s;
  }

  void apply(std::size_t iteration, const ScaledExact &epsilon,
             std::vector<std::pair<Vertex, ScaledExact>> increments) {
    for (const auto &[v, amount]: increments) {
      if (amount.sign() < 0)
        throw std::invalid_argument("EvaluationPoint: negative increment");
      increments_.at(v) += amount;
    }
    history_.push_back({iteration, std::move(increments), epsilon});
  }

  /// Undoes the most recent apply().
  void revert() {
    if (history_.empty())
      throw std::logic_error("EvaluationPoint: nothing to revert");
    for (const auto &[v, amount]: history_.back().increments)
      increments_[v] -= amount;
    history_.pop_back();
  }

  /// Folds the history from zero; equals increments() for a consistent point.
  std::vector<ScaledExact> replay() const {
    std::vector<ScaledExact> out(size(), ScaledExact(0));
    for (const auto &r: history_)
      for (const auto &[v, amount]: r.increments)
        out[v] += amount;
    return out;
  }

 private:
  std::vector<ScaledExact> increments_;
  std::vector<Record> history_;
};

/// Coordinates moved along with the vertices: result[p(v)] = pt[v].
inline EvaluationPoint permute_point(const EvaluationPoint &pt,
                                     const Permutation &p) {
  if (p.size() != pt.size())
    throw std::invalid_argument("permute_point: dimension mismatch");
  std::vector<ScaledExact> out(pt.size());
  for (Vertex v = 0; v < pt.size(); ++v)
    out[p(v)] = pt[v];
  return EvaluationPoint::from_values(std::move(out));
}

namespace detail {
  inline ScaledMatrix shifted(const IntMatrix &m, const EvaluationPoint &pt) {
    if (m.size() != pt.size())
      throw std::invalid_argument("eta_eval: dimension mismatch");
    ScaledMatrix s = ScaledMatrix::lift(m, pt.scale());
    for (Vertex v = 0; v < pt.size(); ++v)
      if (!pt[v].is_zero())
        s.add_diagonal(v, pt[v]);
    return s;
  }
}  // namespace detail

/// det(m + diag(pt))
inline ScaledExact eta_eval(const IntMatrix &m, const EvaluationPoint &pt) {
  return exact_determinant(detail::shifted(m, pt));
}

/// det of (m + diag(pt)) with row and column i removed.
inline ScaledExact eta_minor_eval(const IntMatrix &m, const EvaluationPoint &pt,
                                  Vertex i) {
  if (i >= m.size())
    throw std::out_of_range("eta_minor_eval: vertex out of range");
  return exact_minor_determinant(detail::shifted(m, pt), {i});
}

/// All 2^n coefficients of det(m + X). The coefficient of prod_{v in c} x_v
/// is the minor with the rows and columns in c deleted.
class CoefficientTable {
 public:
  CoefficientTable() = default;
  CoefficientTable(std::size_t n, std::vector<mpz_class> coeffs)
      : n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != (std::size_t {1} << n_))
      throw std::invalid_argument("CoefficientTable: expected 2^n entries");
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const mpz_class &operator[](SubsetMask c) const { return coeffs_.at(c); }
  const std::vector<mpz_class> &coefficients() const noexcept {
    return coeffs_;
  }

  ScaledExact evaluate(const EvaluationPoint &pt) const {
    if (pt.size() != n_)
      throw std::invalid_argument("CoefficientTable: dimension mismatch");
    ScaledExact sum(0);
    for (SubsetMask c = 0; c < coeffs_.size(); ++c) {
      if (coeffs_[c] == 0)
        continue;
      ScaledExact term(coeffs_[c]);
      for (Vertex v = 0; v < n_ && !term.is_zero(); ++v)
        if (c >> v & 1)
          term *= pt[v];
      sum += term;
    }
    return sum;
  }

  friend bool operator==(const CoefficientTable &,
                         const CoefficientTable &) = default;

 private:
  std::size_t n_ = 0;
  std::vector<mpz_class> coeffs_;
};

inline CoefficientTable expand_eta(const IntMatrix &m,
                                   std::size_t limit = kDefaultExpansionLimit) {
  const std::size_t n = m.size();
  if (n > limit || n >= 63)
    throw ExpansionLimitError("expand_eta: " + std::to_string(n)
                              + " vertices exceeds the expansion limit "
                              + std::to_string(limit));
  std::vector<mpz_class> coeffs(std::size_t {1} << n);
  std::vector<bool> drop(n);
  for (SubsetMask c = 0; c < coeffs.size(); ++c) {
    for (std::size_t v = 0; v < n; ++v)
      drop[v] = c >> v & 1;
    coeffs[c] = bareiss_determinant(delete_rows_cols(m, drop));
  }
  return CoefficientTable(n, std::move(coeffs));
}

/// Plain-text rendering with 1-based variables, highest degree first and
/// lexicographic within a degree, e.g. "x1x2x3-x1-x2-x3+2". Zero is "0".
inline std::string to_string(const CoefficientTable &t) {
  const std::size_t n = t.vertex_count();
  std::vector<SubsetMask> order;
  for (SubsetMask c = 0; c < t.size(); ++c)
    if (t[c] != 0)
      order.push_back(c);
  auto key = [n](SubsetMask c) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v)
      if (c >> v & 1)
        vs.push_back(v);
    return vs;
  };
  std::stable_sort(order.begin(), order.end(), [&](SubsetMask a, SubsetMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb)
      return pa > pb;
    return key(a) < key(b);
  });
  std::string out;
  for (SubsetMask c: order) {
    const mpz_class &k = t[c];
    const mpz_class mag = abs(k);
    if (k < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (mag != 1 || c == 0)
      out += mag.get_str();
    for (std::size_t v: key(c))
      out += "x" + std::to_string(v + 1);
  }
  return out.empty() ? "0" : out;
}

/// Image of a vertex subset under p.
inline SubsetMask map_subset(SubsetMask c, const Permutation &p) {
  SubsetMask out = 0;
  for (Vertex v = 0; v < p.size(); ++v)
    if (c >> v & 1)
      out |= SubsetMask {1} << p(v);
  return out;
}

/// True iff A_c = B_{p(c)} for every subset c, on the plain adjacency
/// matrices.
inline bool polynomials_equal_under(const Graph &g, const Graph &h,
                                    const Permutation &p,
                                    std::size_t limit = kDefaultExpansionLimit) {
  if (g.size() != h.size() || p.size() != g.size())
    throw std::invalid_argument("polynomials_equal_under: size mismatch");
  const CoefficientTable a = expand_eta(g.adjacency(), limit);
  const CoefficientTable b = expand_eta(h.adjacency(), limit);
  for (SubsetMask c = 0; c < a.size(); ++c)
    if (a[c] != b[map_subset(c, p)])
      return false;
  return true;
}

/// Compares only the coefficients with |c| = n - 2, i.e. the principal 2x2
/// minors, which already decide whether p is an isomorphism.
inline bool coefficients_n_minus_2_equal(const Graph &g, const Graph &h,
                                         const Permutation &p) {
  if (g.size() != h.size() || p.size() != g.size())
    throw std::invalid_argument("coefficients_n_minus_2_equal: size mismatch");
  const IntMatrix a = g.adjacency(), b = h.adjacency();
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (bareiss_determinant(principal_submatrix(a, {u, v}))
          != bareiss_determinant(principal_submatrix(b, {p(u), p(v)})))
        return false;
  return true;
}

}  // namespace polyiso
