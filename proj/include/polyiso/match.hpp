//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polyiso/bounded_float.hpp"
#include "polyiso/determinant.hpp"
#include "polyiso/graph.hpp"
#include "polyiso/poly.hpp"
#include "polyiso/result.hpp"
#include "polyiso/rng.hpp"
#include "polyiso/scaled.hpp"
#include "polyiso/solver.hpp"

namespace polyiso {

enum class Arithmetic { kExact, kBounded };
enum class Strategy { kDiagonal, kNeighborhood };

struct MatchConfig {
  std::optional<unsigned> precision;  // N; the vertex count when unset
  Arithmetic arithmetic = Arithmetic::kExact;
  SolverConfig solver;
  Strategy strategy = Strategy::kDiagonal;
  ScaledExact alpha = ScaledExact(mpz_class(25), 2);
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  ScaledExact delta = ScaledExact(mpz_class(1), 3);
  std::uint64_t budget = 1'000'000;
  bool verify_output = true;

  unsigned precision_for(std::size_t n) const {
    return precision.value_or(static_cast<unsigned>(std::max<std::size_t>(1, n)));
  }

  void validate() const {
    if (precision && *precision < 1)
      throw std::invalid_argument("MatchConfig: precision N must be >= 1");
    if (strategy == Strategy::kNeighborhood
        && (alpha.sign() <= 0 || alpha >= ScaledExact(1)))
      throw std::invalid_argument("MatchConfig: alpha must lie in (0, 1)");
    if (strategy == Strategy::kNeighborhood
        && arithmetic == Arithmetic::kBounded)
      throw std::invalid_argument(
          "MatchConfig: the neighborhood strategy requires exact arithmetic");
    if (delta.sign() < 0 || delta >= ScaledExact(1))
      throw std::invalid_argument("MatchConfig: delta must lie in [0, 1)");
    solver.validate();
  }
};

using Increments = std::vector<std::pair<Vertex, ScaledExact>>;

/// Diagonal increments contributed by one step at vertex v.
inline Increments step_increments(const Graph &g, Vertex v,
                                  const ScaledExact &eps, Strategy strategy,
                                  const ScaledExact &alpha) {
  Increments out {{v, eps}};
  if (strategy == Strategy::kNeighborhood) {
    const ScaledExact side = alpha * eps;
    for (Vertex u: g.neighbors(v))
      out.emplace_back(u, side);
  }
  return out;
}

/// The same increment as a dense vector over V(g).
inline std::vector<ScaledExact> build_point(const Graph &g, Vertex v,
                                            const ScaledExact &eps,
                                            Strategy strategy,
                                            const ScaledExact &alpha
                                            = ScaledExact(mpz_class(25), 2)) {
  std::vector<ScaledExact> out(g.size(), ScaledExact(0));
  for (const auto &[u, amount]: step_increments(g, v, eps, strategy, alpha))
    out.at(u) += amount;
  return out;
}

/// Partial bijection together with the consistently modified matrices
/// A^(i), B^(i), held as integers at one fixed decimal scale.
class MatchState {
 public:
  MatchState(const IntMatrix &a, const IntMatrix &b, unsigned scale)
      : a_(ScaledMatrix::lift(a, scale)), b_(ScaledMatrix::lift(b, scale)),
        phi_(a.size()), point_g_(a.size()), point_h_(a.size()) {
    if (a.size() != b.size())
      throw std::invalid_argument("MatchState: size mismatch");
  }

  std::size_t size() const noexcept { return phi_.size(); }
  unsigned scale() const noexcept { return a_.scale(); }
  std::size_t depth() const noexcept { return steps_.size(); }
  const ScaledMatrix &a() const noexcept { return a_; }
  const ScaledMatrix &b() const noexcept { return b_; }
  const PartialMapping &phi() const noexcept { return phi_; }
  const EvaluationPoint &point_g() const noexcept { return point_g_; }
  const EvaluationPoint &point_h() const noexcept { return point_h_; }

  struct Step {
    Vertex i, j;
    ScaledExact epsilon;
    bool modified;  // false for an assignment without matrix change
  };
  const std::vector<Step> &steps() const noexcept { return steps_; }

  void push(Vertex i, Vertex j, const ScaledExact &eps, Increments on_g,
            Increments on_h) {
    phi_.assign(i, j);
    for (const auto &[v, amount]: on_g)
      a_.add_diagonal(v, amount);
    for (const auto &[v, amount]: on_h)
      b_.add_diagonal(v, amount);
    point_g_.apply(steps_.size() + 1, eps, std::move(on_g));
    point_h_.apply(steps_.size() + 1, eps, std::move(on_h));
    steps_.push_back({i, j, eps, true});
  }

  /// Sets phi(i) = j and leaves the matrices alone.
  void push_unmodified(Vertex i, Vertex j) {
    phi_.assign(i, j);
    steps_.push_back({i, j, ScaledExact(0), false});
  }

  void pop() {
    if (steps_.empty())
      throw std::logic_error("MatchState: nothing to undo");
    const Step s = steps_.back();
    steps_.pop_back();
    phi_.unassign(s.i);
    if (!s.modified)
      return;
    for (const auto &[v, amount]: point_g_.history().back().increments)
      a_.add_diagonal(v, -amount);
    for (const auto &[v, amount]: point_h_.history().back().increments)
      b_.add_diagonal(v, -amount);
    point_g_.revert();
    point_h_.revert();
  }

  /// Hash of (A^(i), B^(i), phi, J).
  std::size_t fingerprint() const {
    std::string s;
    for (const auto *m: {&a_, &b_}) {
      for (const auto &v: m->ints().data()) {
        s += v.get_str(16);
        s += ',';
      }
      s += '|';
    }
    for (Vertex i = 0; i < size(); ++i) {
      const auto img = phi_[i];
      s += img ? std::to_string(*img) : "-";
      s += phi_.image_used(i) ? '+' : '.';
    }
    return std::hash<std::string> {}(s);
  }

 private:
  ScaledMatrix a_, b_;
  PartialMapping phi_;
  EvaluationPoint point_g_, point_h_;
  std::vector<Step> steps_;
};

/// Runs the point-evaluation algorithms on one pair of graphs.
class Matcher {
 public:
  Matcher(Graph g, Graph h, MatchConfig cfg)
      : g_(std::move(g)), h_(std::move(h)), cfg_(std::move(cfg)),
        rng_(cfg_.seed, cfg_.stream) {
    if (g_.size() != h_.size())
      throw std::invalid_argument("Matcher: graphs differ in size");
    cfg_.validate();
    n_ = g_.size();
    d_ = std::max(max_degree(g_), max_degree(h_));
    N_ = cfg_.precision_for(n_);
    unsigned scale = N_;
    if (cfg_.strategy == Strategy::kNeighborhood)
      scale += cfg_.alpha.scale();
    state_.emplace(stabilize(g_, d_), stabilize(h_, d_), scale);
  }

  const Graph &g() const noexcept { return g_; }
  const Graph &h() const noexcept { return h_; }
  const MatchConfig &config() const noexcept { return cfg_; }
  std::size_t shared_max_degree() const noexcept { return d_; }
  unsigned precision() const noexcept { return N_; }
  MatchState &state() { return *state_; }
  const MatchState &state() const { return *state_; }
  const MatchStats &stats() const noexcept { return stats_; }

  /// Rebuilds the state at a larger decimal scale (needed when callers
  /// supply epsilons finer than 10^-N). Only valid before any step.
  void rescale(unsigned scale) {
    if (state_->depth() != 0)
      throw std::logic_error("Matcher: rescale after steps were taken");
    state_.emplace(stabilize(g_, d_), stabilize(h_, d_), scale);
    caches_.clear();
  }

  EpsilonSample draw_epsilon() {
    ++stats_.epsilon_draws;
    return sample_epsilon(rng_, N_, cfg_.delta);
  }

  /// Verdict from the cheap invariants alone, if they settle it.
  std::optional<MatchResult> precheck() {
    MatchResult r;
    if (degree_sequence(g_) != degree_sequence(h_)) {
      r.reason = "degree-sequence";
      return r;
    }
    if (d_ == 0) {
      r.verdict = Verdict::kIsomorphic;
      r.phi = Permutation::identity(n_);
      r.verified = verify_isomorphism(g_, h_, *r.phi);
      r.reason = "edgeless";
      return r;
    }
    const auto &c = cache();
    if (c.adj_a->det != c.adj_b->det) {
      r.reason = "determinant";
      return r;
    }
    return std::nullopt;
  }

  /// Whether mapping i to j passes the equality test at the current state
  /// with perturbation eps. Does not change the state.
  bool decide(Vertex i, Vertex j, const ScaledExact &eps) {
    ++stats_.trials;
    if (cfg_.arithmetic == Arithmetic::kBounded)
      return decide_bounded(i, j, eps);
    return decide_exact(i, j, eps);
  }

  /// decide(), and on success the state advances by one consistent
  /// modification.
  bool try_extend(Vertex i, Vertex j, const ScaledExact &eps) {
    if (state_->phi().is_assigned(i) || state_->phi().image_used(j))
      throw std::logic_error("try_extend: vertex already mapped");
    if (!decide(i, j, eps))
      return false;
    push(i, j, eps);
    return true;
  }

  void push(Vertex i, Vertex j, const ScaledExact &eps) {
    state_->push(i, j, eps,
                 step_increments(g_, i, eps, cfg_.strategy, cfg_.alpha),
                 step_increments(h_, j, eps, cfg_.strategy, cfg_.alpha));
  }

  void pop() {
    state_->pop();
    if (caches_.size() > state_->depth() + 1)
      caches_.resize(state_->depth() + 1);
  }

  /// Algorithm 2: one greedy pass, first admissible j for each i.
  MatchResult direct() {
    const auto t0 = std::chrono::steady_clock::now();
    MatchResult r = run_direct();
    finish(r, t0);
    return r;
  }

  /// Algorithm 3: depth-first search over j with backtracking.
  MatchResult recursive() {
    const auto t0 = std::chrono::steady_clock::now();
    MatchResult r = run_recursive();
    finish(r, t0);
    return r;
  }

  /// Inverse-diagonal entries of the current A^(i) or B^(i), computed the
  /// way the bounded comparison computes them.
  std::vector<BoundedFloat> inverse_diagonal(bool target, unsigned iterations,
                                             unsigned bits) {
    const auto m = to_bounded((target ? state_->b() : state_->a()).values(), bits);
    std::vector<BoundedFloat> out;
    for (Vertex v = 0; v < n_; ++v) {
      out.push_back(inverse_diagonal_entry(m, v, iterations, bits,
                                           cfg_.solver.initial_guess));
      stats_.solver_sweeps += iterations;
    }
    return out;
  }

  /// Comparison parameters used by the bounded test at step k (1-based).
  struct BoundedParams {
    unsigned iterations;
    unsigned bits;
    mpq_class threshold;  // accept iff |a - b| < threshold
  };

  BoundedParams bounded_params(std::size_t k) const {
    const BoundedPlan plan = plan_bounded(n_, d_, k, N_);
    const SolverConfig &s = cfg_.solver;
    if (s.mode == SolverConfig::Mode::kPlannedPrecision)
      return {plan.iterations, s.mantissa_bits.value_or(plan.bits),
              plan.separation.delta / 2};
    // Fixed sweeps: accept within the a-priori error of both sides,
    // 2 (delta0 / 2^K + K n 2^-L).
    const unsigned bits = s.mantissa_bits.value_or(kMinPlannedBits);
    mpq_class per_side = plan.delta0;
    mpq_div_2exp(per_side.get_mpq_t(), per_side.get_mpq_t(), s.iterations);
    mpq_class rounding(static_cast<unsigned long>(s.iterations) * n_);
    mpq_div_2exp(rounding.get_mpq_t(), rounding.get_mpq_t(), bits);
    return {s.iterations, bits, 2 * (per_side + rounding)};
  }

 private:
  struct Cache {
    std::optional<AdjugateDiagonal> adj_a, adj_b;
    std::optional<Matrix<BoundedFloat>> fa, fb;
    std::map<Vertex, BoundedFloat> ra, rb;  // inverse diagonals at eps = 0
  };

  Cache &cache() {
    const std::size_t k = state_->depth();
    if (caches_.size() < k + 1)
      caches_.resize(k + 1);
    Cache &c = caches_[k];
    if (!c.adj_a) {
      c.adj_a = adjugate_diagonal(state_->a().ints());
      c.adj_b = adjugate_diagonal(state_->b().ints());
      stats_.determinants += 2;
    }
    return c;
  }

  bool decide_exact(Vertex i, Vertex j, const ScaledExact &eps) {
    Cache &c = cache();
    // Ratio test at eps_i = 0: with equal values at the previous point it
    // reduces to equal principal minors.
    if (c.adj_a->minors[i] != c.adj_b->minors[j])
      return false;
    const mpz_class e = eps.mantissa_at(state_->scale());
    if (cfg_.strategy == Strategy::kDiagonal)
      return c.adj_a->det + e * c.adj_a->minors[i]
             == c.adj_b->det + e * c.adj_b->minors[j];
    ScaledMatrix a = state_->a(), b = state_->b();
    for (const auto &[v, amount]:
         step_increments(g_, i, eps, cfg_.strategy, cfg_.alpha))
      a.add_diagonal(v, amount);
    for (const auto &[v, amount]:
         step_increments(h_, j, eps, cfg_.strategy, cfg_.alpha))
      b.add_diagonal(v, amount);
    stats_.determinants += 2;
    return bareiss_determinant(a.ints()) == bareiss_determinant(b.ints());
  }

  bool decide_bounded(Vertex i, Vertex j, const ScaledExact &eps) {
    Cache &c = cache();
    const BoundedParams p = bounded_params(state_->depth() + 1);
    if (!c.fa) {
      c.fa = to_bounded(state_->a().values(), p.bits);
      c.fb = to_bounded(state_->b().values(), p.bits);
    }
    auto solve = [&](const Matrix<BoundedFloat> &m, Vertex v) {
      stats_.solver_sweeps += p.iterations;
      return inverse_diagonal_entry(m, v, p.iterations, p.bits,
                                    cfg_.solver.initial_guess);
    };
    auto at_zero = [&](std::map<Vertex, BoundedFloat> &memo,
                       const Matrix<BoundedFloat> &m, Vertex v) {
      auto it = memo.find(v);
      if (it == memo.end())
        it = memo.emplace(v, solve(m, v)).first;
      return it->second;
    };
    const BoundedFloat thr(p.threshold, p.bits);

    const BoundedFloat a0 = at_zero(c.ra, *c.fa, i);
    const BoundedFloat b0 = at_zero(c.rb, *c.fb, j);
    if (!((a0 - b0).abs() < thr))
      return false;

    Matrix<BoundedFloat> wa = *c.fa, wb = *c.fb;
    wa(i, i) = BoundedFloat((state_->a().value(i, i) + eps).to_mpq(), p.bits);
    wb(j, j) = BoundedFloat((state_->b().value(j, j) + eps).to_mpq(), p.bits);
    const BoundedFloat ae = solve(wa, i), be = solve(wb, j);
    return (ae - be).abs() < thr;
  }

  MatchResult run_direct() {
    if (auto r = precheck()) {
      if (r->verdict == Verdict::kNotIsomorphic)
        r->mistake_bound = MistakeBound {};
      return *r;
    }
    MatchResult r;
    for (Vertex i = 0; i < n_; ++i) {
      ++stats_.nodes;
      const ScaledExact eps = draw_epsilon().value;
      bool found = false;
      for (Vertex j = 0; j < n_ && !found; ++j)
        if (!state_->phi().image_used(j) && try_extend(i, j, eps))
          found = true;
      if (!found) {
        r.reason = "no-candidate";
        r.heuristic = true;
        r.mistake_bound = MistakeBound {0};
        return r;
      }
    }
    r.phi = state_->phi().to_permutation();
    r.verified = verify_isomorphism(g_, h_, *r.phi);
    if (cfg_.verify_output && !r.verified) {
      r.reason = "verification-failed";
      r.heuristic = true;
      r.mistake_bound = MistakeBound {0};
      r.phi.reset();
      return r;
    }
    r.verdict = Verdict::kIsomorphic;
    r.reason = "search";
    r.mistake_bound = mistake_bound(n_, N_, MistakeKind::kDirect);
    return r;
  }

  MatchResult run_recursive() {
    if (auto r = precheck())
      return *r;
    aborted_ = false;
    MatchResult r;
    if (set_correspondence(0)) {
      r.verdict = Verdict::kIsomorphic;
      r.phi = state_->phi().to_permutation();
      r.verified = verify_isomorphism(g_, h_, *r.phi);
      r.reason = "search";
      r.mistake_bound = mistake_bound(n_, N_, MistakeKind::kRecursive);
    } else if (aborted_) {
      r.verdict = Verdict::kAborted;
      r.reason = "budget";
      r.mistake_bound = MistakeBound {0};
    } else {
      r.reason = "exhausted";
    }
    return r;
  }

  bool set_correspondence(Vertex i) {
    if (++stats_.nodes > cfg_.budget) {
      aborted_ = true;
      return false;
    }
    if (i + 1 == n_) {
      const Vertex k = state_->phi().free_images().front();
      state_->push_unmodified(i, k);
      if (cfg_.verify_output
          && !verify_isomorphism(g_, h_, state_->phi().to_permutation())) {
        pop();
        return false;
      }
      return true;
    }
    for (Vertex j = 0; j < n_; ++j) {
      if (state_->phi().image_used(j))
        continue;
      const ScaledExact eps = draw_epsilon().value;
      if (!try_extend(i, j, eps))
        continue;
      if (set_correspondence(i + 1))
        return true;
      pop();
      if (aborted_)
        return false;
    }
    return false;
  }

  void finish(MatchResult &r, std::chrono::steady_clock::time_point t0) {
    stats_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    r.stats = stats_;
  }

  Graph g_, h_;
  MatchConfig cfg_;
  CounterRng rng_;
  std::size_t n_ = 0, d_ = 0;
  unsigned N_ = 1;
  std::optional<MatchState> state_;
  std::vector<Cache> caches_;
  MatchStats stats_;
  bool aborted_ = false;
};

inline MatchResult direct_match(const Graph &g, const Graph &h,
                                const MatchConfig &cfg) {
  return Matcher(g, h, cfg).direct();
}

inline MatchResult recursive_match(const Graph &g, const Graph &h,
                                   const MatchConfig &cfg) {
  return Matcher(g, h, cfg).recursive();
}

}  // namespace polyiso
