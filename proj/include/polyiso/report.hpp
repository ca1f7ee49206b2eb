//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "polyiso/coeff_match.hpp"
#include "polyiso/corpus.hpp"
#include "polyiso/graph_io.hpp"
#include "polyiso/match.hpp"
#include "polyiso/poly.hpp"

namespace polyiso {

inline constexpr const char *kVersion = "polyiso 0.1.0";

using Json = nlohmann::ordered_json;

enum class Algorithm { kCoefficient, kDirect, kRecursive };

inline const char *to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kCoefficient:
      return "coeff";
    case Algorithm::kDirect:
      return "direct";
    case Algorithm::kRecursive:
      return "recursive";
  }
  return "?";
}

inline Algorithm algorithm_from_string(const std::string &s) {
  if (s == "coeff")
    return Algorithm::kCoefficient;
  if (s == "direct")
    return Algorithm::kDirect;
  if (s == "recursive")
    return Algorithm::kRecursive;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

/// Runs one algorithm on one pair. The coefficient search draws its single
/// epsilon from the same (seed, stream) generator the other two use.
inline MatchResult run_algorithm(Algorithm algorithm, const Graph &g,
                                 const Graph &h, const MatchConfig &cfg,
                                 std::size_t coefficient_limit
                                 = kDefaultCoefficientLimit) {
  switch (algorithm) {
    case Algorithm::kCoefficient: {
      cfg.validate();
      CounterRng rng(cfg.seed, cfg.stream);
      const auto eps = sample_epsilon(rng, cfg.precision_for(g.size()), cfg.delta);
      auto r = CoefficientMatcher(g, h, eps.value, coefficient_limit, cfg.budget)
                   .run();
      r.stats.epsilon_draws = 1;
      return r;
    }
    case Algorithm::kDirect:
      return direct_match(g, h, cfg);
    case Algorithm::kRecursive:
      return recursive_match(g, h, cfg);
  }
  throw std::logic_error("run_algorithm: bad algorithm");
}

struct PairReport {
  std::string name;
  std::size_t n = 0;
  GroundTruth truth = GroundTruth::kUnknown;
  std::uint64_t seed = 0, stream = 0;
  std::optional<MatchResult> result;
  std::optional<std::string> error;
  bool reverified = false;  // phi re-checked by the harness
};

struct ConfusionCounts {
  std::size_t correct = 0;
  std::size_t false_isomorphic = 0;      // first kind
  std::size_t false_non_isomorphic = 0;  // second kind
  std::size_t aborted = 0;
  std::size_t unknown_truth = 0;
  std::size_t errors = 0;
  std::size_t failed_reverification = 0;
};

struct RunReport {
  Algorithm algorithm = Algorithm::kRecursive;
  MatchConfig config;
  std::vector<PairReport> pairs;
  ConfusionCounts counts;
  double wall_seconds = 0;
};

inline ConfusionCounts tally(const std::vector<PairReport> &pairs) {
  ConfusionCounts c;
  for (const auto &p: pairs) {
    if (p.error) {
      ++c.errors;
      continue;
    }
    const MatchResult &r = *p.result;
    if (r.verdict == Verdict::kIsomorphic && !p.reverified)
      ++c.failed_reverification;
    if (r.verdict == Verdict::kAborted) {
      ++c.aborted;
    } else if (p.truth == GroundTruth::kUnknown) {
      ++c.unknown_truth;
    } else {
      const bool said_iso = r.verdict == Verdict::kIsomorphic && p.reverified;
      const bool is_iso = p.truth == GroundTruth::kIsomorphic;
      if (said_iso == is_iso)
        ++c.correct;
      else if (said_iso)
        ++c.false_isomorphic;
      else
        ++c.false_non_isomorphic;
    }
  }
  return c;
}

/// Runs every entry on a pool of `threads` workers. Entry k uses stream k
/// of the configured seed, so the report does not depend on scheduling.
inline RunReport run(const Corpus &corpus, Algorithm algorithm,
                     const MatchConfig &cfg, unsigned threads = 1,
                     std::size_t coefficient_limit = kDefaultCoefficientLimit) {
  if (corpus.empty())
    throw std::invalid_argument("run: empty corpus");
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.algorithm = algorithm;
  report.config = cfg;
  report.pairs.resize(corpus.size());

  std::atomic<std::size_t> next {0};
  auto worker = [&]() {
    for (std::size_t k; (k = next.fetch_add(1)) < corpus.size();) {
      const CorpusEntry &e = corpus[k];
      PairReport &p = report.pairs[k];
      p.name = e.name;
      p.n = e.g.size();
      p.truth = e.truth;
      p.seed = cfg.seed;
      p.stream = k;
      MatchConfig c = cfg;
      c.stream = k;
      try {
        p.result = run_algorithm(algorithm, e.g, e.h, c, coefficient_limit);
        if (p.result->verdict == Verdict::kIsomorphic && p.result->phi)
          p.reverified = verify_isomorphism(e.g, e.h, *p.result->phi);
      } catch (const std::exception &ex) {
        p.error = ex.what();
        p.result.reset();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, corpus.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t: pool)
    t.join();

  report.counts = tally(report.pairs);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// JSON

inline Json to_json(const MatchConfig &c) {
  Json j;
  j["precision"] = c.precision ? Json(*c.precision) : Json(nullptr);
  j["arithmetic"] = c.arithmetic == Arithmetic::kExact ? "exact" : "float";
  j["strategy"] =
      c.strategy == Strategy::kDiagonal ? "diagonal" : "neighborhood";
  j["alpha"] = c.alpha.to_string();
  j["delta"] = c.delta.to_string();
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  j["verify_output"] = c.verify_output;
  Json s;
  s["mode"] = c.solver.mode == SolverConfig::Mode::kPlannedPrecision ? "planned"
                                                                      : "fixed";
  s["iterations"] = c.solver.iterations;
  s["mantissa_bits"] =
      c.solver.mantissa_bits ? Json(*c.solver.mantissa_bits) : Json(nullptr);
  j["solver"] = s;
  return j;
}

inline Json to_json(const MatchStats &s) {
  return Json {{"nodes", s.nodes},
               {"trials", s.trials},
               {"epsilon_draws", s.epsilon_draws},
               {"solver_sweeps", s.solver_sweeps},
               {"determinants", s.determinants},
               {"wall_ms", s.wall_seconds * 1e3}};
}

inline Json to_json(const MatchResult &r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["phi"] = r.phi ? Json(r.phi->map()) : Json(nullptr);
  j["verified"] = r.verified;
  j["heuristic"] = r.heuristic;
  j["reason"] = r.reason;
  j["mistake_bound_log10"] =
      r.mistake_bound.is_zero() ? Json(nullptr) : Json(r.mistake_bound.log10);
  j["stats"] = to_json(r.stats);
  return j;
}

inline Json to_json(const PairReport &p) {
  Json j;
  j["name"] = p.name;
  j["n"] = p.n;
  j["truth"] = to_string(p.truth);
  j["seed"] = p.seed;
  j["stream"] = p.stream;
  if (p.error) {
    j["error"] = *p.error;
  } else {
    j["result"] = to_json(*p.result);
    j["reverified"] = p.reverified;
  }
  return j;
}

inline Json to_json(const ConfusionCounts &c) {
  return Json {{"correct", c.correct},
               {"false_isomorphic", c.false_isomorphic},
               {"false_non_isomorphic", c.false_non_isomorphic},
               {"aborted", c.aborted},
               {"unknown_truth", c.unknown_truth},
               {"errors", c.errors},
               {"failed_reverification", c.failed_reverification}};
}

inline Json summary_json(const RunReport &r) {
  Json j;
  j["summary"] = true;
  j["version"] = kVersion;
  j["algorithm"] = to_string(r.algorithm);
  j["config"] = to_json(r.config);
  j["pairs"] = r.pairs.size();
  j["counts"] = to_json(r.counts);
  j["wall_ms"] = r.wall_seconds * 1e3;
  return j;
}

/// One JSON object per pair, then the summary object, one per line.
inline void write_report(std::ostream &os, const RunReport &r) {
  for (const auto &p: r.pairs)
    os << to_json(p).dump() << '\n';
  os << summary_json(r).dump() << '\n';
}

/// Removes every "wall_ms" member, recursively.
inline void strip_timing(Json &j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto &[key, value]: j.items())
      strip_timing(value);
  } else if (j.is_array()) {
    for (auto &value: j)
      strip_timing(value);
  }
}

// Corpus files: JSON lines with graph6-encoded graphs.

inline Json to_json(const CorpusEntry &e) {
  Json j;
  j["name"] = e.name;
  j["g"] = serialize_graph6(e.g);
  j["h"] = serialize_graph6(e.h);
  j["truth"] = to_string(e.truth);
  j["witness"] = e.witness ? Json(e.witness->map()) : Json(nullptr);
  j["provenance"] = e.provenance;
  return j;
}

inline void write_corpus(std::ostream &os, const Corpus &corpus) {
  for (const auto &e: corpus)
    os << to_json(e).dump() << '\n';
}

inline Corpus read_corpus(std::istream &is) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      const Json j = Json::parse(line);
      CorpusEntry e;
      e.name = j.at("name").get<std::string>();
      e.g = parse_graph6(j.at("g").get<std::string>());
      e.h = parse_graph6(j.at("h").get<std::string>());
      e.truth = ground_truth_from_string(j.value("truth", std::string("unknown")));
      if (j.contains("witness") && !j["witness"].is_null())
        e.witness = Permutation(j["witness"].get<std::vector<Vertex>>());
      e.provenance = j.value("provenance", std::string());
      corpus.push_back(std::move(e));
    } catch (const std::exception &ex) {
      throw std::invalid_argument("corpus line " + std::to_string(line_no) + ": "
                                  + ex.what());
    }
  }
  check_witnesses(corpus);
  return corpus;
}

/// {"n": .., "coefficients": {"<mask>": "<integer>", ...}}
inline Json to_json(const CoefficientTable &t) {
  Json coeffs = Json::object();
  for (SubsetMask c = 0; c < t.coefficients().size(); ++c)
    coeffs[std::to_string(c)] = t[c].get_str();
  return Json {{"n", t.vertex_count()}, {"coefficients", coeffs}};
}

}  // namespace polyiso
