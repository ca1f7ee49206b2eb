//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

// polyiso: check / bench / trace / expand / gen

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "polyiso/builtin.hpp"
#include "polyiso/corpus.hpp"
#include "polyiso/graph_io.hpp"
#include "polyiso/match.hpp"
#include "polyiso/poly.hpp"
#include "polyiso/report.hpp"
#include "polyiso/trace.hpp"

using namespace polyiso;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInternal = 2, kAborted = 3 };

struct UsageError: std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algorithm = "recursive";
  std::string mode = "exact";
  std::optional<unsigned> mantissa_bits, gs_iters, precision;
  std::optional<std::string> alpha;
  std::string delta = "0.001";
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  std::string format = "graph6";
  std::string out;
  bool json = false;
};

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--algorithm", o.algorithm, "coeff | direct | recursive")
      ->check(CLI::IsMember({"coeff", "direct", "recursive"}));
  cmd->add_option("--mode", o.mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--mantissa-bits", o.mantissa_bits, "float mantissa bits L");
  cmd->add_option("--gs-iters", o.gs_iters, "Gauss-Seidel sweeps K");
  cmd->add_option("--precision", o.precision, "decimal digits N (default n)");
  cmd->add_option("--alpha", o.alpha, "neighbor weight; enables the neighborhood strategy");
  cmd->add_option("--delta", o.delta, "lower floor for epsilon");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--budget", o.budget, "search node budget");
  cmd->add_option("--format", o.format, "graph6 | dimacs, for files without a .g6/.dimacs/.col suffix")
      ->check(CLI::IsMember({"graph6", "dimacs"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

ScaledExact parse_decimal(const std::string &s, const char *what) {
  try {
    return ScaledExact::parse(s);
  } catch (const std::exception &e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

MatchConfig make_config(const Options &o) {
  MatchConfig c;
  c.precision = o.precision;
  c.seed = o.seed;
  c.budget = o.budget;
  c.delta = parse_decimal(o.delta, "--delta");
  if (o.alpha) {
    c.strategy = Strategy::kNeighborhood;
    c.alpha = parse_decimal(*o.alpha, "--alpha");
  }
  if (o.mode == "float") {
    c.arithmetic = Arithmetic::kBounded;
    if (o.gs_iters || o.mantissa_bits) {
      c.solver.mode = SolverConfig::Mode::kFixedIterations;
      c.solver.iterations = o.gs_iters.value_or(10);
      c.solver.mantissa_bits = o.mantissa_bits.value_or(BoundedFloat::kDoubleBits);
    }
  }
  try {
    c.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  return c;
}

Graph load_graph(const std::string &spec, const Options &o) {
  try {
    if (spec.rfind("builtin:", 0) == 0)
      return builtin_graph(spec.substr(8));
    if (spec.rfind("g6:", 0) == 0)
      return parse_graph6(spec.substr(3));
    const bool dimacs = spec.ends_with(".dimacs") || spec.ends_with(".col") ||
                        (!spec.ends_with(".g6") && o.format == "dimacs");
    return read_graph_file(spec, dimacs ? GraphFormat::kDimacs : GraphFormat::kGraph6);
  } catch (const std::exception &e) {
    throw UsageError(spec + ": " + e.what());
  }
}

/// stdout unless --out is given.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_)
        throw UsageError("cannot write " + path);
    }
  }
  std::ostream &operator*() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string join(const std::vector<Vertex> &v, const char *sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? sep : "") + std::to_string(v[k] + 1);
  return s;
}

std::vector<Vertex> one_based(std::vector<Vertex> v) {
  for (auto &x: v)
    ++x;
  return v;
}

int exit_for(const MatchResult &r) {
  return r.verdict == Verdict::kAborted ? kAborted : kOk;
}

int cmd_check(const Options &o, const std::string &ga, const std::string &ha) {
  const Graph g = load_graph(ga, o), h = load_graph(ha, o);
  if (g.size() != h.size())
    throw UsageError("graphs differ in size");
  const MatchConfig cfg = make_config(o);
  const MatchResult r = run_algorithm(algorithm_from_string(o.algorithm), g, h, cfg);
  Output out(o.out);
  if (o.json) {
    Json j = to_json(r);
    j["algorithm"] = o.algorithm;
    j["config"] = to_json(cfg);
    *out << j.dump() << '\n';
  } else {
    *out << to_string(r.verdict) << " (" << r.reason << ")";
    if (r.heuristic)
      *out << " heuristic";
    *out << '\n';
    if (r.phi)
      *out << "phi: " << join(r.phi->map()) << (r.verified ? " verified" : " NOT verified")
           << '\n';
    if (r.verdict == Verdict::kIsomorphic && !r.mistake_bound.is_zero())
      *out << "mistake bound: 10^" << std::fixed << std::setprecision(2)
           << r.mistake_bound.log10 << '\n';
  }
  return exit_for(r);
}

struct CorpusOptions {
  std::optional<std::string> file;
  std::optional<std::size_t> random_n;
  std::size_t count = 100;
  double p = 0.5;
  double iso = 0.5;
  std::optional<std::size_t> srg;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

void add_corpus_options(CLI::App *cmd, CorpusOptions &c) {
  cmd->add_option("--random", c.random_n, "generate random pairs on N vertices");
  cmd->add_option("--count", c.count, "number of random pairs");
  cmd->add_option("--p", c.p, "edge probability");
  cmd->add_option("--iso", c.iso, "fraction of isomorphic pairs");
  cmd->add_option("--srg", c.srg, "permuted strongly regular pairs (plus the non-isomorphic pair)");
}

Corpus make_corpus(const CorpusOptions &c, std::uint64_t seed) {
  Corpus corpus;
  if (c.file) {
    std::ifstream in(*c.file);
    if (!in)
      throw UsageError("cannot open " + *c.file);
    try {
      corpus = read_corpus(in);
    } catch (const std::invalid_argument &e) {
      throw UsageError(*c.file + ": " + e.what());
    }
  }
  try {
    if (c.random_n) {
      auto r = generate_random_pairs(*c.random_n, c.count, c.p, c.iso, seed);
      corpus.insert(corpus.end(), r.begin(), r.end());
    }
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (c.srg) {
    auto s = srg_corpus(*c.srg, seed);
    corpus.insert(corpus.end(), s.begin(), s.end());
  }
  if (corpus.empty())
    throw UsageError("empty corpus: give a corpus file, --random or --srg");
  return corpus;
}

int cmd_bench(const Options &o, const CorpusOptions &c) {
  const Corpus corpus = make_corpus(c, o.seed);
  const MatchConfig cfg = make_config(o);
  const RunReport report = run(corpus, algorithm_from_string(o.algorithm), cfg,
                               c.threads);
  Output out(o.out);
  write_report(*out, report);
  const auto &k = report.counts;
  std::cerr << report.pairs.size() << " pairs: " << k.correct << " correct, "
            << k.false_isomorphic << " false-isomorphic, " << k.false_non_isomorphic
            << " false-non-isomorphic, " << k.aborted << " aborted, "
            << k.unknown_truth << " unknown, " << k.errors << " errors\n";
  return kOk;
}

int cmd_gen(const Options &o, const CorpusOptions &c) {
  const Corpus corpus = make_corpus(c, o.seed);
  Output out(o.out);
  write_corpus(*out, corpus);
  return kOk;
}

std::string fixed3(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << x;
  return s.str();
}

int cmd_trace(const Options &o, const std::string &ga, const std::string &ha,
              const std::vector<std::string> &eps, bool csv) {
  const Graph g = load_graph(ga, o), h = load_graph(ha, o);
  if (g.size() != h.size())
    throw UsageError("graphs differ in size");
  const MatchConfig cfg = make_config(o);
  TraceOptions opt;
  for (const auto &e: eps)
    opt.epsilons.push_back(parse_decimal(e, "--eps"));
  opt.gs_iterations = o.gs_iters.value_or(10);
  opt.gs_bits = o.mantissa_bits.value_or(BoundedFloat::kDoubleBits);
  Trace t;
  try {
    t = candidate_trace(g, h, cfg, opt);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  const std::size_t n = g.size();
  Output out(o.out);
  if (o.json) {
    Json rows = Json::array();
    for (const auto &r: t.rows) {
      Json j;
      j["iteration"] = r.iteration;
      j["epsilon"] = r.epsilon ? Json(r.epsilon->to_string()) : Json(nullptr);
      j["source"] = r.source ? Json(*r.source + 1) : Json(nullptr);
      Json cands = Json::array();
      for (const auto &c: r.candidates)
        cands.push_back(one_based(c));
      j["candidates"] = cands;
      j["aut_g"] = r.aut_g ? Json(*r.aut_g) : Json(nullptr);
      j["aut_h"] = r.aut_h ? Json(*r.aut_h) : Json(nullptr);
      j["inverse_diagonal_g"] = r.inverse_diagonal_g;
      j["inverse_diagonal_h"] = r.inverse_diagonal_h;
      rows.push_back(j);
    }
    *out << Json {{"rows", rows}, {"complete", t.complete}}.dump(2) << '\n';
    return kOk;
  }
  const char *sep = csv ? "," : " | ";
  auto cell = [&](const std::vector<Vertex> &c) {
    return c.empty() ? std::string("-") : join(c, csv ? " " : ",");
  };
  *out << "i" << sep << "eps";
  for (std::size_t v = 0; v < n; ++v)
    *out << sep << "phi(" << v + 1 << ")";
  *out << sep << "|Aut(G)|";
  for (std::size_t v = 0; v < n; ++v)
    *out << sep << "inv" << v + 1 << v + 1;
  *out << '\n';
  for (const auto &r: t.rows) {
    *out << r.iteration << sep << (r.epsilon ? r.epsilon->to_string() : "0");
    for (const auto &c: r.candidates)
      *out << sep << cell(c);
    *out << sep << (r.aut_g ? std::to_string(*r.aut_g) : "n/a");
    for (double x: r.inverse_diagonal_g)
      *out << sep << fixed3(x);
    *out << '\n';
  }
  if (!t.complete && !csv)
    *out << "(stopped: no admissible image for the next vertex)\n";
  return kOk;
}

int cmd_expand(const Options &o, const std::string &ga, std::size_t limit) {
  const Graph g = load_graph(ga, o);
  CoefficientTable t;
  try {
    t = expand_eta(g.adjacency(), limit);
  } catch (const ExpansionLimitError &e) {
    throw UsageError(e.what());
  }
  Output out(o.out);
  if (o.json)
    *out << to_json(t).dump() << '\n';
  else
    *out << to_string(t) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app {"Graph isomorphism testing by point evaluation of det(A + X)"};
  app.require_subcommand(1);
  Options o;
  CorpusOptions c;

  std::string ga, ha;
  auto *check = app.add_subcommand("check", "decide whether two graphs are isomorphic");
  add_common(check, o);
  check->add_option("first", ga, "graph file, builtin:NAME or g6:STRING")->required();
  check->add_option("second", ha, "graph file, builtin:NAME or g6:STRING")->required();
  check->add_flag("--json", o.json, "JSON output");

  auto *bench = app.add_subcommand("bench", "run an algorithm over a corpus");
  add_common(bench, o);
  add_corpus_options(bench, c);
  bench->add_option("corpus", c.file, "corpus file (JSON lines)");
  bench->add_option("--threads", c.threads, "worker threads");

  std::vector<std::string> eps;
  bool csv = false;
  auto *trace = app.add_subcommand("trace", "candidate sets and inverse diagonals per step");
  add_common(trace, o);
  trace->add_option("first", ga)->required();
  trace->add_option("second", ha)->required();
  trace->add_option("--eps", eps, "epsilon sequence, used before random draws")
      ->delimiter(',');
  trace->add_flag("--json", o.json, "JSON output");
  trace->add_flag("--csv", csv, "CSV output");

  std::size_t limit = kDefaultExpansionLimit;
  auto *expand = app.add_subcommand("expand", "all coefficients of det(A + X)");
  add_common(expand, o);
  expand->add_option("graph", ga, "graph file, builtin:NAME or g6:STRING")->required();
  expand->add_option("--limit", limit, "largest vertex count to expand");
  expand->add_flag("--json", o.json, "JSON output");

  auto *gen = app.add_subcommand("gen", "write a corpus as JSON lines");
  add_common(gen, o);
  add_corpus_options(gen, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check)
      return cmd_check(o, ga, ha);
    if (*bench)
      return cmd_bench(o, c);
    if (*trace)
      return cmd_trace(o, ga, ha, eps, csv);
    if (*expand)
      return cmd_expand(o, ga, limit);
    if (*gen)
      return cmd_gen(o, c);
  } catch (const UsageError &e) {
    std::cerr << "polyiso: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "polyiso: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
