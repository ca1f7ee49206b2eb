//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <sstream>

#include <gtest/gtest.h>

#include "polyiso/builtin.hpp"
#include "polyiso/corpus.hpp"
#include "polyiso/report.hpp"
#include "test_support.hpp"

using namespace polyiso;
using namespace polyiso::testing;

TEST(Corpus, RandomPairsSplitAndReproducible) {
  const Corpus a = generate_random_pairs(6, 10, 0.5, 0.5, 1);
  const Corpus b = generate_random_pairs(6, 10, 0.5, 0.5, 1);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(a[k].truth, GroundTruth::kIsomorphic);
    ASSERT_TRUE(a[k].witness);
    EXPECT_TRUE(verify_isomorphism(a[k].g, a[k].h, *a[k].witness));
  }
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(a[k].g, b[k].g);
    EXPECT_EQ(a[k].h, b[k].h);
    EXPECT_EQ(a[k].truth, b[k].truth);
    EXPECT_EQ(degree_sequence(a[k].g), degree_sequence(a[k].h));
  }
}

TEST(Corpus, NonIsomorphicEntriesConfirmedByOracle) {
  const Corpus c = generate_random_pairs(7, 30, 0.5, 0, 5);
  std::size_t non_iso = 0;
  for (const auto &e: c) {
    const bool iso = brute_force_isomorphism(e.g, e.h).has_value();
    EXPECT_EQ(e.truth, iso ? GroundTruth::kIsomorphic : GroundTruth::kNotIsomorphic);
    non_iso += !iso;
  }
  EXPECT_GT(non_iso, 20u);
}

TEST(Corpus, FractionOneCarriesWitnesses) {
  for (const auto &e: generate_random_pairs(9, 12, 0.3, 1, 2))
    ASSERT_TRUE(e.witness && verify_isomorphism(e.g, e.h, *e.witness));
  for (const auto &e: generate_random_pairs(12, 4, 0.3, 0, 2))
    EXPECT_EQ(e.truth, GroundTruth::kUnknown);
  EXPECT_THROW(generate_random_pairs(5, 1, 0, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(generate_random_pairs(5, 1, 1, 0.5, 1), std::invalid_argument);
}

TEST(Corpus, StronglyRegularPairs) {
  const Corpus c = srg_corpus(4, 3);
  ASSERT_EQ(c.size(), 5u);
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_TRUE(verify_isomorphism(c[k].g, c[k].h, *c[k].witness));
  EXPECT_EQ(c.back().truth, GroundTruth::kNotIsomorphic);
  EXPECT_TRUE(is_strongly_regular(c.back().h, 16, 6, 2, 2));
}

TEST(CorpusIo, RoundTripAndWitnessCheck) {
  const Corpus c = generate_random_pairs(6, 8, 0.5, 0.5, 9);
  std::stringstream s;
  write_corpus(s, c);
  const Corpus back = read_corpus(s);
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    EXPECT_EQ(back[k].name, c[k].name);
    EXPECT_EQ(back[k].g, c[k].g);
    EXPECT_EQ(back[k].h, c[k].h);
    EXPECT_EQ(back[k].truth, c[k].truth);
    EXPECT_EQ(back[k].witness.has_value(), c[k].witness.has_value());
  }
  std::stringstream bad(
      R"({"name":"x","g":"Bw","h":"Bw","truth":"iso","witness":[0,1]})");
  EXPECT_THROW(read_corpus(bad), std::invalid_argument);
  std::stringstream wrong(
      R"({"name":"x","g":"Bo","h":"BW","truth":"iso","witness":[0,1,2]})");
  EXPECT_THROW(read_corpus(wrong), std::invalid_argument);
}

TEST(Run, RecursiveHasNoErrorsAgainstGroundTruth) {
  Corpus c = generate_random_pairs(6, 40, 0.5, 0.5, 4);
  c.push_back({"example", worked_example_g(), worked_example_h(),
               GroundTruth::kIsomorphic, std::nullopt, "built-in"});
  MatchConfig cfg;
  cfg.seed = 2;
  const RunReport r = run(c, Algorithm::kRecursive, cfg, 3);
  EXPECT_EQ(r.counts.false_isomorphic, 0u);
  EXPECT_EQ(r.counts.false_non_isomorphic, 0u);
  EXPECT_EQ(r.counts.errors, 0u);
  EXPECT_EQ(r.counts.correct, c.size());
  EXPECT_TRUE(r.pairs.back().reverified);
  for (std::size_t k = 0; k < r.pairs.size(); ++k)
    EXPECT_EQ(r.pairs[k].stream, k);
}

TEST(Run, FailuresAreRecordedPerPair) {
  Corpus c;
  c.push_back({"too-big", Graph(14), Graph(14), GroundTruth::kIsomorphic,
               std::nullopt, ""});
  c.push_back({"ok", complete_graph(3), complete_graph(3),
               GroundTruth::kIsomorphic, std::nullopt, ""});
  const RunReport r = run(c, Algorithm::kCoefficient, MatchConfig {});
  EXPECT_TRUE(r.pairs[0].error.has_value());
  EXPECT_FALSE(r.pairs[1].error.has_value());
  EXPECT_EQ(r.counts.errors, 1u);
  EXPECT_EQ(r.counts.correct, 1u);
  EXPECT_THROW(run({}, Algorithm::kDirect, MatchConfig {}), std::invalid_argument);
}

TEST(Report, DeterministicApartFromTiming) {
  const Corpus c = generate_random_pairs(7, 20, 0.5, 0.5, 8);
  MatchConfig cfg;
  cfg.seed = 5;
  std::stringstream a, b;
  write_report(a, run(c, Algorithm::kDirect, cfg, 1));
  write_report(b, run(c, Algorithm::kDirect, cfg, 4));
  std::string la, lb, last;
  std::size_t lines = 0;
  while (std::getline(a, la) && std::getline(b, lb)) {
    Json ja = Json::parse(la), jb = Json::parse(lb);
    strip_timing(ja);
    strip_timing(jb);
    EXPECT_EQ(ja.dump(), jb.dump());
    EXPECT_EQ(ja.dump().find("wall_ms"), std::string::npos);
    last = la;
    ++lines;
  }
  EXPECT_EQ(lines, c.size() + 1);
  const Json summary = Json::parse(last);
  EXPECT_EQ(summary["version"], kVersion);
  EXPECT_EQ(summary["config"]["seed"], 5);
}

TEST(Report, CoefficientTableJson) {
  const Json j = to_json(expand_eta(complete_graph(3).adjacency()));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["coefficients"]["0"], "2");
  EXPECT_EQ(j["coefficients"]["1"], "-1");
  EXPECT_EQ(j["coefficients"]["7"], "1");
}
