// Copyright 2026 The Lemma Forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "lemma_forge/select.hpp"
#include "oracles.hpp"

namespace lemma_forge {
namespace {

using Indices = std::vector<LemmaIndex>;

std::vector<std::size_t> snapshot_sizes(const ProofGraph& g, std::size_t count,
                                        std::size_t every,
                                        std::vector<SelectionResult>* all = nullptr) {
  std::vector<std::size_t> sizes;
  select_schedule(g, Metric::kQ1, {}, {}, count, every,
                  [&](const SelectionResult& r) {
                    sizes.push_back(r.chosen.size());
                    if (all) all->push_back(r);
                  });
  return sizes;
}

TEST(BestLemmas, G5ExtendsNamedTheorems) {
  const ProofGraph g = testing::g5();
  const auto r = best_lemmas(g, Metric::kQ1, {}, {5}, 1);
  // Axiom 1 scores 1.0 but is never eligible; 3 is the best non-axiom.
  ASSERT_EQ(r.chosen.size(), 1u);
  EXPECT_EQ(r.chosen[0], (Selection{3, 0.8}));
  EXPECT_EQ(r.named_final, (Indices{3, 5}));
}

TEST(BestLemmas, CountZero) {
  const auto r = best_lemmas(testing::g5(), Metric::kQ1, {}, {5}, 0);
  EXPECT_TRUE(r.chosen.empty());
  EXPECT_EQ(r.named_final, Indices{5});
}

TEST(BestLemmas, FromScratchTieBreak) {
  // Nothing named: every U is 0, every Q1 is 0, lowest eligible index wins.
  const auto r = best_lemmas(testing::g5(), Metric::kQ1, {}, {}, 1);
  ASSERT_EQ(r.chosen.size(), 1u);
  EXPECT_EQ(r.chosen[0], (Selection{3, 0.0}));
}

TEST(BestLemmas, PageRankIsOneSort) {
  const ProofGraph g = testing::g5();
  MetricParams p;
  const auto r = best_lemmas(g, Metric::kPR2, p, {5}, 2);
  const auto scores = compute_metric(g, Metric::kPR2, p);
  Indices expected;
  for (LemmaIndex i : rank_order(scores)) {
    if (!g.axiom(i) && i != 5) expected.push_back(i);
  }
  ASSERT_EQ(r.chosen.size(), 2u);
  EXPECT_EQ(r.chosen[0].index, expected[0]);
  EXPECT_EQ(r.chosen[1].index, expected[1]);
  EXPECT_EQ(r.chosen[0].score, scores.at(expected[0]));
}

TEST(BestLemmas, TooManyRequestedWarns) {
  std::vector<std::string> warnings;
  const auto r = best_lemmas(testing::g5(), Metric::kQ2, {}, {5}, 10,
                             [&](const std::string& w) { warnings.push_back(w); });
  EXPECT_EQ(r.chosen.size(), 2u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(BestLemmas, Errors) {
  const ProofGraph g = testing::g5();
  EXPECT_THROW(best_lemmas(g, Metric::kQ1, {}, {6}, 1), std::out_of_range);
  MetricParams bad;
  bad.damping = 2;
  EXPECT_THROW(best_lemmas(g, Metric::kQ1, bad, {}, 1), std::invalid_argument);
}

TEST(SelectSchedule, Snapshots) {
  const ProofGraph g = testing::g5();
  std::vector<SelectionResult> all;
  EXPECT_EQ(snapshot_sizes(g, 3, 1, &all), (std::vector<std::size_t>{1, 2, 3}));
  for (std::size_t k = 0; k + 1 < all.size(); ++k) {
    for (std::size_t m = 0; m < all[k].chosen.size(); ++m) {
      EXPECT_EQ(all[k].chosen[m], all.back().chosen[m]);
    }
  }
  EXPECT_EQ(all.back().chosen, best_lemmas(g, Metric::kQ1, {}, {}, 3).chosen);
  EXPECT_EQ(snapshot_sizes(g, 3, 3), std::vector<std::size_t>{3});
  EXPECT_EQ(snapshot_sizes(g, 3, 2), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(snapshot_sizes(g, 3, 0), std::invalid_argument);
}

class SelectProperties : public ::testing::TestWithParam<Metric> {};

TEST_P(SelectProperties, AgreeWithNaiveReference) {
  const Metric metric = GetParam();
  std::mt19937_64 rng(53 + static_cast<int>(metric));
  testing::RandomGraphOptions opts;
  opts.max_nodes = 30;
  MetricParams p;
  if (metric == Metric::kQ1r) p.r = 0.5;
  for (int trial = 0; trial < 40; ++trial) {
    const ProofGraph g = testing::random_graph(rng, opts);
    const auto named0 = trial % 2 ? g.named_indices() : Indices{};
    const std::size_t m = rng() % 8;
    const auto r = best_lemmas(g, metric, p, named0, m);
    EXPECT_EQ(r.chosen, testing::naive_best_lemmas(g, metric, p, named0, m));

    const auto longer = best_lemmas(g, metric, p, named0, m + 1);
    ASSERT_GE(longer.chosen.size(), r.chosen.size());
    EXPECT_TRUE(std::equal(r.chosen.begin(), r.chosen.end(),
                           longer.chosen.begin()));
    EXPECT_EQ(best_lemmas(g, metric, p, named0, m).chosen, r.chosen);

    NodeMask named(g.size(), 0);
    for (LemmaIndex i : r.named_final) named[i - 1] = 1;
    const auto d = compute_D(g, named), u = compute_U(g, named);
    for (const auto& s : r.chosen) {
      EXPECT_FALSE(g.axiom(s.index));
      EXPECT_EQ(std::count(named0.begin(), named0.end(), s.index), 0);
      EXPECT_EQ(d.at(s.index), 1.0);
      EXPECT_EQ(u.at(s.index), 1.0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Metrics, SelectProperties,
                         ::testing::Values(Metric::kQ1, Metric::kQ1r,
                                           Metric::kQ2, Metric::kQ3,
                                           Metric::kEQ1, Metric::kEQ2));

}  // namespace
}  // namespace lemma_forge
