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

#include <cmath>
#include <limits>
#include <random>

#include "lemma_forge/exact.hpp"
#include "lemma_forge/metrics.hpp"
#include "oracles.hpp"

namespace lemma_forge {
namespace {

using Values = std::vector<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(BaseQuantities, G5) {
  const ProofGraph g = testing::g5();
  EXPECT_EQ(compute_D(g).values, (Values{1, 1, 2, 3, 1}));
  EXPECT_EQ(compute_U(g).values, (Values{3, 2, 2, 1, 1}));
  EXPECT_EQ(compute_L(g).values, (Values{1, 1, 2, 3, 1}));
}

TEST(BaseQuantities, LeafConventions) {
  // 1: unnamed non-axiom leaf, 2: axiom, 3: unused.
  const ProofGraph g =
      build_graph(parse_trace_string("R1\nA1\nC1 1 2\n"), {}, AxiomTags("A"));
  EXPECT_EQ(compute_D(g).values, (Values{0, 1, 1}));
  EXPECT_EQ(compute_L(g).values, (Values{0, 1, 2}));
  EXPECT_EQ(compute_U(g).values, (Values{0, 0, 0}));
}

TEST(BaseQuantities, NamingShortCircuits) {
  std::string text;
  for (int i = 0; i < 50; ++i) text += "A1\n";
  text += "C1";
  for (int i = 1; i <= 50; ++i) text += " " + std::to_string(i);
  text += "\n";
  for (int i = 0; i < 50; ++i) text += "C1 51\n";
  const ProofGraph g = build_graph(parse_trace_string(text), {{51, "HUB"}},
                                   AxiomTags("A"));
  EXPECT_EQ(compute_D(g).at(51), 1.0);
  EXPECT_EQ(compute_U(g).at(51), 1.0);
}

// D(i)=0 iff i is unnamed, not an axiom and all of d(i) have D=0 (in
// particular every unnamed non-axiom leaf); likewise U(i)=0 iff i is unnamed
// and all its users have U=0. Naming j forces D(j)=U(j)=1.
TEST(BaseQuantities, ZeroCharacterizationProperty) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const ProofGraph g = testing::random_graph(rng);
    const auto d = compute_D(g), u = compute_U(g);
    for (LemmaIndex i = 1; i <= g.size(); ++i) {
      bool deps_zero = true, uses_zero = true;
      for (LemmaIndex j : g.deps(i)) deps_zero = deps_zero && d.at(j) == 0;
      for (LemmaIndex j : g.uses(i)) uses_zero = uses_zero && u.at(j) == 0;
      EXPECT_EQ(d.at(i) == 0, !g.named(i) && !g.axiom(i) && deps_zero);
      EXPECT_EQ(u.at(i) == 0, !g.named(i) && uses_zero);
      if (!g.named(i) && !g.axiom(i) && g.deps(i).empty()) {
        EXPECT_EQ(d.at(i), 0.0);
      }
      if (!g.named(i) && g.uses(i).empty()) EXPECT_EQ(u.at(i), 0.0);
    }
    NodeMask named = g.named_mask();
    const auto j = static_cast<LemmaIndex>(1 + rng() % g.size());
    named[j - 1] = 1;
    EXPECT_EQ(compute_D(g, named).at(j), 1.0);
    EXPECT_EQ(compute_U(g, named).at(j), 1.0);
  }
}

TEST(BaseQuantities, MatchNaiveRecursion) {
  std::mt19937_64 rng(31);
  testing::RandomGraphOptions opts;
  opts.max_nodes = 30;
  for (int trial = 0; trial < 100; ++trial) {
    const ProofGraph g = testing::random_graph(rng, opts);
    const NodeMask& named = g.named_mask();
    const auto d = compute_D(g), u = compute_U(g), l = compute_L(g);
    const auto d_exact = compute_D_exact(g, named);
    const auto u_exact = compute_U_exact(g, named);
    for (LemmaIndex i = 1; i <= g.size(); ++i) {
      const auto nd = testing::naive_D(g, named, i);
      const auto nu = testing::naive_U(g, named, i);
      EXPECT_EQ(d_exact[i - 1], nd);
      EXPECT_EQ(u_exact[i - 1], nu);
      EXPECT_EQ(d.at(i), nd.convert_to<double>());
      EXPECT_EQ(u.at(i), nu.convert_to<double>());
      EXPECT_EQ(l.at(i), testing::naive_L(g, named, i));
    }
  }
}

TEST(BaseQuantities, DoublingLadderSaturates) {
  // 1200 rungs: D reaches 2^1198, far past the double range.
  const ProofGraph g = testing::doubling_ladder(1200);
  const auto d = compute_D(g);
  for (LemmaIndex i = 2; i <= g.size(); ++i) EXPECT_GE(d.at(i), d.at(i - 1));
  EXPECT_EQ(d.at(1026), kInf);
  EXPECT_EQ(d.at(1025), std::ldexp(1.0, 1023));
  EXPECT_EQ(d.at(g.size()), kInf);
  const auto exact = compute_D_exact(g, g.named_mask());
  EXPECT_EQ(exact[1199], testing::Exact(1) << 1198);
}

TEST(Quality, G5Examples) {
  const ProofGraph g = testing::g5();
  MetricParams p;
  const auto d = compute_D(g), u = compute_U(g), l = compute_L(g);
  auto q = [&](Metric m) { return quality(g, d, u, l, m, p); };
  EXPECT_DOUBLE_EQ(q(Metric::kQ1).at(3), 0.8);
  EXPECT_DOUBLE_EQ(q(Metric::kQ2).at(3), 0.16);
  EXPECT_NEAR(q(Metric::kQ3).at(3), 4 / std::pow(1.1, 5), 1e-15);
  EXPECT_NEAR(q(Metric::kQ3).at(3), 2.48369, 1e-5);
  EXPECT_DOUBLE_EQ(q(Metric::kEQ1).at(3), 0.4);
  EXPECT_DOUBLE_EQ(q(Metric::kEQ2).at(3), 0.4);

  p.r = 0;
  EXPECT_DOUBLE_EQ(quality(g, d, u, l, Metric::kQ1r, p).at(4), 9.0 / 7.0);
  p.r = 2;
  EXPECT_DOUBLE_EQ(quality(g, d, u, l, Metric::kQ1r, p).at(4), 1.0 / 7.0);

  EXPECT_EQ(q(Metric::kQ1).values,
            (Values{1.0, 2.0 / 3.0, 0.8, 3.0 / 7.0, 1.0 / 9.0}));
}

TEST(Quality, Q1rAtOneIsQ1AndQ2TimesSIsQ1) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const ProofGraph g = testing::random_graph(rng);
    MetricParams p;
    p.r = 1.0;
    const auto q1 = compute_metric(g, Metric::kQ1, p);
    const auto q1r = compute_metric(g, Metric::kQ1r, p);
    const auto q2 = compute_metric(g, Metric::kQ2, p);
    EXPECT_EQ(q1.values, q1r.values);
    for (LemmaIndex i = 1; i <= g.size(); ++i) {
      EXPECT_NEAR(q2.at(i) * g.symbol_size(i), q1.at(i),
                  1e-12 * std::max(1.0, q1.at(i)));
    }
  }
}

TEST(Quality, NeverNaN) {
  for (Metric m : {Metric::kQ1, Metric::kQ1r, Metric::kQ2, Metric::kQ3,
                   Metric::kEQ1, Metric::kEQ2}) {
    for (double r : {0.0, 0.5, 1.0, 2.0}) {
      for (double u : {0.0, 1.0, kInf}) {
        for (double d : {0.0, 1.0, kInf}) {
          EXPECT_FALSE(std::isnan(quality_score(m, u, d, d, 7, r)));
        }
      }
    }
  }
  EXPECT_EQ(quality_score(Metric::kQ1, kInf, 0, 0, 3, 1), 0.0);
  EXPECT_EQ(quality_score(Metric::kQ3, kInf, 2, 0, 3, 1), kInf);
}

TEST(Quality, Q3LogSpace) {
  // 1.1^8000 overflows a double; the score itself is representable.
  const double u = 1e200, d = 1e200;
  const double expected = std::exp(2 * 200 * std::log(10.0) - 8000 * std::log(1.1));
  EXPECT_NEAR(quality_score(Metric::kQ3, u, d, 0, 8000, 1) / expected, 1.0,
              1e-10);
  EXPECT_GT(quality_score(Metric::kQ3, u, d, 0, 8000, 1), 0.0);
}

TEST(Quality, RejectsPageRank) {
  const ProofGraph g = testing::g5();
  EXPECT_THROW(quality(g, {}, {}, {}, Metric::kPR1, {}), std::invalid_argument);
}

TEST(ParseMetric, Ids) {
  MetricParams p;
  EXPECT_EQ(parse_metric("q1", p), Metric::kQ1);
  EXPECT_EQ(parse_metric("Q2", p), Metric::kQ2);
  EXPECT_EQ(parse_metric("q1r:0.5", p), Metric::kQ1r);
  EXPECT_EQ(p.r, 0.5);
  EXPECT_EQ(metric_name(Metric::kQ1r, p), "q1r:0.5");
  EXPECT_EQ(parse_metric("pr5", p), Metric::kPR5);
  EXPECT_EQ(parse_metric("eq2", p), Metric::kEQ2);
  EXPECT_THROW(parse_metric("q4", p), std::invalid_argument);
  EXPECT_THROW(parse_metric("q1r:3", p), std::invalid_argument);
  EXPECT_THROW(parse_metric("q1r:", p), std::invalid_argument);
  EXPECT_THROW(parse_metric("q1r:x", p), std::invalid_argument);
}

TEST(MetricParams, Validate) {
  MetricParams p;
  EXPECT_NO_THROW(p.validate());
  p.damping = 1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.pr_tolerance = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.r = 2.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(PageRank, SingleNode) {
  const ProofGraph g = build_graph(parse_trace_string("C4\n"), {}, {});
  EXPECT_DOUBLE_EQ(pagerank(g, {}, RankDirection::kForward).at(1), 1.0);
  EXPECT_DOUBLE_EQ(pr_quality(g, {}, Metric::kPR2).at(1), 0.25);
}

TEST(PageRank, TwoNodeChain) {
  // Closed form with f = 0.85: PR(2) = 0.075 + 0.425 PR(1), PR(1) = 1 - PR(2)
  // gives PR(2) = 0.5 / 1.425.
  const ProofGraph g = build_graph(parse_trace_string("A3\nC5 1\n"), {}, {});
  const auto pr1 = pagerank(g, {}, RankDirection::kForward);
  EXPECT_NEAR(pr1.at(2), 0.5 / 1.425, 1e-12);
  EXPECT_NEAR(pr1.at(1), 1 - 0.5 / 1.425, 1e-12);
  EXPECT_NEAR(pr1.at(1), 0.649123, 1e-6);
  EXPECT_NEAR(pr1.at(2), 0.350877, 1e-6);
  const auto pr2 = pr_quality(g, {}, Metric::kPR2);
  EXPECT_NEAR(pr2.at(1), 0.216374, 1e-6);
  EXPECT_NEAR(pr2.at(2), 0.070175, 1e-6);
  // Reverse direction mirrors the chain.
  const auto pr3 = pagerank(g, {}, RankDirection::kReverse);
  EXPECT_NEAR(pr3.at(2), pr1.at(1), 1e-12);
}

TEST(PageRank, EmptyGraphThrows) {
  EXPECT_THROW(pagerank(build_graph({}, {}, {}), {}, RankDirection::kForward),
               std::invalid_argument);
}

TEST(PageRank, MatchesDenseOracleAndSumsToOne) {
  std::mt19937_64 rng(41);
  testing::RandomGraphOptions opts;
  opts.max_nodes = 60;
  for (int trial = 0; trial < 20; ++trial) {
    const ProofGraph g = testing::random_graph(rng, opts);
    for (bool forward : {true, false}) {
      const auto pr = pagerank(
          g, {}, forward ? RankDirection::kForward : RankDirection::kReverse);
      const auto oracle = testing::dense_pagerank(g, 0.85, forward);
      double sum = 0;
      for (LemmaIndex i = 1; i <= g.size(); ++i) {
        EXPECT_NEAR(pr.at(i), oracle[i - 1], 1e-8);
        EXPECT_GE(pr.at(i), 0.0);
        sum += pr.at(i);
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(PageRank, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(43);
  testing::RandomGraphOptions opts;
  opts.min_nodes = 40000;
  opts.max_nodes = 40000;
  const ProofGraph g = testing::random_graph(rng, opts);
  MetricParams one, four;
  four.threads = 4;
  for (Metric m : {Metric::kPR1, Metric::kPR3, Metric::kPR5}) {
    EXPECT_EQ(pr_quality(g, one, m).values, pr_quality(g, four, m).values);
  }
}

TEST(PrQuality, Composition) {
  std::mt19937_64 rng(47);
  const ProofGraph g = testing::random_graph(rng);
  MetricParams p;
  const auto pr1 = pr_quality(g, p, Metric::kPR1);
  const auto pr3 = pr_quality(g, p, Metric::kPR3);
  const auto pr4 = pr_quality(g, p, Metric::kPR4);
  const auto pr5 = pr_quality(g, p, Metric::kPR5);
  for (LemmaIndex i = 1; i <= g.size(); ++i) {
    EXPECT_EQ(pr5.at(i), (pr1.at(i) + pr3.at(i)) / g.symbol_size(i));
    EXPECT_EQ(pr4.at(i), pr3.at(i) / g.symbol_size(i));
  }
  EXPECT_EQ(pr5.metric_id, "pr5");
}

}  // namespace
}  // namespace lemma_forge
