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

// Lemma quality metrics.
//
// Base quantities, all relative to a set of named lemmas:
//   D(i)  recursive dependencies; 1 at named lemmas and axioms, otherwise the
//         sum of D over d(i) (so 0 for an unnamed, non-axiom leaf).
//   U(i)  recursive uses; 1 at named lemmas, otherwise the sum of U over the
//         users of i.
//   L(i)  longest inference chain; 1 at named lemmas and axioms, otherwise
//         1 + max L over d(i), 0 when d(i) is empty.
//   S(i)  symbol size recorded in the trace.
//
// D and U count paths and explode combinatorially on real libraries, so they
// are carried as doubles that saturate at +infinity. compute_D_exact in
// exact.hpp gives the big-integer values.
//
// Scores:
//   q1 = U*D/S          q1r:<r> = U^r * D^(2-r) / S
//   q2 = U*D/S^2        q3 = U*D / 1.1^S
//   eq1 = D/S           eq2 = L/S
//   pr1 = PageRank with rank flowing from users to dependencies
//   pr3 = PageRank with rank flowing from dependencies to users
//   pr2 = pr1/S   pr4 = pr3/S   pr5 = (pr1 + pr3)/S

#ifndef LEMMA_FORGE_METRICS_HPP_
#define LEMMA_FORGE_METRICS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "lemma_forge/graph.hpp"
#include "lemma_forge/scores.hpp"

namespace lemma_forge {

enum class Metric { kQ1, kQ1r, kQ2, kQ3, kEQ1, kEQ2, kPR1, kPR2, kPR3, kPR4, kPR5 };

struct MetricParams {
  // Exponent of U in q1r, within [0, 2].
  double r = 1.0;
  // PageRank damping factor f, within (0, 1).
  double damping = 0.85;
  // Power iteration stops once the L1 change of an iteration drops below
  // this, or after pr_max_iters iterations.
  double pr_tolerance = 1e-12;
  int pr_max_iters = 200;
  // Worker threads for PageRank sweeps. Results do not depend on it.
  unsigned threads = 1;

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

// Accepts q1, q1r:<r>, q2, q3, eq1, eq2, pr1 .. pr5 (case-insensitive).
// q1r stores its exponent into params.r. Throws std::invalid_argument for
// anything else.
Metric parse_metric(std::string_view text, MetricParams& params);
std::string metric_name(Metric metric, const MetricParams& params);

bool is_pagerank(Metric metric);
// Whether the score changes when the named set changes.
inline bool depends_on_named(Metric metric) { return !is_pagerank(metric); }
bool uses_dependencies(Metric metric);  // D
bool uses_uses(Metric metric);          // U
bool uses_chain(Metric metric);         // L

ScoreVector compute_D(const ProofGraph& graph, const NodeMask& named);
ScoreVector compute_U(const ProofGraph& graph, const NodeMask& named);
ScoreVector compute_L(const ProofGraph& graph, const NodeMask& named);
inline ScoreVector compute_D(const ProofGraph& graph) {
  return compute_D(graph, graph.named_mask());
}
inline ScoreVector compute_U(const ProofGraph& graph) {
  return compute_U(graph, graph.named_mask());
}
inline ScoreVector compute_L(const ProofGraph& graph) {
  return compute_L(graph, graph.named_mask());
}

// Score of one lemma for a Q or EQ metric. A zero factor wins over an
// infinite one, so the result is never NaN.
double quality_score(Metric metric, double u, double d, double l,
                     std::uint32_t size, double r);

// Q/EQ scores for every lemma. Vectors that the metric does not read may be
// empty. Throws std::invalid_argument for PageRank metrics.
ScoreVector quality(const ProofGraph& graph, const ScoreVector& D,
                    const ScoreVector& U, const ScoreVector& L, Metric metric,
                    const MetricParams& params);

enum class RankDirection {
  kForward,  // pr1: a lemma is important if important lemmas use it
  kReverse,  // pr3: a lemma is important if it uses important lemmas
};

// Damped PageRank by power iteration. Nodes without outgoing links in the
// chosen direction spread their rank uniformly, so the scores sum to 1.
// Throws std::invalid_argument on an empty graph.
ScoreVector pagerank(const ProofGraph& graph, const MetricParams& params,
                     RankDirection direction);

ScoreVector pr_quality(const ProofGraph& graph, const MetricParams& params,
                       Metric metric);

// Computes any metric against the given named set (ignored by PageRank).
ScoreVector compute_metric(const ProofGraph& graph, const NodeMask& named,
                           Metric metric, const MetricParams& params);
inline ScoreVector compute_metric(const ProofGraph& graph, Metric metric,
                                  const MetricParams& params) {
  return compute_metric(graph, graph.named_mask(), metric, params);
}

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_METRICS_HPP_
