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

#include "lemma_forge/select.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lemma_forge {
namespace {

std::vector<LemmaIndex> mask_indices(const NodeMask& mask) {
  std::vector<LemmaIndex> out;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (mask[k]) out.push_back(static_cast<LemmaIndex>(k + 1));
  }
  return out;
}

}  // namespace

void select_schedule(
    const ProofGraph& graph, Metric metric, const MetricParams& params,
    const std::vector<LemmaIndex>& named0, std::size_t count,
    std::size_t emit_every,
    const std::function<void(const SelectionResult&)>& emit,
    const WarningSink& warn) {
  if (emit_every == 0) throw std::invalid_argument("emit_every must be >= 1");
  params.validate();

  NodeMask named(graph.size(), 0);
  for (LemmaIndex i : named0) {
    if (i < 1 || i > graph.size()) {
      throw std::out_of_range("initial named lemma " + std::to_string(i) +
                              " outside the graph");
    }
    named[i - 1] = 1;
  }
  std::size_t eligible = 0;
  for (LemmaIndex i = 1; i <= graph.size(); ++i) {
    if (!named[i - 1] && !graph.axiom(i)) ++eligible;
  }
  if (count > eligible) {
    if (warn) {
      warn("requested " + std::to_string(count) + " lemmas but only " +
           std::to_string(eligible) + " are eligible");
    }
    count = eligible;
  }

  SelectionResult result;
  auto snapshot = [&] {
    result.named_final = mask_indices(named);
    if (emit) emit(result);
  };
  if (count == 0) {
    snapshot();
    return;
  }

  // Named-independent scores are computed once and walked in rank order.
  std::vector<LemmaIndex> fixed_order;
  ScoreVector fixed_scores;
  std::size_t fixed_pos = 0;
  if (!depends_on_named(metric)) {
    fixed_scores = compute_metric(graph, named, metric, params);
    fixed_order = rank_order(fixed_scores);
  }

  while (result.chosen.size() < count) {
    Selection best;
    if (depends_on_named(metric)) {
      const ScoreVector scores = compute_metric(graph, named, metric, params);
      for (LemmaIndex i = 1; i <= graph.size(); ++i) {
        if (named[i - 1] || graph.axiom(i)) continue;
        if (best.index == 0 ||
            ranks_before(scores.at(i), i, best.score, best.index)) {
          best = {i, scores.at(i)};
        }
      }
    } else {
      while (named[fixed_order[fixed_pos] - 1] ||
             graph.axiom(fixed_order[fixed_pos])) {
        ++fixed_pos;
      }
      const LemmaIndex i = fixed_order[fixed_pos];
      best = {i, fixed_scores.at(i)};
    }
    named[best.index - 1] = 1;
    result.chosen.push_back(best);
    if (result.chosen.size() % emit_every == 0 ||
        result.chosen.size() == count) {
      snapshot();
    }
  }
}

SelectionResult best_lemmas(const ProofGraph& graph, Metric metric,
                            const MetricParams& params,
                            const std::vector<LemmaIndex>& named0,
                            std::size_t count, const WarningSink& warn) {
  SelectionResult last;
  select_schedule(
      graph, metric, params, named0, count,
      std::max<std::size_t>(count, 1),
      [&](const SelectionResult& r) { last = r; }, warn);
  return last;
}

}  // namespace lemma_forge
