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

// Greedy best-lemma selection: name the highest scoring unnamed lemma,
// recompute every score against the grown named set, repeat.

#ifndef LEMMA_FORGE_SELECT_HPP_
#define LEMMA_FORGE_SELECT_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "lemma_forge/graph.hpp"
#include "lemma_forge/metrics.hpp"

namespace lemma_forge {

struct Selection {
  LemmaIndex index = 0;
  // Score of the lemma in the round it was chosen.
  double score = 0.0;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct SelectionResult {
  std::vector<Selection> chosen;
  // Initial named set plus everything chosen, ascending.
  std::vector<LemmaIndex> named_final;
};

// Selects up to `count` lemmas. Axioms and members of `named0` are never
// chosen; ties go to the lower index. When fewer than `count` lemmas are
// eligible all of them are chosen and `warn` is told. PageRank metrics do
// not depend on the named set, so they reduce to one sort.
// Throws std::out_of_range when named0 refers past the end of the graph.
SelectionResult best_lemmas(const ProofGraph& graph, Metric metric,
                            const MetricParams& params,
                            const std::vector<LemmaIndex>& named0,
                            std::size_t count, const WarningSink& warn = {});

// Same selection, reporting a snapshot after every `emit_every` choices and
// once more at the end if the last choice did not fall on a boundary. The
// last snapshot equals the best_lemmas result. Throws std::invalid_argument
// when emit_every is 0.
void select_schedule(
    const ProofGraph& graph, Metric metric, const MetricParams& params,
    const std::vector<LemmaIndex>& named0, std::size_t count,
    std::size_t emit_every,
    const std::function<void(const SelectionResult&)>& emit,
    const WarningSink& warn = {});

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_SELECT_HPP_
