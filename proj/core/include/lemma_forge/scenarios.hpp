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

// Inputs for the ATP evaluation scenarios: the derived dependency graph over
// NewThms = BestLemmas + OrigThms, per-theorem premise problems, the
// chronological training sequence for an external premise selector,
// chained-conjecturing levels and prefix-restricted ("fully honest")
// selection runs.

#ifndef LEMMA_FORGE_SCENARIOS_HPP_
#define LEMMA_FORGE_SCENARIOS_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "lemma_forge/graph.hpp"
#include "lemma_forge/metrics.hpp"
#include "lemma_forge/select.hpp"

namespace lemma_forge {

// Nearest-member frontiers over one fixed member set. The frontier of a
// lemma is the set of members reached by following dependency edges and
// stopping at the first member on every path. Frontiers of non-members are
// memoized, so answering many queries costs one pass over their ancestors.
class FrontierIndex {
 public:
  FrontierIndex(const ProofGraph& graph, const std::vector<LemmaIndex>& members);

  bool is_member(LemmaIndex i) const { return member_[i - 1] != 0; }
  // Frontier of i, ascending. i itself is never part of it.
  std::vector<LemmaIndex> frontier_of(LemmaIndex i);

 private:
  const std::vector<LemmaIndex>& expand(LemmaIndex i);

  const ProofGraph& graph_;
  NodeMask member_;
  std::vector<std::optional<std::vector<LemmaIndex>>> memo_;
};

struct DerivedGraph {
  // NewThms, ascending.
  std::vector<LemmaIndex> members;
  // parents[k] belongs to members[k], ascending.
  std::vector<std::vector<LemmaIndex>> parents;

  // Throws std::out_of_range when t is not a member.
  const std::vector<LemmaIndex>& parents_of(LemmaIndex t) const;
};

// Throws std::out_of_range when a member lies outside the graph.
DerivedGraph derive_new_graph(const ProofGraph& graph,
                              const std::vector<LemmaIndex>& new_thms);

// Nearest anchors among the ancestors of i.
std::vector<LemmaIndex> closest_named_ancestors(
    const ProofGraph& graph, LemmaIndex i,
    const std::vector<LemmaIndex>& anchors);

enum class ProblemMode { kCheating, kAlmostHonest };

struct Problem {
  LemmaIndex conjecture = 0;
  std::vector<LemmaIndex> premises;  // ascending

  friend bool operator==(const Problem&, const Problem&) = default;
};

struct ProblemSet {
  ProblemMode mode = ProblemMode::kCheating;
  std::vector<Problem> problems;  // by ascending conjecture
};

// The proof segment of an original theorem t is the index interval
// (previous original theorem, t]. A lemma p is directly preceding for t when
// it lies in that segment and is neither an original theorem nor an axiom.
bool directly_preceding(const ProofGraph& graph,
                        const std::vector<LemmaIndex>& orig_sorted,
                        LemmaIndex p, LemmaIndex t);

// One problem per original theorem with its G_NewThms parents as premises.
// In almost-honest mode each directly preceding premise is replaced by its
// closest original-theorem ancestors. Throws std::invalid_argument when orig
// is not contained in dg.members.
ProblemSet emit_problems(const ProofGraph& graph, const DerivedGraph& dg,
                         const std::vector<LemmaIndex>& orig,
                         ProblemMode mode);

// "CONJ: P1 P2 ..." per problem.
void write_problems(const ProblemSet& problems, std::ostream& out);

// lemma -> rounds of an external chained-conjecturing run in which it was
// proved; round 0 proves from the original theorems alone.
using ProvableRounds = std::map<LemmaIndex, std::vector<unsigned>>;
using ChainLevels = std::map<LemmaIndex, std::optional<unsigned>>;

// Level of every non-original lemma listed in `provable`: the earliest round
// in which it was proved, or none.
ChainLevels chain_closure(const std::vector<LemmaIndex>& orig,
                          const ProvableRounds& provable);

// "INDEX [ROUND ...]" per line; a lemma may appear on several lines.
ProvableRounds load_provable(std::istream& in);
// "INDEX<TAB>LEVEL" per lemma, "none" for unproved lemmas.
void write_chain_levels(const ChainLevels& levels, std::ostream& out);

// Members in trace order as "I: P1 P2 ..." lines.
void export_chrono_dataset(const ProofGraph& graph, const DerivedGraph& dg,
                           std::ostream& out);

// Every step-th named theorem j (counting from the first) in trace order.
std::vector<LemmaIndex> honest_sample(const ProofGraph& graph,
                                      std::size_t step);

// For each sampled theorem j, selects `count` lemmas on the graph of the
// proofs preceding j, starting from the theorems named before j. Runs are
// spread over params.threads workers; `emit` sees them in trace order.
// Throws std::invalid_argument when step is 0.
void fully_honest_schedule(
    const ProofGraph& graph, Metric metric, const MetricParams& params,
    std::size_t step, std::size_t count,
    const std::function<void(LemmaIndex, const SelectionResult&)>& emit,
    const WarningSink& warn = {});

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_SCENARIOS_HPP_
