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

#include "lemma_forge/scenarios.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace lemma_forge {
namespace {

void sort_unique(std::vector<LemmaIndex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void write_index_line(LemmaIndex head, const std::vector<LemmaIndex>& tail,
                      std::ostream& out) {
  out << head << ':';
  for (LemmaIndex p : tail) out << ' ' << p;
  out << '\n';
}

}  // namespace

FrontierIndex::FrontierIndex(const ProofGraph& graph,
                             const std::vector<LemmaIndex>& members)
    : graph_(graph), member_(graph.size(), 0), memo_(graph.size()) {
  for (LemmaIndex m : members) {
    if (m < 1 || m > graph.size()) {
      throw std::out_of_range("lemma " + std::to_string(m) +
                              " outside the graph");
    }
    member_[m - 1] = 1;
  }
}

const std::vector<LemmaIndex>& FrontierIndex::expand(LemmaIndex i) {
  if (memo_[i - 1]) return *memo_[i - 1];
  // Post-order over the non-member ancestors still missing a memo entry.
  std::vector<LemmaIndex> stack{i};
  while (!stack.empty()) {
    const LemmaIndex x = stack.back();
    if (memo_[x - 1]) {
      stack.pop_back();
      continue;
    }
    bool pending = false;
    for (LemmaIndex d : graph_.deps(x)) {
      if (!is_member(d) && !memo_[d - 1]) {
        stack.push_back(d);
        pending = true;
      }
    }
    if (pending) continue;
    stack.pop_back();
    std::vector<LemmaIndex> frontier;
    for (LemmaIndex d : graph_.deps(x)) {
      if (is_member(d)) {
        frontier.push_back(d);
      } else {
        const auto& sub = *memo_[d - 1];
        frontier.insert(frontier.end(), sub.begin(), sub.end());
      }
    }
    sort_unique(frontier);
    memo_[x - 1] = std::move(frontier);
  }
  return *memo_[i - 1];
}

std::vector<LemmaIndex> FrontierIndex::frontier_of(LemmaIndex i) {
  if (i < 1 || i > graph_.size()) {
    throw std::out_of_range("lemma " + std::to_string(i) + " outside the graph");
  }
  if (!is_member(i)) return expand(i);
  std::vector<LemmaIndex> frontier;
  for (LemmaIndex d : graph_.deps(i)) {
    if (is_member(d)) {
      frontier.push_back(d);
    } else {
      const auto& sub = expand(d);
      frontier.insert(frontier.end(), sub.begin(), sub.end());
    }
  }
  sort_unique(frontier);
  return frontier;
}

const std::vector<LemmaIndex>& DerivedGraph::parents_of(LemmaIndex t) const {
  auto it = std::lower_bound(members.begin(), members.end(), t);
  if (it == members.end() || *it != t) {
    throw std::out_of_range("lemma " + std::to_string(t) +
                            " is not in the derived graph");
  }
  return parents[static_cast<std::size_t>(it - members.begin())];
}

DerivedGraph derive_new_graph(const ProofGraph& graph,
                              const std::vector<LemmaIndex>& new_thms) {
  DerivedGraph dg;
  dg.members = new_thms;
  sort_unique(dg.members);
  FrontierIndex index(graph, dg.members);
  dg.parents.reserve(dg.members.size());
  for (LemmaIndex t : dg.members) dg.parents.push_back(index.frontier_of(t));
  return dg;
}

std::vector<LemmaIndex> closest_named_ancestors(
    const ProofGraph& graph, LemmaIndex i,
    const std::vector<LemmaIndex>& anchors) {
  FrontierIndex index(graph, anchors);
  return index.frontier_of(i);
}

bool directly_preceding(const ProofGraph& graph,
                        const std::vector<LemmaIndex>& orig_sorted,
                        LemmaIndex p, LemmaIndex t) {
  if (p > t || graph.axiom(p)) return false;
  if (std::binary_search(orig_sorted.begin(), orig_sorted.end(), p)) {
    return false;
  }
  // Start of t's segment: the largest original theorem below t.
  auto it = std::lower_bound(orig_sorted.begin(), orig_sorted.end(), t);
  const LemmaIndex previous = it == orig_sorted.begin() ? 0 : *std::prev(it);
  return p > previous;
}

ProblemSet emit_problems(const ProofGraph& graph, const DerivedGraph& dg,
                         const std::vector<LemmaIndex>& orig,
                         ProblemMode mode) {
  std::vector<LemmaIndex> orig_sorted = orig;
  sort_unique(orig_sorted);
  for (LemmaIndex t : orig_sorted) {
    if (!std::binary_search(dg.members.begin(), dg.members.end(), t)) {
      throw std::invalid_argument("original theorem " + std::to_string(t) +
                                  " is not a member of the derived graph");
    }
  }

  ProblemSet set;
  set.mode = mode;
  std::optional<FrontierIndex> orig_frontiers;
  for (LemmaIndex t : orig_sorted) {
    Problem problem{t, dg.parents_of(t)};
    if (mode == ProblemMode::kAlmostHonest) {
      std::vector<LemmaIndex> premises;
      for (LemmaIndex p : problem.premises) {
        if (!directly_preceding(graph, orig_sorted, p, t)) {
          premises.push_back(p);
          continue;
        }
        if (!orig_frontiers) orig_frontiers.emplace(graph, orig_sorted);
        const auto replacement = orig_frontiers->frontier_of(p);
        premises.insert(premises.end(), replacement.begin(),
                        replacement.end());
      }
      sort_unique(premises);
      problem.premises = std::move(premises);
    }
    set.problems.push_back(std::move(problem));
  }
  return set;
}

void write_problems(const ProblemSet& problems, std::ostream& out) {
  for (const auto& p : problems.problems) {
    write_index_line(p.conjecture, p.premises, out);
  }
}

ChainLevels chain_closure(const std::vector<LemmaIndex>& orig,
                          const ProvableRounds& provable) {
  std::vector<LemmaIndex> orig_sorted = orig;
  sort_unique(orig_sorted);
  ChainLevels levels;
  for (const auto& [lemma, rounds] : provable) {
    if (std::binary_search(orig_sorted.begin(), orig_sorted.end(), lemma)) {
      continue;
    }
    std::optional<unsigned> level;
    if (!rounds.empty()) level = *std::min_element(rounds.begin(), rounds.end());
    levels.emplace(lemma, level);
  }
  return levels;
}

ProvableRounds load_provable(std::istream& in) {
  ProvableRounds provable;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    auto parse = [&](const std::string& text) -> unsigned long {
      if (text.empty() ||
          text.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected a non-negative integer, got '" + text +
                         "'");
      }
      return std::stoul(text);
    };
    const auto lemma = static_cast<LemmaIndex>(parse(token));
    if (lemma == 0) {
      throw InputError("line " + std::to_string(line_no) +
                       ": lemma index 0 is out of range");
    }
    auto& rounds = provable[lemma];
    while (fields >> token) rounds.push_back(static_cast<unsigned>(parse(token)));
  }
  return provable;
}

void write_chain_levels(const ChainLevels& levels, std::ostream& out) {
  for (const auto& [lemma, level] : levels) {
    out << lemma << '\t';
    if (level) {
      out << *level;
    } else {
      out << "none";
    }
    out << '\n';
  }
}

void export_chrono_dataset(const ProofGraph& graph, const DerivedGraph& dg,
                           std::ostream& out) {
  for (std::size_t k = 0; k < dg.members.size(); ++k) {
    if (dg.members[k] > graph.size()) {
      throw std::out_of_range("derived graph does not belong to this graph");
    }
    write_index_line(dg.members[k], dg.parents[k], out);
  }
}

std::vector<LemmaIndex> honest_sample(const ProofGraph& graph,
                                      std::size_t step) {
  if (step == 0) throw std::invalid_argument("step must be >= 1");
  const auto named = graph.named_indices();
  std::vector<LemmaIndex> sample;
  for (std::size_t k = 0; k < named.size(); k += step) {
    sample.push_back(named[k]);
  }
  return sample;
}

void fully_honest_schedule(
    const ProofGraph& graph, Metric metric, const MetricParams& params,
    std::size_t step, std::size_t count,
    const std::function<void(LemmaIndex, const SelectionResult&)>& emit,
    const WarningSink& warn) {
  params.validate();
  const auto sample = honest_sample(graph, step);
  const unsigned workers = std::max(1u, params.threads);
  MetricParams inner = params;
  inner.threads = 1;

  // Runs are independent; process them in batches so results can be
  // emitted in order without holding every run in memory.
  for (std::size_t begin = 0; begin < sample.size(); begin += workers) {
    const std::size_t end = std::min(sample.size(), begin + workers);
    std::vector<SelectionResult> results(end - begin);
    std::vector<std::vector<std::string>> warnings(end - begin);
    internal::parallel_for(
        end - begin, workers, [&](std::size_t b, std::size_t e) {
          for (std::size_t k = b; k < e; ++k) {
            const LemmaIndex j = sample[begin + k];
            const ProofGraph prefix = prefix_subgraph(graph, j);
            results[k] = best_lemmas(
                prefix, metric, inner, prefix.named_indices(), count,
                [&](const std::string& w) {
                  warnings[k].push_back("theorem " + std::to_string(j) +
                                        ": " + w);
                });
          }
        });
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (warn) {
        for (const auto& w : warnings[k]) warn(w);
      }
      if (emit) emit(sample[begin + k], results[k]);
    }
  }
}

}  // namespace lemma_forge
