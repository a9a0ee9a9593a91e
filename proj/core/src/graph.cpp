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

#include "lemma_forge/graph.hpp"

#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace lemma_forge {

AxiomTags::AxiomTags(std::string_view tags) {
  for (char c : tags) {
    if (c < 'A' || c > 'Z') {
      throw std::invalid_argument(std::string("axiom tag '") + c +
                                  "' is not an uppercase letter");
    }
    bits_.set(c - 'A');
  }
}

std::string AxiomTags::str() const {
  std::string out;
  for (int b = 0; b < 26; ++b) {
    if (bits_.test(b)) out.push_back(static_cast<char>('A' + b));
  }
  return out;
}

std::vector<LemmaIndex> ProofGraph::named_indices() const {
  std::vector<LemmaIndex> out;
  for (LemmaIndex i = 1; i <= size(); ++i) {
    if (named(i)) out.push_back(i);
  }
  return out;
}

ProofGraph build_graph(ProofTrace trace, const NamedMap& names,
                       const AxiomTags& axiom_tags) {
  const std::size_t n = trace.size();
  if (!names.empty() && names.rbegin()->first > n) {
    throw InputError("name for lemma " +
                     std::to_string(names.rbegin()->first) +
                     " but the trace has only " + std::to_string(n) +
                     " lemmas");
  }

  ProofGraph g;
  // Counting sort into CSR; scanning users in ascending order leaves every
  // u(i) sorted.
  g.use_offsets_.assign(n + 1, 0);
  for (LemmaIndex i = 1; i <= n; ++i) {
    for (LemmaIndex dep : trace.deps(i)) ++g.use_offsets_[dep];
  }
  for (std::size_t i = 1; i <= n; ++i) {
    g.use_offsets_[i] += g.use_offsets_[i - 1];
  }
  g.uses_.resize(trace.edge_count());
  std::vector<std::uint64_t> cursor(g.use_offsets_.begin(),
                                    g.use_offsets_.end() - 1);
  for (LemmaIndex i = 1; i <= n; ++i) {
    for (LemmaIndex dep : trace.deps(i)) g.uses_[cursor[dep - 1]++] = i;
  }

  g.named_.assign(n, 0);
  for (const auto& entry : names) g.named_[entry.first - 1] = 1;
  g.axiom_.assign(n, 0);
  for (LemmaIndex i = 1; i <= n; ++i) {
    g.axiom_[i - 1] = axiom_tags.contains(trace.kind(i)) ? 1 : 0;
  }
  g.names_ = names;
  g.axiom_tags_ = axiom_tags;
  g.trace_ = std::move(trace);
  return g;
}

ProofGraph prefix_subgraph(const ProofGraph& graph, LemmaIndex j) {
  if (j < 1 || j > graph.size()) {
    throw std::out_of_range("prefix bound " + std::to_string(j) +
                            " outside 1.." + std::to_string(graph.size()));
  }
  const auto& names = graph.names();
  NamedMap kept(names.begin(), names.lower_bound(j));
  return build_graph(graph.trace().prefix(j - 1), kept, graph.axiom_tags());
}

CorpusStats stats(const ProofGraph& graph, const NormalFormMap& normal_forms) {
  CorpusStats s;
  s.nodes = graph.size();
  s.edges = graph.edge_count();
  std::unordered_set<std::string_view> forms;
  for (LemmaIndex i = 1; i <= graph.size(); ++i) {
    if (graph.named(i)) ++s.named;
    if (graph.axiom(i)) ++s.axioms;
    if (graph.deps(i).empty() && !graph.axiom(i)) ++s.zero_dep_non_axioms;
    auto it = normal_forms.find(i);
    if (it == normal_forms.end()) {
      ++s.distinct_normal_forms;
    } else if (forms.insert(it->second).second) {
      ++s.distinct_normal_forms;
    }
  }
  return s;
}

void write_stats(const CorpusStats& s, std::ostream& out) {
  out << "nodes\t" << s.nodes << '\n'
      << "edges\t" << s.edges << '\n'
      << "named\t" << s.named << '\n'
      << "axioms\t" << s.axioms << '\n'
      << "distinct_normal_forms\t" << s.distinct_normal_forms << '\n'
      << "zero_dep_non_axioms\t" << s.zero_dep_non_axioms << '\n';
}

}  // namespace lemma_forge
