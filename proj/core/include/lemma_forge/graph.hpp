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

// The inference DAG. Edges run from a lemma to the lemmas its proof step
// used, so every edge points to a strictly smaller index.

#ifndef LEMMA_FORGE_GRAPH_HPP_
#define LEMMA_FORGE_GRAPH_HPP_

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lemma_forge/trace_io.hpp"

namespace lemma_forge {

// One flag per lemma, slot i - 1 for lemma i.
using NodeMask = std::vector<std::uint8_t>;

// Inference tags that denote logical axioms. Empty by default: the kernel
// tag alphabet is trace specific.
class AxiomTags {
 public:
  AxiomTags() = default;
  // Every character of `tags` must be an uppercase letter.
  explicit AxiomTags(std::string_view tags);

  bool contains(char kind) const {
    return kind >= 'A' && kind <= 'Z' && bits_.test(kind - 'A');
  }
  bool empty() const { return bits_.none(); }
  std::string str() const;

 private:
  std::bitset<26> bits_;
};

class ProofGraph {
 public:
  ProofGraph() = default;

  std::size_t size() const { return trace_.size(); }
  bool empty() const { return trace_.empty(); }
  std::size_t edge_count() const { return trace_.edge_count(); }

  const ProofTrace& trace() const { return trace_; }
  const NamedMap& names() const { return names_; }
  const AxiomTags& axiom_tags() const { return axiom_tags_; }

  char kind(LemmaIndex i) const { return trace_.kind(i); }
  std::uint32_t symbol_size(LemmaIndex i) const {
    return trace_.symbol_size(i);
  }
  // d(i): direct dependencies, in trace order.
  std::span<const LemmaIndex> deps(LemmaIndex i) const {
    return trace_.deps(i);
  }
  // u(i): lemmas whose proof step used i, ascending.
  std::span<const LemmaIndex> uses(LemmaIndex i) const {
    return {uses_.data() + use_offsets_[i - 1],
            uses_.data() + use_offsets_[i]};
  }

  bool named(LemmaIndex i) const { return named_[i - 1] != 0; }
  bool axiom(LemmaIndex i) const { return axiom_[i - 1] != 0; }
  const NodeMask& named_mask() const { return named_; }
  const NodeMask& axiom_mask() const { return axiom_; }
  // Named lemma indices, ascending.
  std::vector<LemmaIndex> named_indices() const;

 private:
  friend ProofGraph build_graph(ProofTrace trace, const NamedMap& names,
                                const AxiomTags& axiom_tags);

  ProofTrace trace_;
  std::vector<std::uint64_t> use_offsets_{0};
  std::vector<LemmaIndex> uses_;
  NodeMask named_;
  NodeMask axiom_;
  NamedMap names_;
  AxiomTags axiom_tags_;
};

// Materializes the reverse adjacency and the named/axiom flags. Throws
// InputError when a name refers past the end of the trace.
ProofGraph build_graph(ProofTrace trace, const NamedMap& names,
                       const AxiomTags& axiom_tags);

// The graph induced by lemmas 1..j-1, keeping only names below j.
// Throws std::out_of_range unless 1 <= j <= graph.size().
ProofGraph prefix_subgraph(const ProofGraph& graph, LemmaIndex j);

struct CorpusStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t named = 0;
  std::size_t axioms = 0;
  // Equivalence classes under the normal-form map; lemmas without an entry
  // count as their own class.
  std::size_t distinct_normal_forms = 0;
  std::size_t zero_dep_non_axioms = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats stats(const ProofGraph& graph, const NormalFormMap& normal_forms);
// "key<TAB>value" lines.
void write_stats(const CorpusStats& s, std::ostream& out);

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_GRAPH_HPP_
