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

// Alpha-variant merging. Every dependency reference is redirected to the
// earliest lemma with the same normal form; the later variants and their
// proofs stay in the trace so that usage counts over them remain visible.
//
// The same pass performs exact de-duplication when the normal-form map holds
// raw statement strings instead of variable-normalized ones.

#ifndef LEMMA_FORGE_NORMALIZE_HPP_
#define LEMMA_FORGE_NORMALIZE_HPP_

#include <vector>

#include "lemma_forge/trace_io.hpp"

namespace lemma_forge {

// canonical[i - 1] is the smallest index sharing lemma i's normal form, or
// i itself when i has no entry in `normal_forms`.
std::vector<LemmaIndex> canonical_indices(std::size_t lemma_count,
                                          const NormalFormMap& normal_forms);

ProofTrace merge_alpha_variants(const ProofTrace& trace,
                                const NormalFormMap& normal_forms);

struct PrunedTrace {
  ProofTrace trace;
  // old index i -> new index at slot i - 1; 0 when lemma i was dropped.
  std::vector<LemmaIndex> new_index;
};

// Merges variants, then drops every lemma no longer needed: the kept roots
// are named lemmas and canonical lemmas nothing refers to, and everything
// they transitively depend on survives. Survivors are renumbered densely in
// their original order.
PrunedTrace prune_variant_proofs(const ProofTrace& trace,
                                 const NormalFormMap& normal_forms,
                                 const NamedMap& names);

// Renumbers a names map after pruning; names of dropped lemmas disappear.
NamedMap remap_names(const NamedMap& names,
                     const std::vector<LemmaIndex>& new_index);

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_NORMALIZE_HPP_
