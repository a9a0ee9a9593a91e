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

#include "lemma_forge/normalize.hpp"

#include <string_view>
#include <unordered_map>

namespace lemma_forge {

std::vector<LemmaIndex> canonical_indices(std::size_t lemma_count,
                                          const NormalFormMap& normal_forms) {
  std::vector<LemmaIndex> canonical(lemma_count);
  std::unordered_map<std::string_view, LemmaIndex> first_seen;
  first_seen.reserve(normal_forms.size());
  for (LemmaIndex i = 1; i <= lemma_count; ++i) {
    auto it = normal_forms.find(i);
    canonical[i - 1] =
        it == normal_forms.end() ? i : first_seen.try_emplace(it->second, i)
                                           .first->second;
  }
  return canonical;
}

ProofTrace merge_alpha_variants(const ProofTrace& trace,
                                const NormalFormMap& normal_forms) {
  const auto canonical = canonical_indices(trace.size(), normal_forms);
  ProofTrace out;
  out.reserve(trace.size(), trace.edge_count());
  std::vector<LemmaIndex> deps;
  for (LemmaIndex i = 1; i <= trace.size(); ++i) {
    deps.clear();
    for (LemmaIndex dep : trace.deps(i)) deps.push_back(canonical[dep - 1]);
    out.append(trace.kind(i), trace.symbol_size(i), deps);
  }
  return out;
}

PrunedTrace prune_variant_proofs(const ProofTrace& trace,
                                 const NormalFormMap& normal_forms,
                                 const NamedMap& names) {
  const auto canonical = canonical_indices(trace.size(), normal_forms);
  const ProofTrace merged = merge_alpha_variants(trace, normal_forms);
  const std::size_t n = merged.size();

  std::vector<std::uint8_t> referenced(n, 0);
  for (LemmaIndex i = 1; i <= n; ++i) {
    for (LemmaIndex dep : merged.deps(i)) referenced[dep - 1] = 1;
  }
  std::vector<std::uint8_t> live(n, 0);
  for (LemmaIndex i = 1; i <= n; ++i) {
    if (names.contains(i) || (canonical[i - 1] == i && !referenced[i - 1])) {
      live[i - 1] = 1;
    }
  }
  // Dependencies are always below their user, so one descending sweep
  // closes the live set.
  for (LemmaIndex i = static_cast<LemmaIndex>(n); i >= 1; --i) {
    if (!live[i - 1]) continue;
    for (LemmaIndex dep : merged.deps(i)) live[dep - 1] = 1;
  }

  PrunedTrace out;
  out.new_index.assign(n, 0);
  std::vector<LemmaIndex> deps;
  for (LemmaIndex i = 1; i <= n; ++i) {
    if (!live[i - 1]) continue;
    deps.clear();
    for (LemmaIndex dep : merged.deps(i)) deps.push_back(out.new_index[dep - 1]);
    out.new_index[i - 1] =
        out.trace.append(merged.kind(i), merged.symbol_size(i), deps);
  }
  return out;
}

NamedMap remap_names(const NamedMap& names,
                     const std::vector<LemmaIndex>& new_index) {
  NamedMap out;
  for (const auto& [index, name] : names) {
    if (index <= new_index.size() && new_index[index - 1] != 0) {
      out.emplace(new_index[index - 1], name);
    }
  }
  return out;
}

}  // namespace lemma_forge
