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

#include "lemma_forge/synthetic.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace lemma_forge {

SyntheticCorpus generate_synthetic_corpus(const SyntheticOptions& options) {
  static constexpr char kInferenceTags[] = "CEMTBIDS";
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> size_dist(3, 60);

  SyntheticCorpus corpus;
  corpus.trace.reserve(options.lemmas, options.lemmas * 2);
  std::vector<LemmaIndex> deps;
  std::size_t named = 0;
  for (std::size_t k = 0; k < options.lemmas; ++k) {
    const auto index = static_cast<LemmaIndex>(k + 1);
    deps.clear();
    // Roughly one lemma in twenty is a leaf, as with reflexivity steps.
    const bool leaf = index == 1 || unit(rng) < 0.05;
    if (!leaf) {
      const unsigned n_deps =
          1 + static_cast<unsigned>(rng() % std::max(1u, options.max_deps));
      for (unsigned d = 0; d < n_deps; ++d) {
        const std::size_t span =
            unit(rng) < 0.9 ? std::min<std::size_t>(k, options.locality) : k;
        deps.push_back(static_cast<LemmaIndex>(index - 1 - rng() % span));
      }
    }
    char kind;
    if (leaf) {
      kind = unit(rng) < options.axiom_fraction ? 'A' : 'R';
    } else {
      kind = kInferenceTags[rng() % (sizeof kInferenceTags - 1)];
    }
    corpus.trace.append(kind, size_dist(rng), deps);
    if (!leaf && unit(rng) < options.named_fraction) {
      corpus.names.emplace(index, "THM_" + std::to_string(++named));
    }
  }
  return corpus;
}

}  // namespace lemma_forge
