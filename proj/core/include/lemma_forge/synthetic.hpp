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

// Random traces shaped like kernel proof logs, for benchmarks and scale
// tests.

#ifndef LEMMA_FORGE_SYNTHETIC_HPP_
#define LEMMA_FORGE_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>

#include "lemma_forge/trace_io.hpp"

namespace lemma_forge {

struct SyntheticOptions {
  std::size_t lemmas = 1'000'000;
  std::uint64_t seed = 1;
  unsigned max_deps = 4;
  // Fraction of lemmas given a name.
  double named_fraction = 0.001;
  // Fraction of dependency-free lemmas tagged 'A' (the rest use 'R').
  double axiom_fraction = 0.05;
  // Most dependencies point at most this far back; the rest are uniform.
  std::size_t locality = 1000;
};

struct SyntheticCorpus {
  ProofTrace trace;
  NamedMap names;
};

// Deterministic for a given options value.
SyntheticCorpus generate_synthetic_corpus(const SyntheticOptions& options);

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_SYNTHETIC_HPP_
