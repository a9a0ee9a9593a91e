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

#ifndef LEMMA_FORGE_SCORES_HPP_
#define LEMMA_FORGE_SCORES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "lemma_forge/trace_io.hpp"

namespace lemma_forge {

// One value per lemma for a single metric. values[i - 1] belongs to lemma i.
// Values may be +infinity but never NaN.
struct ScoreVector {
  std::string metric_id;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double at(LemmaIndex i) const { return values[i - 1]; }
};

// Ranking order used everywhere: higher score first, then lower index.
inline bool ranks_before(double score_a, LemmaIndex a, double score_b,
                         LemmaIndex b) {
  if (score_a != score_b) return score_a > score_b;
  return a < b;
}

// All lemma indices sorted by ranks_before. When k is smaller than the
// number of lemmas only the first k entries are returned.
std::vector<LemmaIndex> rank_order(const ScoreVector& scores,
                                   std::size_t k = static_cast<std::size_t>(-1));

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_SCORES_HPP_
