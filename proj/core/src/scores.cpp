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

#include "lemma_forge/scores.hpp"

#include <algorithm>
#include <numeric>

namespace lemma_forge {

std::vector<LemmaIndex> rank_order(const ScoreVector& scores, std::size_t k) {
  std::vector<LemmaIndex> order(scores.size());
  std::iota(order.begin(), order.end(), LemmaIndex{1});
  k = std::min(k, order.size());
  auto before = [&](LemmaIndex a, LemmaIndex b) {
    return ranks_before(scores.at(a), a, scores.at(b), b);
  };
  std::partial_sort(order.begin(), order.begin() + k, order.end(), before);
  order.resize(k);
  return order;
}

}  // namespace lemma_forge
