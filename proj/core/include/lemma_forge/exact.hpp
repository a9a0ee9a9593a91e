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

// Exact big-integer recursive dependency and use counts, for checking the
// saturating double versions.

#ifndef LEMMA_FORGE_EXACT_HPP_
#define LEMMA_FORGE_EXACT_HPP_

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lemma_forge/graph.hpp"

namespace lemma_forge {

using BigCount = boost::multiprecision::cpp_int;

std::vector<BigCount> compute_D_exact(const ProofGraph& graph,
                                      const NodeMask& named);
std::vector<BigCount> compute_U_exact(const ProofGraph& graph,
                                      const NodeMask& named);

}  // namespace lemma_forge

#endif  // LEMMA_FORGE_EXACT_HPP_
