// Copyright 2026 The honeycomb-qec Authors
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

#ifndef HONEYCOMB_BLOSSOM_HPP
#define HONEYCOMB_BLOSSOM_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace honeycomb {

// Exact minimum-cost perfect matching on the complete graph with the given
// symmetric non-negative integer costs (Edmonds' blossom algorithm with
// dual variables, O(V^3)). Returns pairs (i, j) with i < j, sorted by i.
// Throws std::invalid_argument for an odd vertex count.
std::vector<std::pair<int, int>> min_cost_perfect_matching(const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace honeycomb

#endif  // HONEYCOMB_BLOSSOM_HPP
