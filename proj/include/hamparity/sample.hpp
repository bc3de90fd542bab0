// Copyright 2026 The hamparity Authors
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

#ifndef HAMPARITY_SAMPLE_HPP
#define HAMPARITY_SAMPLE_HPP

#include <cstdint>
#include <vector>

#include "hamparity/graph.hpp"

namespace hamparity {

/// A seeded choice of A in E1 u E2 for sweeps. Even seeds take a random
/// subset of the E1 u E2 neighbors of a random permutation (so A is usually
/// realizable); odd seeds take a random subset of E1 u E2 of size at most
/// n - 1. Returned sorted.
std::vector<UnorderedPair> sample_requirement(const MixedGraph& g,
                                              std::uint64_t seed);

}  // namespace hamparity

#endif  // HAMPARITY_SAMPLE_HPP
