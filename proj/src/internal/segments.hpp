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

#ifndef HAMPARITY_INTERNAL_SEGMENTS_HPP
#define HAMPARITY_INTERNAL_SEGMENTS_HPP

#include <span>
#include <vector>

#include "hamparity/count.hpp"

namespace hamparity::detail {

/// Validates A against g and returns it sorted without repeats.
std::vector<UnorderedPair> normalized_a(const MixedGraph& g,
                                        std::span<const UnorderedPair> a);
/// Validates D against g and returns it sorted without repeats.
std::vector<Arc> normalized_d(const MixedGraph& g, std::span<const Arc> d);

/// Segment structure of A u D on n vertices. `d` must be sorted.
SubPermDecomposition analyze(std::size_t n, std::span<const UnorderedPair> a,
                             std::span<const Arc> d);

}  // namespace hamparity::detail

#endif  // HAMPARITY_INTERNAL_SEGMENTS_HPP
