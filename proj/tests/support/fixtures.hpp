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

#ifndef HAMPARITY_TESTS_SUPPORT_FIXTURES_HPP
#define HAMPARITY_TESTS_SUPPORT_FIXTURES_HPP

#include <cstdint>

#include "hamparity/graph.hpp"

namespace fixtures {

// The three-vertex worked example with a = 0, b = 1, c = 2:
// {b,c} non-edge, {a,b} undirected, arc a -> c.
inline constexpr hamparity::VertexId kA = 0;
inline constexpr hamparity::VertexId kB = 1;
inline constexpr hamparity::VertexId kC = 2;

inline hamparity::MixedGraph worked_example() {
  hamparity::MixedGraph g(3);
  g.set_undirected(kA, kB);
  g.set_arc(kA, kC);
  return g;
}

// a -> b -> c -> a
inline hamparity::MixedGraph three_cycle() {
  hamparity::MixedGraph g(3);
  g.set_arc(0, 1);
  g.set_arc(1, 2);
  g.set_arc(2, 0);
  return g;
}

inline hamparity::MixedGraph complete_undirected(std::size_t n) {
  hamparity::MixedGraph g(n);
  for (hamparity::VertexId i = 0; i < n; ++i)
    for (hamparity::VertexId j = i + 1; j < n; ++j) g.set_undirected(i, j);
  return g;
}

inline std::uint64_t case_seed(std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = stream * 0x100000001b3ULL + index * 0x9e3779b97f4a7c15ULL + 1;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace fixtures

#endif  // HAMPARITY_TESTS_SUPPORT_FIXTURES_HPP
