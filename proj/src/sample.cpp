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

#include "hamparity/sample.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hamparity {

std::vector<UnorderedPair> sample_requirement(const MixedGraph& g,
                                              std::uint64_t seed) {
  const std::size_t n = g.size();
  auto pool = g.unoriented_pairs();
  std::vector<UnorderedPair> out;
  if (pool.empty() || n < 2) return out;

  std::mt19937_64 rng(seed);
  if (seed % 2 == 0) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (g.kind(order[i], order[i + 1]) == PairKind::Directed) continue;
      if (rng() >> 63) out.push_back(UnorderedPair::of(order[i], order[i + 1]));
    }
  } else {
    const std::size_t limit = std::min(pool.size(), n - 1);
    const std::size_t k = rng() % (limit + 1);
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
      out.push_back(pool[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hamparity
