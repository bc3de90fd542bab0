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

#ifndef HAMPARITY_TESTS_SUPPORT_REFERENCE_HPP
#define HAMPARITY_TESTS_SUPPORT_REFERENCE_HPP

// Test-only brute force. It reads a graph into a plain matrix and walks
// std::next_permutation directly, sharing nothing with the library's
// enumeration or DP code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "hamparity/graph.hpp"

namespace reference {

// step[u][v]: 'n' non-edge, 'u' undirected, 'f' arc u->v, 'b' arc v->u.
struct Matrix {
  int n = 0;
  std::vector<std::vector<char>> step;
};

inline Matrix matrix_of(const hamparity::MixedGraph& g) {
  Matrix m;
  m.n = static_cast<int>(g.size());
  m.step.assign(m.n, std::vector<char>(m.n, '-'));
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v) {
      if (u == v) continue;
      switch (g.kind(u, v)) {
        case hamparity::PairKind::NonEdge: m.step[u][v] = 'n'; break;
        case hamparity::PairKind::Undirected: m.step[u][v] = 'u'; break;
        case hamparity::PairKind::Directed:
          m.step[u][v] = g.has_arc(u, v) ? 'f' : 'b';
          break;
      }
    }
  return m;
}

using Order = std::vector<int>;

inline std::uint64_t count(const Matrix& m,
                           const std::function<bool(const Order&)>& keep) {
  Order x(m.n);
  std::iota(x.begin(), x.end(), 0);
  std::uint64_t hits = 0;
  do {
    if (keep(x)) ++hits;
  } while (std::next_permutation(x.begin(), x.end()));
  return hits;
}

// Every step of x is one of the listed step kinds.
inline bool steps_within(const Matrix& m, const Order& x, const char* kinds) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const char s = m.step[x[i]][x[i + 1]];
    bool ok = false;
    for (const char* k = kinds; *k; ++k) ok = ok || *k == s;
    if (!ok) return false;
  }
  return true;
}

inline bool adjacent(const Order& x, int a, int b) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if ((x[i] == a && x[i + 1] == b) || (x[i] == b && x[i + 1] == a)) return true;
  return false;
}

inline bool directed_adjacent(const Order& x, int from, int to) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i] == from && x[i + 1] == to) return true;
  return false;
}

inline std::uint64_t hamilton(const hamparity::MixedGraph& g) {
  const auto m = matrix_of(g);
  return count(m, [&](const Order& x) { return steps_within(m, x, "uf"); });
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace reference

#endif  // HAMPARITY_TESTS_SUPPORT_REFERENCE_HPP
