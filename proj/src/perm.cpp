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

#include "hamparity/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hamparity/config.hpp"
#include "hamparity/error.hpp"

namespace hamparity {
namespace {

void check_oracle_scale(std::size_t n) {
  if (n > oracle_cap()) {
    throw Error(ErrorCode::ScaleRefusal,
                "exhaustive enumeration refused for n = " + std::to_string(n) +
                    " (oracle cap " + std::to_string(oracle_cap()) + ")");
  }
}

}  // namespace

const char* pair_class_name(PairClass c) noexcept {
  switch (c) {
    case PairClass::E1: return "E1";
    case PairClass::E2: return "E2";
    case PairClass::E3: return "E3";
    case PairClass::E3bar: return "E3bar";
  }
  return "?";
}

PairClass classify(const MixedGraph& g, VertexId from, VertexId to) {
  switch (g.kind(from, to)) {
    case PairKind::NonEdge: return PairClass::E1;
    case PairKind::Undirected: return PairClass::E2;
    case PairKind::Directed: break;
  }
  return g.has_arc(from, to) ? PairClass::E3 : PairClass::E3bar;
}

NeighborPairProfile profile(const MixedGraph& g, std::span<const VertexId> x) {
  const std::size_t n = g.size();
  if (x.size() != n) {
    throw Error(ErrorCode::LengthMismatch,
                "permutation has " + std::to_string(x.size()) +
                    " entries, graph has " + std::to_string(n) + " vertices");
  }
  std::vector<bool> used(n, false);
  for (VertexId v : x) {
    if (v >= n || used[v]) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation of 0..n-1");
    }
    used[v] = true;
  }
  NeighborPairProfile out;
  out.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.push_back({x[i], x[i + 1], classify(g, x[i], x[i + 1])});
  }
  return out;
}

bool is_hamilton_profile(const NeighborPairProfile& p) {
  return std::none_of(p.begin(), p.end(), [](const NeighborPair& e) {
    return e.cls == PairClass::E1 || e.cls == PairClass::E3bar;
  });
}

bool is_hamilton_path(const MixedGraph& g, std::span<const VertexId> x) {
  return is_hamilton_profile(profile(g, x));
}

PermutationStream::PermutationStream(std::size_t n) : order_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  check_oracle_scale(n);
  std::iota(order_.begin(), order_.end(), VertexId{0});
}

bool PermutationStream::advance() {
  return std::next_permutation(order_.begin(), order_.end());
}

std::vector<Permutation> enumerate_permutations(std::size_t n) {
  PermutationStream stream(n);
  std::vector<Permutation> out;
  do {
    out.emplace_back(stream.current().begin(), stream.current().end());
  } while (stream.advance());
  return out;
}

Count select(const MixedGraph& g, const ProfilePredicate& pred) {
  const std::size_t n = g.size();
  PermutationStream stream(n);

  // Classes of every ordered pair, looked up per step.
  std::vector<PairClass> table(n * n, PairClass::E1);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) table[u * n + v] = classify(g, u, v);

  NeighborPairProfile buffer(n > 0 ? n - 1 : 0);
  std::uint64_t hits = 0;
  do {
    const auto x = stream.current();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      buffer[i] = {x[i], x[i + 1], table[x[i] * n + x[i + 1]]};
    }
    if (pred(buffer)) ++hits;
  } while (stream.advance());
  return Count(static_cast<unsigned long>(hits));
}

}  // namespace hamparity
