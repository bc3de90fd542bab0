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

#include <bit>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamparity/config.hpp"
#include "hamparity/count.hpp"
#include "hamparity/error.hpp"
#include "hamparity/perm.hpp"
#include "internal/segments.hpp"

namespace hamparity {

void TransitionSet::allow(VertexId from, VertexId to) {
  if (from >= rows_.size() || to >= rows_.size() || from == to) {
    throw Error(ErrorCode::InvalidArgument, "transition outside the vertex set");
  }
  rows_[from] |= std::uint64_t{1} << to;
}

TransitionSet TransitionSet::all(std::size_t n) {
  TransitionSet t(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) t.allow(u, v);
  return t;
}

const char* class_name(ClassId c) noexcept {
  switch (c) {
    case ClassId::P0: return "P0";
    case ClassId::P1: return "P1";
    case ClassId::P2: return "P2";
    case ClassId::P3: return "P3";
  }
  return "?";
}

namespace {

struct ClassMask {
  bool e1;
  bool e2;
};

ClassMask class_mask(ClassId c) {
  switch (c) {
    case ClassId::P0: return {true, true};
    case ClassId::P1: return {false, true};
    case ClassId::P2: return {true, false};
    case ClassId::P3: return {false, false};
  }
  return {false, false};
}

TransitionSet transitions_for(const MixedGraph& g, bool e1, bool e2) {
  const std::size_t n = g.size();
  TransitionSet t(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      switch (classify(g, u, v)) {
        case PairClass::E1: if (e1) t.allow(u, v); break;
        case PairClass::E2: if (e2) t.allow(u, v); break;
        case PairClass::E3: t.allow(u, v); break;
        case PairClass::E3bar: break;
      }
    }
  return t;
}

// A block of vertices placed contiguously in one fixed orientation. Plain
// vertices are blocks with head == tail.
struct Node {
  std::size_t item;
  VertexId head;
  VertexId tail;
};

void check_dp_scale(std::size_t items, std::size_t n) {
  if (items > dp_cap() || n > 33) {
    throw Error(ErrorCode::ScaleRefusal,
                "subset DP refused for " + std::to_string(items) +
                    " items (DP cap " + std::to_string(dp_cap()) + ")");
  }
}

template <class Cell>
Count run_block_dp(const std::vector<Node>& nodes, std::size_t items,
                   const TransitionSet& allowed, std::uint64_t start_mask,
                   std::uint64_t end_mask) {
  const std::size_t width = nodes.size();
  const bool plain = width == items;

  std::vector<std::uint64_t> item_nodes(items, 0);
  for (std::size_t a = 0; a < width; ++a)
    item_nodes[nodes[a].item] |= std::uint64_t{1} << a;

  std::vector<std::uint64_t> succ(width, 0);
  for (std::size_t a = 0; a < width; ++a)
    for (std::size_t b = 0; b < width; ++b)
      if (nodes[a].item != nodes[b].item &&
          allowed.allows(nodes[a].tail, nodes[b].head))
        succ[a] |= std::uint64_t{1} << b;

  std::vector<Cell> dp;
  try {
    dp.assign((std::size_t{1} << items) * width, Cell{0});
  } catch (const std::bad_alloc&) {
    throw Error(ErrorCode::ScaleRefusal, "subset DP table does not fit in memory");
  } catch (const std::length_error&) {
    throw Error(ErrorCode::ScaleRefusal, "subset DP table does not fit in memory");
  }

  for (std::size_t a = 0; a < width; ++a)
    if ((start_mask >> nodes[a].head) & 1U)
      dp[(std::size_t{1} << nodes[a].item) * width + a] = 1;

  const std::uint64_t all_nodes = full_vertex_mask(width);
  const std::size_t full = (std::size_t{1} << items) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::uint64_t covered = 0;
    if (plain) {
      covered = mask;
    } else {
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
        covered |= item_nodes[std::countr_zero(bits)];
    }
    const std::uint64_t free_nodes = all_nodes & ~covered;
    const Cell* row = &dp[mask * width];
    for (std::uint64_t bits = covered; bits != 0; bits &= bits - 1) {
      const auto a = static_cast<std::size_t>(std::countr_zero(bits));
      const Cell value = row[a];
      if (value == 0) continue;
      for (std::uint64_t next = succ[a] & free_nodes; next != 0;
           next &= next - 1) {
        const auto b = static_cast<std::size_t>(std::countr_zero(next));
        dp[(mask | (std::size_t{1} << nodes[b].item)) * width + b] += value;
      }
    }
  }

  unsigned __int128 total = 0;
  for (std::size_t a = 0; a < width; ++a)
    if ((end_mask >> nodes[a].tail) & 1U) total += dp[full * width + a];
  return from_u128(total);
}

Count run_blocks(const std::vector<Node>& nodes, std::size_t items,
                 std::size_t n, const TransitionSet& allowed,
                 std::uint64_t start_mask, std::uint64_t end_mask) {
  check_dp_scale(items, n);
  // Every cell is bounded by n!, and 20! < 2^64.
  if (n <= 20) {
    return run_block_dp<std::uint64_t>(nodes, items, allowed, start_mask,
                                       end_mask);
  }
  return run_block_dp<unsigned __int128>(nodes, items, allowed, start_mask,
                                         end_mask);
}

enum class Junction { AnyButReversed, ArcOnly };

Count count_over_segments(const MixedGraph& g, std::span<const UnorderedPair> a_in,
                          Junction junction) {
  const auto a = detail::normalized_a(g, a_in);
  const std::size_t n = g.size();
  if (a.size() >= n) return 0;
  const auto s = detail::analyze(n, a, {});
  if (!s.feasible) return 0;

  std::vector<Node> nodes;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    nodes.push_back({i, seg.front(), seg.back()});
    if (seg.size() > 1) nodes.push_back({i, seg.back(), seg.front()});
  }
  const auto allowed = junction == Junction::AnyButReversed
                           ? transitions_for(g, true, true)
                           : transitions_for(g, false, false);
  const std::uint64_t everything = full_vertex_mask(n);
  return run_blocks(nodes, s.segments.size(), n, allowed, everything,
                    everything);
}

}  // namespace

TransitionSet class_transitions(const MixedGraph& g, ClassId c) {
  const auto m = class_mask(c);
  return transitions_for(g, m.e1, m.e2);
}

TransitionSet hamilton_transitions(const MixedGraph& g) {
  return transitions_for(g, false, true);
}

Count count_constrained(const TransitionSet& allowed, std::uint64_t start_mask,
                        std::uint64_t end_mask) {
  const std::size_t n = allowed.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty vertex set");
  const std::uint64_t everything = full_vertex_mask(n);
  if ((start_mask & everything) == 0 || (end_mask & everything) == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "start and end sets must be nonempty subsets of the vertices");
  }
  std::vector<Node> nodes;
  nodes.reserve(n);
  for (VertexId v = 0; v < n; ++v) nodes.push_back({v, v, v});
  return run_blocks(nodes, n, n, allowed, start_mask, end_mask);
}

Count count_class(const MixedGraph& g, ClassId c) {
  const std::uint64_t everything = full_vertex_mask(g.size());
  return count_constrained(class_transitions(g, c), everything, everything);
}

Count hamilton_count(const MixedGraph& g) {
  const std::uint64_t everything = full_vertex_mask(g.size());
  return count_constrained(hamilton_transitions(g), everything, everything);
}

Count count_class_brute(const MixedGraph& g, ClassId c) {
  const auto m = class_mask(c);
  return select(g, [m](const NeighborPairProfile& prof) {
    for (const auto& e : prof) {
      if (e.cls == PairClass::E3bar) return false;
      if (e.cls == PairClass::E1 && !m.e1) return false;
      if (e.cls == PairClass::E2 && !m.e2) return false;
    }
    return true;
  });
}

Count hamilton_count_brute(const MixedGraph& g) {
  return select(g, is_hamilton_profile);
}

Count count_n_a_dp(const MixedGraph& g, std::span<const UnorderedPair> a) {
  return count_over_segments(g, a, Junction::AnyButReversed);
}

Count count_n_eq_a_dp(const MixedGraph& g, std::span<const UnorderedPair> a) {
  return count_over_segments(g, a, Junction::ArcOnly);
}

}  // namespace hamparity
