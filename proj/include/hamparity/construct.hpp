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

#ifndef HAMPARITY_CONSTRUCT_HPP
#define HAMPARITY_CONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hamparity/graph.hpp"
#include "hamparity/report.hpp"

namespace hamparity {

/// A tournament T plus extra vertices W joined by undirected edges. Vertex
/// numbering of the materialized graph: T is 0..k-1, W is k..k+w-1.
/// Every edge in `w_edges` must touch at least one W vertex.
struct WExtension {
  MixedGraph base;
  std::size_t w_count = 0;
  std::vector<UnorderedPair> w_edges;
};

/// A materialized extension together with its vertex split.
struct SplitGraph {
  MixedGraph graph;
  std::vector<VertexId> t;
  std::vector<VertexId> w;
};

/// Throws MalformedExtension when the base is not a tournament, W is empty,
/// or an edge is out of range or does not touch W.
SplitGraph materialize(const WExtension& ext);

/// Recovers the extension from a graph whose first `t_count` vertices are T.
/// Throws MalformedExtension when the graph does not have that shape.
WExtension extension_from_graph(const MixedGraph& g, std::size_t t_count);

/// Random extension: a random tournament on t_count vertices, then each pair
/// touching W becomes an undirected edge with probability 1/2 (one draw per
/// pair in lexicographic order, continuing the same stream).
WExtension random_extension(std::size_t t_count, std::size_t w_count,
                            std::uint64_t seed);

/// One new vertex per element e of E1 u E2 (E1 first, each lexicographic),
/// joined by undirected edges to the two ends of e. Pairs of G in E1 u E2 become
/// non-edges; arcs are kept. Throws EmptyA when E1 u E2 is empty.
SplitGraph gadget_from_mixed(const MixedGraph& g);

/// Hamilton paths of the gadget that start and end in T against
/// N_A(G, A = E1 u E2). Passes iff the two are equal.
ParityReport gadget_equivalence_check(const MixedGraph& g,
                                      Engine engine = Engine::Dp);

/// Paths from T to T through W. Each path is stored with its smaller
/// endpoint first.
struct PathSystem {
  std::vector<std::vector<VertexId>> paths;

  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

/// Calls `visit` for every path system of the split graph: every W vertex is
/// interior to exactly one path, each path has two distinct T endpoints and
/// a nonempty W interior, and the union of the paths is a disjoint union of
/// paths (T vertices may be shared as endpoints). Deterministic order.
/// Throws ScaleRefusal when |W| exceeds path_system_cap().
void for_each_path_system(const SplitGraph& split,
                          const std::function<void(const PathSystem&)>& visit);
std::vector<PathSystem> enumerate_path_systems(const SplitGraph& split);

/// Makes the pair joining the two endpoints of each path undirected.
/// Throws NotATournament for a non-tournament input and
/// DuplicateEndpointPair when two paths have the same endpoints.
MixedGraph replace_along(const MixedGraph& tournament, const PathSystem& ps);

/// Splits the Hamilton T-to-T paths of the extension by the path system they
/// induce. For each system, the count N_A on replace_along(T, system) with
/// A = its undirected pairs must be even, and the terms must sum to the
/// total. Passes iff both hold.
ParityReport redei_via_dirac_check(const WExtension& ext,
                                   Engine engine = Engine::Dp);

}  // namespace hamparity

#endif  // HAMPARITY_CONSTRUCT_HPP
