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

#ifndef HAMPARITY_THEOREMS_HPP
#define HAMPARITY_THEOREMS_HPP

#include <span>
#include <utility>

#include "hamparity/count.hpp"
#include "hamparity/graph.hpp"
#include "hamparity/report.hpp"

namespace hamparity {

// Verifiers for the Hamilton-path parity theorems. Each one is total and
// deterministic on its input. A parity failure is returned as pass = false
// with every count filled in, never thrown. Precondition violations throw.
// All verifiers refuse n < 2 with InvalidArgument.
//
// With Engine::Both each quantity is computed by the enumeration oracle and
// by the fast route; any disagreement fails the report.

/// A tournament has an odd number of Hamilton paths.
ParityReport verify_redei(const MixedGraph& t, Engine engine = Engine::Dp);

/// Hamilton paths that begin and end in T are even in number when W is
/// attached to the tournament T by undirected edges only.
ParityReport verify_redei_stronger(const MixedGraph& g,
                                   std::span<const VertexId> t,
                                   std::span<const VertexId> w,
                                   Engine engine = Engine::Dp);

/// hamilton_count(G) and hamilton_count(complement(G)) share parity.
ParityReport verify_berge_stronger(const MixedGraph& g,
                                   Engine engine = Engine::Dp);

/// In a complete mixed graph, Hamilton paths using at least one undirected
/// edge are even in number.
ParityReport verify_dirac_corollary1(const MixedGraph& g,
                                     Engine engine = Engine::Dp);

/// N_A and N_=A share parity.
ParityReport verify_dirac_stronger(const MixedGraph& g,
                                   std::span<const UnorderedPair> a,
                                   Engine engine = Engine::Dp);

/// |P0| and |P3| share parity.
ParityReport verify_dirac_corollary2(const MixedGraph& g,
                                     Engine engine = Engine::Dp);

/// N_A is even for A = E1 u E2 (nonempty).
ParityReport verify_dirac_corollary3(const MixedGraph& g,
                                     Engine engine = Engine::Dp);

/// |P0| + |P1| + |P2| + |P3| is even. Also checks |P0| - |P1| - |P2| + |P3|
/// and, when the oracle runs, that it equals the number of permutations with
/// an E1 pair, an E2 pair and no E3bar pair.
ParityReport verify_berge_dirac(const MixedGraph& g,
                                Engine engine = Engine::Dp);

struct ParityWitnesses {
  MixedGraph both_even;
  MixedGraph both_odd;
};

/// Scans every labeled mixed graph on 2, 3, then 4 vertices in index order
/// and returns the first with both Berge counts even and the first with both
/// odd. Throws SearchExhausted if either is missing.
ParityWitnesses find_parity_witnesses();

/// Labeled mixed graph number `index` on n vertices: base-4 digit k of the
/// index gives the k-th pair (i < j) as non-edge, undirected, i->j, j->i.
MixedGraph mixed_graph_from_index(std::size_t n, std::uint64_t index);

}  // namespace hamparity

#endif  // HAMPARITY_THEOREMS_HPP
