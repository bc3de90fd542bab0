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

#ifndef HAMPARITY_COUNT_HPP
#define HAMPARITY_COUNT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hamparity/bigcount.hpp"
#include "hamparity/graph.hpp"

namespace hamparity {

/// A pair set that a permutation is required to contain: `a` as unordered
/// neighbors (drawn from E1 u E2) and `d` as ordered neighbors (drawn from
/// E3bar, i.e. arcs walked backwards).
struct RequiredPairs {
  std::vector<UnorderedPair> a;
  std::vector<Arc> d;
};

enum class InfeasibleReason : std::uint8_t {
  None,
  DegreeExceeded,
  Cycle,
  ConflictingDirection,
};

const char* infeasible_reason_name(InfeasibleReason r) noexcept;

/// Path segments forced by a required pair set.
///
/// When feasible, every vertex lies in exactly one segment (singletons
/// included) and r = n - |A| - |D|. p counts multi-vertex segments without a
/// D element, q counts segments holding at least one D element. Segments
/// with a D element are listed in the direction their D arcs are walked;
/// the others start at their smaller endpoint.
struct SubPermDecomposition {
  bool feasible = false;
  InfeasibleReason reason = InfeasibleReason::None;
  std::vector<std::vector<VertexId>> segments;
  std::size_t r = 0;
  std::size_t p = 0;
  std::size_t q = 0;
};

/// Throws MalformedRequirement if an `a` element is not in E1 u E2 or a `d`
/// element is not in E3bar. Repeated elements are treated as one.
SubPermDecomposition decompose(const MixedGraph& g, const RequiredPairs& req);

/// Number of permutations containing every element of A u D, in closed
/// form: 0 when infeasible, otherwise r! * 2^p.
Count closed_form_m(const MixedGraph& g, const RequiredPairs& req);

/// Same quantity by exhaustive enumeration.
Count brute_m(const MixedGraph& g, const RequiredPairs& req);

/// Permutations containing all of A and no E3bar pair.
Count count_n_a_brute(const MixedGraph& g, std::span<const UnorderedPair> a);
/// Permutations whose E1 u E2 pairs are exactly A and with no E3bar pair.
Count count_n_eq_a_brute(const MixedGraph& g, std::span<const UnorderedPair> a);

/// N_A as the signed sum over D in E3bar with |D| <= n-1-|A| of
/// (-1)^|D| * closed_form_m(A, D). Only feasible D are visited: adding pairs
/// to an infeasible set never makes it feasible, so whole branches are cut.
/// Throws ScaleRefusal when |E3bar| exceeds subset_sum_cap().
Count count_n_a_inclusion_exclusion(const MixedGraph& g,
                                    std::span<const UnorderedPair> a);

/// N_A and N_=A by a subset DP over the segments forced by A: each segment
/// is placed whole in one of its orientations and the step joining two
/// segments must be allowed (any non-E3bar step for N_A, an E3 arc for
/// N_=A). Both are 0 when A does not form disjoint paths.
Count count_n_a_dp(const MixedGraph& g, std::span<const UnorderedPair> a);
Count count_n_eq_a_dp(const MixedGraph& g, std::span<const UnorderedPair> a);

/// Allowed ordered transitions: bit v of rows[u] permits the step u -> v.
class TransitionSet {
 public:
  explicit TransitionSet(std::size_t n) : rows_(n, 0) {}

  std::size_t size() const noexcept { return rows_.size(); }
  void allow(VertexId from, VertexId to);
  void allow_both(VertexId a, VertexId b) {
    allow(a, b);
    allow(b, a);
  }
  bool allows(VertexId from, VertexId to) const {
    return (rows_[from] >> to) & 1U;
  }
  std::uint64_t row(VertexId from) const { return rows_[from]; }

  static TransitionSet all(std::size_t n);

 private:
  std::vector<std::uint64_t> rows_;
};

enum class ClassId : std::uint8_t { P0, P1, P2, P3 };

const char* class_name(ClassId c) noexcept;

/// P0 allows E1 and E2 both ways plus E3 forward; P1 drops E1; P2 drops E2;
/// P3 keeps only E3 forward.
TransitionSet class_transitions(const MixedGraph& g, ClassId c);
/// E2 both ways plus E3 forward (same as P1).
TransitionSet hamilton_transitions(const MixedGraph& g);

inline std::uint64_t full_vertex_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Number of permutations whose consecutive steps are all allowed, starting
/// in `start_mask` and ending in `end_mask`. Subset DP over (visited set,
/// last vertex), O(2^n n^2) time and 2^n n words of memory. Throws
/// ScaleRefusal above dp_cap() or if the table cannot be allocated.
Count count_constrained(const TransitionSet& allowed, std::uint64_t start_mask,
                        std::uint64_t end_mask);

Count count_class(const MixedGraph& g, ClassId c);
Count hamilton_count(const MixedGraph& g);

/// Brute-force counterparts of the class counters, via select().
Count count_class_brute(const MixedGraph& g, ClassId c);
Count hamilton_count_brute(const MixedGraph& g);

}  // namespace hamparity

#endif  // HAMPARITY_COUNT_HPP
