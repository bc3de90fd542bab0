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

#ifndef HAMPARITY_PERM_HPP
#define HAMPARITY_PERM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hamparity/bigcount.hpp"
#include "hamparity/graph.hpp"

namespace hamparity {

using Permutation = std::vector<VertexId>;

/// Class of a neighboring pair (x_i, x_{i+1}) of a permutation.
enum class PairClass : std::uint8_t {
  E1,     // non-edge
  E2,     // undirected edge
  E3,     // arc traversed in its own direction
  E3bar,  // arc traversed against its direction
};

const char* pair_class_name(PairClass c) noexcept;

/// One neighboring pair in traversal order.
struct NeighborPair {
  VertexId from = 0;
  VertexId to = 0;
  PairClass cls = PairClass::E1;

  friend bool operator==(const NeighborPair&, const NeighborPair&) = default;
};

/// The n-1 neighboring pairs of a permutation; entry i is (x_i, x_{i+1}).
using NeighborPairProfile = std::vector<NeighborPair>;

PairClass classify(const MixedGraph& g, VertexId from, VertexId to);

/// Throws LengthMismatch if x.size() != n and InvalidArgument if x is not a
/// bijection onto 0..n-1.
NeighborPairProfile profile(const MixedGraph& g, std::span<const VertexId> x);

/// True iff the profile has no E1 and no E3bar entry.
bool is_hamilton_path(const MixedGraph& g, std::span<const VertexId> x);
bool is_hamilton_profile(const NeighborPairProfile& p);

/// Lexicographic stream of all permutations of 0..n-1.
///
///   PermutationStream s(4);
///   do { use(s.current()); } while (s.advance());
///
/// Construction throws ScaleRefusal when n exceeds oracle_cap().
class PermutationStream {
 public:
  explicit PermutationStream(std::size_t n);

  std::span<const VertexId> current() const { return order_; }
  /// Moves to the next permutation; false once the last one was current.
  bool advance();

 private:
  Permutation order_;
};

/// All permutations of 0..n-1, lexicographic. Subject to the oracle cap.
std::vector<Permutation> enumerate_permutations(std::size_t n);

using ProfilePredicate = std::function<bool(const NeighborPairProfile&)>;

/// Brute-force oracle: the number of permutations of g whose profile
/// satisfies `pred`. For n = 1 the single profile is empty.
Count select(const MixedGraph& g, const ProfilePredicate& pred);

}  // namespace hamparity

#endif  // HAMPARITY_PERM_HPP
