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

#ifndef HAMPARITY_GRAPH_HPP
#define HAMPARITY_GRAPH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamparity {

using VertexId = std::uint32_t;

/// Graphs are limited to 64 vertices so vertex sets fit in one machine word.
inline constexpr std::size_t kMaxVertices = 64;

enum class PairKind : std::uint8_t { NonEdge, Undirected, Directed };

/// Unordered pair, normalized so that lo < hi.
struct UnorderedPair {
  VertexId lo = 0;
  VertexId hi = 0;

  static UnorderedPair of(VertexId a, VertexId b) {
    return a < b ? UnorderedPair{a, b} : UnorderedPair{b, a};
  }
  friend auto operator<=>(const UnorderedPair&, const UnorderedPair&) = default;
};

/// Ordered pair; for a graph arc, `from` is the tail.
struct Arc {
  VertexId from = 0;
  VertexId to = 0;

  Arc reversed() const { return {to, from}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct EdgeClassSizes {
  std::size_t non_edges = 0;   // |E1|
  std::size_t undirected = 0;  // |E2|
  std::size_t directed = 0;    // |E3|
};

/// A mixed graph on vertices 0..n-1. Every unordered pair of distinct
/// vertices is exactly one of: non-edge (E1), undirected edge (E2), or an
/// arc in one direction (E3). A default-constructed pair is a non-edge.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  PairKind kind(VertexId u, VertexId v) const;
  /// True iff u->v is an arc of the graph.
  bool has_arc(VertexId u, VertexId v) const;

  void set_non_edge(VertexId u, VertexId v);
  void set_undirected(VertexId u, VertexId v);
  void set_arc(VertexId from, VertexId to);

  std::vector<UnorderedPair> non_edges() const;
  std::vector<UnorderedPair> undirected_edges() const;
  /// E1 followed by E2, each in lexicographic order.
  std::vector<UnorderedPair> unoriented_pairs() const;
  std::vector<Arc> arcs() const;
  /// E3bar: every arc with its direction reversed.
  std::vector<Arc> reversed_arcs() const;
  EdgeClassSizes class_sizes() const;

  bool is_tournament() const;
  /// No non-edges (every pair joined by an undirected edge or an arc).
  bool is_complete() const;

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  // rel_[u * n + v]: 0 none, 1 undirected, 2 arc u->v, 3 arc v->u.
  enum Rel : std::uint8_t { kNone = 0, kUndirected = 1, kOut = 2, kIn = 3 };

  void check_pair(VertexId u, VertexId v) const;
  void set_rel(VertexId u, VertexId v, Rel uv, Rel vu);

  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

MixedGraph complement(const MixedGraph& g);

/// Flips the arc between u and v. Throws NotDirected if {u, v} is not an arc.
MixedGraph reverse_pair(const MixedGraph& g, UnorderedPair pair);

MixedGraph transitive_tournament(std::size_t n);

/// Tournament number `index` in the labeled enumeration: bit k of `index`
/// orients the k-th pair (lexicographic i < j) as j->i when set.
MixedGraph tournament_from_index(std::size_t n, std::uint64_t index);

/// Pairs are visited in lexicographic order (i < j) and each consumes one
/// draw of std::mt19937_64 seeded with `seed`. The top bit of the draw
/// orients the pair: 0 gives i->j, 1 gives j->i.
MixedGraph random_tournament(std::size_t n, std::uint64_t seed);

struct KindWeights {
  double non_edge = 1.0;
  double undirected = 1.0;
  double directed = 1.0;
};

/// Each pair consumes one draw for its kind (top 53 bits as a uniform in
/// [0, 1), compared against cumulative weights) and, when directed, one more
/// draw for its orientation as in random_tournament.
MixedGraph random_mixed(std::size_t n, KindWeights weights, std::uint64_t seed);

/// Text format:
///   n <N>
///   u <i> <j>     undirected edge
///   d <i> <j>     arc i -> j
/// `#` starts a comment. Unlisted pairs are non-edges.
MixedGraph parse_graph(std::string_view text);
std::string serialize_graph(const MixedGraph& g);

/// Reads the optional `# T 0..k-1` comment that records a T/W split and
/// returns k. Graph parsing ignores it.
std::optional<std::size_t> parse_partition_header(std::string_view text);
std::string serialize_graph_with_partition(const MixedGraph& g,
                                           std::size_t t_count);

/// Stable 64-bit FNV-1a digest of the serialized form, as 16 hex digits.
std::string graph_digest(const MixedGraph& g);

}  // namespace hamparity

#endif  // HAMPARITY_GRAPH_HPP
