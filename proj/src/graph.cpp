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

#include "hamparity/graph.hpp"

#include <random>
#include <string>

#include "hamparity/error.hpp"

namespace hamparity {

MixedGraph::MixedGraph(std::size_t n) : n_(n), rel_(n * n, kNone) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::InvalidArgument,
                "graph has " + std::to_string(n) + " vertices; at most " +
                    std::to_string(kMaxVertices) + " are supported");
  }
}

void MixedGraph::check_pair(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex out of range: {" + std::to_string(u) + ", " +
                    std::to_string(v) + "} with n = " + std::to_string(n_));
  }
  if (u == v) {
    throw Error(ErrorCode::InvalidArgument,
                "self pair at vertex " + std::to_string(u));
  }
}

void MixedGraph::set_rel(VertexId u, VertexId v, Rel uv, Rel vu) {
  check_pair(u, v);
  rel_[u * n_ + v] = uv;
  rel_[v * n_ + u] = vu;
}

PairKind MixedGraph::kind(VertexId u, VertexId v) const {
  check_pair(u, v);
  switch (rel_[u * n_ + v]) {
    case kNone: return PairKind::NonEdge;
    case kUndirected: return PairKind::Undirected;
    default: return PairKind::Directed;
  }
}

bool MixedGraph::has_arc(VertexId u, VertexId v) const {
  check_pair(u, v);
  return rel_[u * n_ + v] == kOut;
}

void MixedGraph::set_non_edge(VertexId u, VertexId v) {
  set_rel(u, v, kNone, kNone);
}
void MixedGraph::set_undirected(VertexId u, VertexId v) {
  set_rel(u, v, kUndirected, kUndirected);
}
void MixedGraph::set_arc(VertexId from, VertexId to) {
  set_rel(from, to, kOut, kIn);
}

std::vector<UnorderedPair> MixedGraph::non_edges() const {
  std::vector<UnorderedPair> out;
  for (VertexId i = 0; i < n_; ++i)
    for (VertexId j = i + 1; j < n_; ++j)
      if (rel_[i * n_ + j] == kNone) out.push_back({i, j});
  return out;
}

std::vector<UnorderedPair> MixedGraph::undirected_edges() const {
  std::vector<UnorderedPair> out;
  for (VertexId i = 0; i < n_; ++i)
    for (VertexId j = i + 1; j < n_; ++j)
      if (rel_[i * n_ + j] == kUndirected) out.push_back({i, j});
  return out;
}

std::vector<UnorderedPair> MixedGraph::unoriented_pairs() const {
  auto out = non_edges();
  const auto e2 = undirected_edges();
  out.insert(out.end(), e2.begin(), e2.end());
  return out;
}

std::vector<Arc> MixedGraph::arcs() const {
  std::vector<Arc> out;
  for (VertexId i = 0; i < n_; ++i)
    for (VertexId j = i + 1; j < n_; ++j) {
      if (rel_[i * n_ + j] == kOut) out.push_back({i, j});
      if (rel_[i * n_ + j] == kIn) out.push_back({j, i});
    }
  return out;
}

std::vector<Arc> MixedGraph::reversed_arcs() const {
  auto out = arcs();
  for (auto& a : out) a = a.reversed();
  return out;
}

EdgeClassSizes MixedGraph::class_sizes() const {
  EdgeClassSizes sizes;
  for (VertexId i = 0; i < n_; ++i)
    for (VertexId j = i + 1; j < n_; ++j) {
      switch (rel_[i * n_ + j]) {
        case kNone: ++sizes.non_edges; break;
        case kUndirected: ++sizes.undirected; break;
        default: ++sizes.directed; break;
      }
    }
  return sizes;
}

bool MixedGraph::is_tournament() const {
  const auto s = class_sizes();
  return s.non_edges == 0 && s.undirected == 0;
}

bool MixedGraph::is_complete() const { return class_sizes().non_edges == 0; }

MixedGraph complement(const MixedGraph& g) {
  const std::size_t n = g.size();
  MixedGraph out(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) {
      switch (g.kind(i, j)) {
        case PairKind::NonEdge: out.set_undirected(i, j); break;
        case PairKind::Undirected: out.set_non_edge(i, j); break;
        case PairKind::Directed:
          if (g.has_arc(i, j)) out.set_arc(j, i);
          else out.set_arc(i, j);
          break;
      }
    }
  return out;
}

MixedGraph reverse_pair(const MixedGraph& g, UnorderedPair pair) {
  if (g.kind(pair.lo, pair.hi) != PairKind::Directed) {
    throw Error(ErrorCode::NotDirected,
                "pair {" + std::to_string(pair.lo) + ", " +
                    std::to_string(pair.hi) + "} is not an arc");
  }
  MixedGraph out = g;
  if (g.has_arc(pair.lo, pair.hi)) out.set_arc(pair.hi, pair.lo);
  else out.set_arc(pair.lo, pair.hi);
  return out;
}

MixedGraph transitive_tournament(std::size_t n) {
  MixedGraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.set_arc(i, j);
  return g;
}

MixedGraph tournament_from_index(std::size_t n, std::uint64_t index) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs < 64 && (index >> pairs) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "tournament index " + std::to_string(index) +
                    " out of range for n = " + std::to_string(n));
  }
  MixedGraph g(n);
  std::size_t k = 0;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j, ++k) {
      if (k < 64 && ((index >> k) & 1U)) g.set_arc(j, i);
      else g.set_arc(i, j);
    }
  return g;
}

namespace {

void orient(MixedGraph& g, VertexId i, VertexId j, std::uint64_t draw) {
  if (draw >> 63) g.set_arc(j, i);
  else g.set_arc(i, j);
}

double unit_interval(std::uint64_t draw) {
  return static_cast<double>(draw >> 11) * 0x1.0p-53;
}

}  // namespace

MixedGraph random_tournament(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MixedGraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) orient(g, i, j, rng());
  return g;
}

MixedGraph random_mixed(std::size_t n, KindWeights weights, std::uint64_t seed) {
  if (weights.non_edge < 0 || weights.undirected < 0 || weights.directed < 0) {
    throw Error(ErrorCode::InvalidArgument, "kind weights must be nonnegative");
  }
  const double total = weights.non_edge + weights.undirected + weights.directed;
  if (!(total > 0)) {
    throw Error(ErrorCode::InvalidArgument, "kind weights are all zero");
  }
  const double cut_non_edge = weights.non_edge / total;
  const double cut_undirected = (weights.non_edge + weights.undirected) / total;

  std::mt19937_64 rng(seed);
  MixedGraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) {
      const double u = unit_interval(rng());
      if (u < cut_non_edge) {
        g.set_non_edge(i, j);
      } else if (u < cut_undirected) {
        g.set_undirected(i, j);
      } else {
        orient(g, i, j, rng());
      }
    }
  return g;
}

std::string graph_digest(const MixedGraph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_graph(g)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, hash >>= 4) out[k] = kHex[hash & 0xF];
  return out;
}

}  // namespace hamparity
