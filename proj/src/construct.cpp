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

#include "hamparity/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "hamparity/config.hpp"
#include "hamparity/count.hpp"
#include "hamparity/error.hpp"
#include "hamparity/perm.hpp"
#include "internal/report_builder.hpp"

namespace hamparity {

namespace {

std::vector<VertexId> iota_vertices(VertexId first, std::size_t count) {
  std::vector<VertexId> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

std::uint64_t mask_of(std::span<const VertexId> vs) {
  std::uint64_t m = 0;
  for (VertexId v : vs) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

SplitGraph materialize(const WExtension& ext) {
  const std::size_t k = ext.base.size();
  if (!ext.base.is_tournament()) {
    throw Error(ErrorCode::MalformedExtension, "base graph is not a tournament");
  }
  if (ext.w_count == 0) throw Error(ErrorCode::MalformedExtension, "W is empty");
  const std::size_t n = k + ext.w_count;
  if (n > kMaxVertices) {
    throw Error(ErrorCode::MalformedExtension, "extension has too many vertices");
  }

  SplitGraph out{MixedGraph(n), iota_vertices(0, k),
                 iota_vertices(static_cast<VertexId>(k), ext.w_count)};
  for (const auto& a : ext.base.arcs()) out.graph.set_arc(a.from, a.to);

  std::set<UnorderedPair> seen;
  for (const auto& raw : ext.w_edges) {
    if (raw.lo >= n || raw.hi >= n || raw.lo == raw.hi) {
      throw Error(ErrorCode::MalformedExtension, "W edge out of range");
    }
    const auto e = UnorderedPair::of(raw.lo, raw.hi);
    if (e.hi < k) {
      throw Error(ErrorCode::MalformedExtension,
                  "edge {" + std::to_string(e.lo) + ", " + std::to_string(e.hi) +
                      "} does not touch W");
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::MalformedExtension, "repeated W edge");
    }
    out.graph.set_undirected(e.lo, e.hi);
  }
  return out;
}

WExtension extension_from_graph(const MixedGraph& g, std::size_t t_count) {
  if (t_count == 0 || t_count >= g.size()) {
    throw Error(ErrorCode::MalformedExtension, "T must be a proper nonempty prefix");
  }
  WExtension ext{MixedGraph(t_count), g.size() - t_count, {}};
  for (VertexId i = 0; i < g.size(); ++i)
    for (VertexId j = i + 1; j < g.size(); ++j) {
      const auto k = g.kind(i, j);
      if (j < t_count) {
        if (k != PairKind::Directed) {
          throw Error(ErrorCode::MalformedExtension, "T part is not a tournament");
        }
        if (g.has_arc(i, j)) ext.base.set_arc(i, j);
        else ext.base.set_arc(j, i);
      } else if (k == PairKind::Directed) {
        throw Error(ErrorCode::MalformedExtension, "arc touching W");
      } else if (k == PairKind::Undirected) {
        ext.w_edges.push_back({i, j});
      }
    }
  return ext;
}

WExtension random_extension(std::size_t t_count, std::size_t w_count,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WExtension ext{MixedGraph(t_count), w_count, {}};
  for (VertexId i = 0; i < t_count; ++i)
    for (VertexId j = i + 1; j < t_count; ++j) {
      if (rng() >> 63) ext.base.set_arc(j, i);
      else ext.base.set_arc(i, j);
    }
  const std::size_t n = t_count + w_count;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = std::max<VertexId>(i + 1, static_cast<VertexId>(t_count));
         j < n; ++j) {
      if (rng() >> 63) ext.w_edges.push_back({i, j});
    }
  return ext;
}

SplitGraph gadget_from_mixed(const MixedGraph& g) {
  const auto a = g.unoriented_pairs();
  if (a.empty()) throw Error(ErrorCode::EmptyA, "E1 u E2 is empty");
  const std::size_t n = g.size();
  SplitGraph out{MixedGraph(n + a.size()), iota_vertices(0, n),
                 iota_vertices(static_cast<VertexId>(n), a.size())};
  for (const auto& arc : g.arcs()) out.graph.set_arc(arc.from, arc.to);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto w = static_cast<VertexId>(n + k);
    out.graph.set_undirected(a[k].lo, w);
    out.graph.set_undirected(a[k].hi, w);
  }
  return out;
}

ParityReport gadget_equivalence_check(const MixedGraph& g, Engine engine) {
  detail::require_two_vertices(g);
  const SplitGraph split = gadget_from_mixed(g);
  const auto a = g.unoriented_pairs();
  const std::uint64_t t_mask = mask_of(split.t);

  detail::ReportBuilder b("gadget", g, engine);
  b.param("w_count", std::to_string(split.w.size()));
  const Count lhs = b.measure(
      "gadget_hamilton_t",
      [&] {
        return count_constrained(hamilton_transitions(split.graph), t_mask,
                                 t_mask);
      },
      [&] {
        return select(split.graph, [&](const NeighborPairProfile& p) {
          return is_hamilton_profile(p) && ((t_mask >> p.front().from) & 1U) &&
                 ((t_mask >> p.back().to) & 1U);
        });
      });
  const Count rhs = b.measure(
      "N_A", [&] { return detail::n_a_fast(g, a, b); },
      [&] { return count_n_a_brute(g, a); });
  return b.finish(lhs == rhs);
}

namespace {

class PathSystemSearch {
 public:
  PathSystemSearch(const SplitGraph& split,
                   const std::function<void(const PathSystem&)>& visit)
      : g_(split.graph), t_(split.t), w_(split.w), visit_(visit),
        covered_(g_.size(), false), t_degree_(g_.size(), 0) {}

  void run() { extend_system(); }

 private:
  bool edge(VertexId u, VertexId v) const {
    return g_.kind(u, v) == PairKind::Undirected;
  }

  // True if a path between x and y would close a cycle in the union.
  bool connected(VertexId x, VertexId y) const {
    std::vector<VertexId> parent(g_.size());
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& p : system_.paths) parent[find(p.front())] = find(p.back());
    return find(x) == find(y);
  }

  void extend_system() {
    VertexId target = 0;
    bool found = false;
    for (VertexId v : w_) {
      if (!covered_[v]) {
        target = v;
        found = true;
        break;
      }
    }
    if (!found) {
      visit_(system_);
      return;
    }
    for (VertexId t1 : t_) {
      if (t_degree_[t1] >= 2) continue;
      for (VertexId w1 : w_) {
        if (covered_[w1] || !edge(t1, w1)) continue;
        path_ = {t1, w1};
        covered_[w1] = true;
        extend_path(target);
        covered_[w1] = false;
      }
    }
  }

  void extend_path(VertexId target) {
    const VertexId t1 = path_.front();
    const VertexId cur = path_.back();
    const bool has_target =
        std::find(path_.begin(), path_.end(), target) != path_.end();

    for (VertexId t2 : t_) {
      if (t2 <= t1 || t_degree_[t2] >= 2 || !edge(cur, t2)) continue;
      if (!has_target || connected(t1, t2)) continue;
      auto path = path_;
      path.push_back(t2);
      ++t_degree_[t1];
      ++t_degree_[t2];
      system_.paths.push_back(std::move(path));
      const auto saved = path_;
      extend_system();
      path_ = saved;
      system_.paths.pop_back();
      --t_degree_[t1];
      --t_degree_[t2];
    }
    for (VertexId w2 : w_) {
      if (covered_[w2] || !edge(cur, w2)) continue;
      covered_[w2] = true;
      path_.push_back(w2);
      extend_path(target);
      path_.pop_back();
      covered_[w2] = false;
    }
  }

  const MixedGraph& g_;
  const std::vector<VertexId>& t_;
  const std::vector<VertexId>& w_;
  const std::function<void(const PathSystem&)>& visit_;
  std::vector<bool> covered_;
  std::vector<std::uint8_t> t_degree_;
  std::vector<VertexId> path_;
  PathSystem system_;
};

}  // namespace

void for_each_path_system(const SplitGraph& split,
                          const std::function<void(const PathSystem&)>& visit) {
  if (split.w.size() > path_system_cap()) {
    throw Error(ErrorCode::ScaleRefusal,
                "path-system enumeration refused for |W| = " +
                    std::to_string(split.w.size()) + " (cap " +
                    std::to_string(path_system_cap()) + ")");
  }
  if (split.w.empty()) return;
  PathSystemSearch(split, visit).run();
}

std::vector<PathSystem> enumerate_path_systems(const SplitGraph& split) {
  std::vector<PathSystem> out;
  for_each_path_system(split, [&](const PathSystem& ps) { out.push_back(ps); });
  return out;
}

MixedGraph replace_along(const MixedGraph& tournament, const PathSystem& ps) {
  if (!tournament.is_tournament()) {
    throw Error(ErrorCode::NotATournament, "replace_along needs a tournament");
  }
  MixedGraph out = tournament;
  std::set<UnorderedPair> seen;
  for (const auto& path : ps.paths) {
    if (path.size() < 2 || path.front() >= tournament.size() ||
        path.back() >= tournament.size() || path.front() == path.back()) {
      throw Error(ErrorCode::InvalidArgument,
                  "path endpoints must be two distinct vertices of T");
    }
    const auto e = UnorderedPair::of(path.front(), path.back());
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicateEndpointPair,
                  "two paths join " + std::to_string(e.lo) + " and " +
                      std::to_string(e.hi));
    }
    out.set_undirected(e.lo, e.hi);
  }
  return out;
}

ParityReport redei_via_dirac_check(const WExtension& ext, Engine engine) {
  const SplitGraph split = materialize(ext);
  detail::require_two_vertices(ext.base);
  const std::uint64_t t_mask = mask_of(split.t);
  const auto systems = enumerate_path_systems(split);

  detail::ReportBuilder b("redei-via-dirac", split.graph, engine);
  b.param("t_count", std::to_string(split.t.size()));
  b.param("w_count", std::to_string(split.w.size()));

  const Count total = b.measure(
      "hamilton_t",
      [&] {
        return count_constrained(hamilton_transitions(split.graph), t_mask,
                                 t_mask);
      },
      [&] {
        return select(split.graph, [&](const NeighborPairProfile& p) {
          return is_hamilton_profile(p) && ((t_mask >> p.front().from) & 1U) &&
                 ((t_mask >> p.back().to) & 1U);
        });
      });

  std::vector<Count> fast_terms;
  std::vector<Count> oracle_terms;
  for (const auto& ps : systems) {
    const MixedGraph replaced = replace_along(ext.base, ps);
    const auto a = replaced.undirected_edges();
    if (engine != Engine::Oracle) {
      fast_terms.push_back(replaced.reversed_arcs().size() <= subset_sum_cap()
                               ? count_n_a_inclusion_exclusion(replaced, a)
                               : count_n_a_dp(replaced, a));
    }
    if (engine != Engine::Dp) oracle_terms.push_back(count_n_a_brute(replaced, a));
  }
  if (engine == Engine::Both && fast_terms != oracle_terms) b.mark_disagreement();

  const auto& terms = engine == Engine::Oracle ? oracle_terms : fast_terms;
  Count term_sum = 0;
  Count odd_terms = 0;
  for (const auto& t : terms) {
    term_sum += t;
    if (!is_even(t)) ++odd_terms;
  }
  b.record("path_systems", Count(static_cast<unsigned long>(systems.size())));
  b.record("term_sum", term_sum);
  b.record("odd_terms", odd_terms);
  return b.finish(odd_terms == 0 && term_sum == total);
}

}  // namespace hamparity
