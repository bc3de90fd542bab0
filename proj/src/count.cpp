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

#include "hamparity/count.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hamparity/config.hpp"
#include "hamparity/error.hpp"
#include "hamparity/perm.hpp"
#include "internal/segments.hpp"

namespace hamparity {

const char* infeasible_reason_name(InfeasibleReason r) noexcept {
  switch (r) {
    case InfeasibleReason::None: return "none";
    case InfeasibleReason::DegreeExceeded: return "degree";
    case InfeasibleReason::Cycle: return "cycle";
    case InfeasibleReason::ConflictingDirection: return "direction";
  }
  return "?";
}

namespace detail {

std::vector<UnorderedPair> normalized_a(const MixedGraph& g,
                                        std::span<const UnorderedPair> a) {
  std::vector<UnorderedPair> out;
  out.reserve(a.size());
  for (const auto& raw : a) {
    if (raw.lo >= g.size() || raw.hi >= g.size() || raw.lo == raw.hi) {
      throw Error(ErrorCode::MalformedRequirement,
                  "A element {" + std::to_string(raw.lo) + ", " +
                      std::to_string(raw.hi) + "} is not a vertex pair");
    }
    const auto e = UnorderedPair::of(raw.lo, raw.hi);
    if (g.kind(e.lo, e.hi) == PairKind::Directed) {
      throw Error(ErrorCode::MalformedRequirement,
                  "A element {" + std::to_string(e.lo) + ", " +
                      std::to_string(e.hi) + "} is an arc, not in E1 u E2");
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Arc> normalized_d(const MixedGraph& g, std::span<const Arc> d) {
  std::vector<Arc> out(d.begin(), d.end());
  for (const auto& e : out) {
    if (e.from >= g.size() || e.to >= g.size() || e.from == e.to ||
        !g.has_arc(e.to, e.from)) {
      throw Error(ErrorCode::MalformedRequirement,
                  "D element (" + std::to_string(e.from) + ", " +
                      std::to_string(e.to) + ") is not a reversed arc");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SubPermDecomposition analyze(std::size_t n, std::span<const UnorderedPair> a,
                             std::span<const Arc> d) {
  SubPermDecomposition out;

  std::vector<std::uint8_t> degree(n, 0);
  auto bump = [&](VertexId v) { return ++degree[v] <= 2; };
  for (const auto& e : a) {
    if (!bump(e.lo) || !bump(e.hi)) {
      out.reason = InfeasibleReason::DegreeExceeded;
      return out;
    }
  }
  for (const auto& e : d) {
    if (!bump(e.from) || !bump(e.to)) {
      out.reason = InfeasibleReason::DegreeExceeded;
      return out;
    }
  }

  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto join = [&](VertexId u, VertexId v) {
    const VertexId ru = find(u);
    const VertexId rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
    return true;
  };
  for (const auto& e : a) {
    if (!join(e.lo, e.hi)) {
      out.reason = InfeasibleReason::Cycle;
      return out;
    }
  }
  for (const auto& e : d) {
    if (!join(e.from, e.to)) {
      out.reason = InfeasibleReason::Cycle;
      return out;
    }
  }

  // Degree <= 2 and acyclic: every component is a path.
  constexpr VertexId kNone = ~VertexId{0};
  std::vector<std::array<VertexId, 2>> nbr(n, {kNone, kNone});
  auto link = [&](VertexId u, VertexId v) {
    (nbr[u][0] == kNone ? nbr[u][0] : nbr[u][1]) = v;
    (nbr[v][0] == kNone ? nbr[v][0] : nbr[v][1]) = u;
  };
  for (const auto& e : a) link(e.lo, e.hi);
  for (const auto& e : d) link(e.from, e.to);

  auto is_d = [&](VertexId u, VertexId v) {
    return std::binary_search(d.begin(), d.end(), Arc{u, v});
  };

  std::vector<bool> seen(n, false);
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start] || degree[start] == 2) continue;
    std::vector<VertexId> seg{start};
    seen[start] = true;
    VertexId prev = kNone;
    VertexId cur = start;
    for (;;) {
      VertexId next = nbr[cur][0] != prev ? nbr[cur][0] : nbr[cur][1];
      if (next == kNone || next == prev) break;
      seg.push_back(next);
      seen[next] = true;
      prev = cur;
      cur = next;
    }

    bool forward = false;
    bool backward = false;
    for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
      if (is_d(seg[i], seg[i + 1])) forward = true;
      if (is_d(seg[i + 1], seg[i])) backward = true;
    }
    if (forward && backward) {
      out.segments.clear();
      out.reason = InfeasibleReason::ConflictingDirection;
      return out;
    }
    if (backward) std::reverse(seg.begin(), seg.end());
    if (forward || backward) ++out.q;
    else if (seg.size() > 1) ++out.p;
    out.segments.push_back(std::move(seg));
  }

  out.feasible = true;
  out.r = out.segments.size();
  return out;
}

}  // namespace detail

SubPermDecomposition decompose(const MixedGraph& g, const RequiredPairs& req) {
  const auto a = detail::normalized_a(g, req.a);
  const auto d = detail::normalized_d(g, req.d);
  return detail::analyze(g.size(), a, d);
}

namespace {

Count m_from(const SubPermDecomposition& s) {
  if (!s.feasible) return 0;
  Count out = factorial(s.r);
  out <<= s.p;
  return out;
}

}  // namespace

Count closed_form_m(const MixedGraph& g, const RequiredPairs& req) {
  return m_from(decompose(g, req));
}

Count brute_m(const MixedGraph& g, const RequiredPairs& req) {
  const auto a = detail::normalized_a(g, req.a);
  const auto d = detail::normalized_d(g, req.d);
  const std::size_t n = g.size();
  return select(g, [&](const NeighborPairProfile& prof) {
    std::vector<bool> adjacent(n * n, false);
    for (const auto& e : prof) adjacent[e.from * n + e.to] = true;
    for (const auto& e : a)
      if (!adjacent[e.lo * n + e.hi] && !adjacent[e.hi * n + e.lo]) return false;
    for (const auto& e : d)
      if (!adjacent[e.from * n + e.to]) return false;
    return true;
  });
}

Count count_n_a_brute(const MixedGraph& g, std::span<const UnorderedPair> a_in) {
  const auto a = detail::normalized_a(g, a_in);
  const std::size_t n = g.size();
  return select(g, [&](const NeighborPairProfile& prof) {
    std::vector<bool> adjacent(n * n, false);
    for (const auto& e : prof) {
      if (e.cls == PairClass::E3bar) return false;
      adjacent[e.from * n + e.to] = adjacent[e.to * n + e.from] = true;
    }
    for (const auto& e : a)
      if (!adjacent[e.lo * n + e.hi]) return false;
    return true;
  });
}

Count count_n_eq_a_brute(const MixedGraph& g,
                         std::span<const UnorderedPair> a_in) {
  const auto a = detail::normalized_a(g, a_in);
  return select(g, [&](const NeighborPairProfile& prof) {
    std::size_t hits = 0;
    for (const auto& e : prof) {
      if (e.cls == PairClass::E3bar) return false;
      if (e.cls == PairClass::E1 || e.cls == PairClass::E2) {
        if (!std::binary_search(a.begin(), a.end(),
                                UnorderedPair::of(e.from, e.to)))
          return false;
        ++hits;
      }
    }
    // Pairs of a permutation are distinct, so hits == |A| means all of A.
    return hits == a.size();
  });
}

Count count_n_a_inclusion_exclusion(const MixedGraph& g,
                                    std::span<const UnorderedPair> a_in) {
  const auto a = detail::normalized_a(g, a_in);
  const std::size_t n = g.size();
  auto e3bar = g.reversed_arcs();
  std::sort(e3bar.begin(), e3bar.end());
  if (e3bar.size() > subset_sum_cap()) {
    throw Error(ErrorCode::ScaleRefusal,
                "|E3bar| = " + std::to_string(e3bar.size()) +
                    " exceeds the inclusion-exclusion cap " +
                    std::to_string(subset_sum_cap()));
  }
  if (a.size() >= n) return 0;
  const std::size_t max_d = n - 1 - a.size();

  Count total = 0;
  std::vector<Arc> d;
  d.reserve(max_d);

  // Every visited D is a term (-1)^|D| M(A, D). D is kept sorted because the
  // arcs are taken in increasing index order.
  auto visit = [&](auto&& self, std::size_t next_index) -> void {
    const auto s = detail::analyze(n, a, d);
    if (!s.feasible) return;
    if (d.size() % 2 == 0) total += m_from(s);
    else total -= m_from(s);
    if (d.size() == max_d) return;
    for (std::size_t k = next_index; k < e3bar.size(); ++k) {
      d.push_back(e3bar[k]);
      self(self, k + 1);
      d.pop_back();
    }
  };
  visit(visit, 0);
  return total;
}

}  // namespace hamparity
