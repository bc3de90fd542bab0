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

#include "hamparity/theorems.hpp"

#include <functional>
#include <optional>
#include <string>

#include "hamparity/config.hpp"
#include "hamparity/error.hpp"
#include "hamparity/perm.hpp"
#include "internal/report_builder.hpp"
#include "internal/segments.hpp"

namespace hamparity {

namespace detail {

ReportBuilder::ReportBuilder(std::string theorem, const MixedGraph& g,
                             Engine engine)
    : engine_(engine) {
  report_.theorem = std::move(theorem);
  report_.n = g.size();
  report_.digest = graph_digest(g);
  report_.engine = engine;
}

Count ReportBuilder::measure(const std::string& name,
                             const std::function<Count()>& fast,
                             const std::function<Count()>& oracle) {
  switch (engine_) {
    case Engine::Dp: {
      Count v = fast();
      report_.add(name, v);
      return v;
    }
    case Engine::Oracle: {
      Count v = oracle();
      report_.add(name, v);
      return v;
    }
    case Engine::Both: break;
  }
  Count f = fast();
  Count o = oracle();
  report_.add(name, f);
  report_.add(name + "_oracle", o);
  if (f != o) agree_ = false;
  return f;
}

void ReportBuilder::record(const std::string& name, Count value) {
  report_.add(name, std::move(value));
}

void ReportBuilder::param(std::string key, std::string value) {
  report_.params.emplace_back(std::move(key), std::move(value));
}

ParityReport ReportBuilder::finish(bool predicate) {
  report_.pass = predicate && agree_;
  return std::move(report_);
}

void require_two_vertices(const MixedGraph& g) {
  if (g.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "parity theorems need at least 2 vertices, got " +
                    std::to_string(g.size()));
  }
}

std::string format_pairs(std::span<const UnorderedPair> pairs) {
  std::string out;
  for (const auto& e : pairs) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.lo) + '-' + std::to_string(e.hi);
  }
  return out;
}

std::string format_vertices(std::span<const VertexId> vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

Count n_a_fast(const MixedGraph& g, std::span<const UnorderedPair> a,
               ReportBuilder& builder) {
  if (g.reversed_arcs().size() <= subset_sum_cap()) {
    builder.param("n_a_route", "inclusion-exclusion");
    return count_n_a_inclusion_exclusion(g, a);
  }
  builder.param("n_a_route", "segment-dp");
  return count_n_a_dp(g, a);
}

}  // namespace detail

using detail::ReportBuilder;

namespace {

bool same_parity(const Count& a, const Count& b) {
  return is_even(a) == is_even(b);
}

}  // namespace

ParityReport verify_redei(const MixedGraph& t, Engine engine) {
  detail::require_two_vertices(t);
  if (!t.is_tournament()) {
    throw Error(ErrorCode::NotATournament, "graph has non-arc pairs");
  }
  ReportBuilder b("redei", t, engine);
  const Count h = b.measure(
      "hamilton", [&] { return hamilton_count(t); },
      [&] { return hamilton_count_brute(t); });
  return b.finish(!is_even(h));
}

ParityReport verify_redei_stronger(const MixedGraph& g,
                                   std::span<const VertexId> t,
                                   std::span<const VertexId> w, Engine engine) {
  detail::require_two_vertices(g);
  const std::size_t n = g.size();
  std::vector<int> side(n, -1);
  auto place = [&](std::span<const VertexId> vs, int s) {
    for (VertexId v : vs) {
      if (v >= n || side[v] != -1) {
        throw Error(ErrorCode::BadPartition,
                    "T and W must partition the vertices");
      }
      side[v] = s;
    }
  };
  place(t, 0);
  place(w, 1);
  if (t.size() + w.size() != n) {
    throw Error(ErrorCode::BadPartition, "T and W must partition the vertices");
  }
  if (w.empty()) throw Error(ErrorCode::BadPartition, "W is empty");
  if (t.size() < 2) throw Error(ErrorCode::BadPartition, "T has fewer than 2 vertices");
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const auto k = g.kind(u, v);
      if (side[u] == 0 && side[v] == 0 && k != PairKind::Directed) {
        throw Error(ErrorCode::BadPartition,
                    "T is not a tournament: pair {" + std::to_string(u) + ", " +
                        std::to_string(v) + "}");
      }
      if ((side[u] == 1 || side[v] == 1) && k == PairKind::Directed) {
        throw Error(ErrorCode::BadPartition,
                    "arc touching W: pair {" + std::to_string(u) + ", " +
                        std::to_string(v) + "}");
      }
    }

  std::uint64_t t_mask = 0;
  for (VertexId v : t) t_mask |= std::uint64_t{1} << v;

  ReportBuilder b("redei-stronger", g, engine);
  b.param("t", detail::format_vertices(t));
  b.param("w", detail::format_vertices(w));
  const Count h = b.measure(
      "hamilton_t",
      [&] { return count_constrained(hamilton_transitions(g), t_mask, t_mask); },
      [&] {
        return select(g, [&](const NeighborPairProfile& p) {
          return is_hamilton_profile(p) && ((t_mask >> p.front().from) & 1U) &&
                 ((t_mask >> p.back().to) & 1U);
        });
      });
  return b.finish(is_even(h));
}

ParityReport verify_berge_stronger(const MixedGraph& g, Engine engine) {
  detail::require_two_vertices(g);
  const MixedGraph gc = complement(g);
  ReportBuilder b("berge", g, engine);
  const Count h = b.measure(
      "hamilton", [&] { return hamilton_count(g); },
      [&] { return hamilton_count_brute(g); });
  const Count hc = b.measure(
      "hamilton_complement", [&] { return hamilton_count(gc); },
      [&] { return hamilton_count_brute(gc); });
  return b.finish(same_parity(h, hc));
}

ParityReport verify_dirac_corollary1(const MixedGraph& g, Engine engine) {
  detail::require_two_vertices(g);
  if (!g.is_complete()) {
    throw Error(ErrorCode::NotComplete, "graph has non-edges");
  }
  ReportBuilder b("corollary1", g, engine);
  const Count h = b.measure(
      "hamilton", [&] { return hamilton_count(g); },
      [&] { return hamilton_count_brute(g); });
  const Count p3 = b.measure(
      "P3", [&] { return count_class(g, ClassId::P3); },
      [&] { return count_class_brute(g, ClassId::P3); });
  const Count mixed = b.measure(
      "with_undirected", [&] { return Count(h - p3); },
      [&] {
        return select(g, [](const NeighborPairProfile& p) {
          bool undirected = false;
          for (const auto& e : p) {
            if (e.cls == PairClass::E1 || e.cls == PairClass::E3bar) return false;
            if (e.cls == PairClass::E2) undirected = true;
          }
          return undirected;
        });
      });
  return b.finish(is_even(mixed));
}

ParityReport verify_dirac_stronger(const MixedGraph& g,
                                   std::span<const UnorderedPair> a_in,
                                   Engine engine) {
  detail::require_two_vertices(g);
  const auto a = detail::normalized_a(g, a_in);
  ReportBuilder b("dirac-stronger", g, engine);
  b.param("a", detail::format_pairs(a));
  const Count n_a = b.measure(
      "N_A", [&] { return detail::n_a_fast(g, a, b); },
      [&] { return count_n_a_brute(g, a); });
  const Count n_eq_a = b.measure(
      "N_eqA", [&] { return count_n_eq_a_dp(g, a); },
      [&] { return count_n_eq_a_brute(g, a); });
  b.record("difference", n_a - n_eq_a);
  return b.finish(same_parity(n_a, n_eq_a));
}

ParityReport verify_dirac_corollary2(const MixedGraph& g, Engine engine) {
  detail::require_two_vertices(g);
  ReportBuilder b("corollary2", g, engine);
  const Count p0 = b.measure(
      "P0", [&] { return count_class(g, ClassId::P0); },
      [&] { return count_class_brute(g, ClassId::P0); });
  const Count p3 = b.measure(
      "P3", [&] { return count_class(g, ClassId::P3); },
      [&] { return count_class_brute(g, ClassId::P3); });
  return b.finish(same_parity(p0, p3));
}

ParityReport verify_dirac_corollary3(const MixedGraph& g, Engine engine) {
  detail::require_two_vertices(g);
  const auto a = g.unoriented_pairs();
  if (a.empty()) throw Error(ErrorCode::EmptyA, "E1 u E2 is empty");
  ReportBuilder b("corollary3", g, engine);
  const Count n_a = b.measure(
      "N_A", [&] { return detail::n_a_fast(g, a, b); },
      [&] { return count_n_a_brute(g, a); });
  return b.finish(is_even(n_a));
}

ParityReport verify_berge_dirac(const MixedGraph& g, Engine engine) {
  detail::require_two_vertices(g);
  ReportBuilder b("berge-dirac", g, engine);
  Count p[4];
  for (int i = 0; i < 4; ++i) {
    const auto c = static_cast<ClassId>(i);
    p[i] = b.measure(
        class_name(c), [&] { return count_class(g, c); },
        [&] { return count_class_brute(g, c); });
  }
  const Count sum = p[0] + p[1] + p[2] + p[3];
  const Count signed_sum = p[0] - p[1] - p[2] + p[3];
  b.record("sum", sum);
  b.record("signed", signed_sum);
  bool ok = is_even(sum) && is_even(signed_sum);
  if (engine != Engine::Dp) {
    // Permutations with an E1 pair, an E2 pair and no E3bar pair.
    const Count both_kinds = select(g, [](const NeighborPairProfile& prof) {
      bool e1 = false;
      bool e2 = false;
      for (const auto& e : prof) {
        if (e.cls == PairClass::E3bar) return false;
        e1 = e1 || e.cls == PairClass::E1;
        e2 = e2 || e.cls == PairClass::E2;
      }
      return e1 && e2;
    });
    b.record("with_e1_and_e2", both_kinds);
    ok = ok && both_kinds == signed_sum && is_even(both_kinds);
  }
  return b.finish(ok);
}

MixedGraph mixed_graph_from_index(std::size_t n, std::uint64_t index) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs >= 32 || (index >> (2 * pairs)) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "mixed graph index out of range for n = " + std::to_string(n));
  }
  MixedGraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j, index >>= 2) {
      switch (index & 3U) {
        case 0: break;
        case 1: g.set_undirected(i, j); break;
        case 2: g.set_arc(i, j); break;
        default: g.set_arc(j, i); break;
      }
    }
  return g;
}

ParityWitnesses find_parity_witnesses() {
  std::optional<MixedGraph> even;
  std::optional<MixedGraph> odd;
  for (std::size_t n = 2; n <= 4 && !(even && odd); ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
    for (std::uint64_t index = 0; index < total && !(even && odd); ++index) {
      const MixedGraph g = mixed_graph_from_index(n, index);
      const bool h_even = is_even(hamilton_count(g));
      const bool hc_even = is_even(hamilton_count(complement(g)));
      if (h_even && hc_even && !even) even = g;
      if (!h_even && !hc_even && !odd) odd = g;
    }
  }
  if (!even || !odd) {
    throw Error(ErrorCode::SearchExhausted,
                "no parity witness pair among mixed graphs with n <= 4");
  }
  return {*std::move(even), *std::move(odd)};
}

}  // namespace hamparity
