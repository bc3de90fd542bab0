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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hamparity/construct.hpp"
#include "hamparity/count.hpp"
#include "hamparity/perm.hpp"
#include "hamparity/sample.hpp"
#include "hamparity/theorems.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace hamparity;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Failures counted against a total.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  void check(bool ok) {
    ++checked;
    if (!ok) ++failed;
  }
  Outcome outcome(const std::string& what) const {
    return {failed == 0 && checked > 0,
            what + ": " + std::to_string(checked - failed) + "/" + std::to_string(checked)};
  }
};

MixedGraph random_graph(std::size_t n, std::uint64_t stream, std::uint64_t index) {
  return random_mixed(n, {1, 1, 1}, fixtures::case_seed(stream, index));
}

// Every (A, D) with A in E1 u E2 and D in E3bar: one bit per vertex pair.
void for_each_requirement(const MixedGraph& g, const std::function<void(const RequiredPairs&)>& f) {
  std::vector<UnorderedPair> pairs;
  for (VertexId i = 0; i < g.size(); ++i)
    for (VertexId j = i + 1; j < g.size(); ++j) pairs.push_back({i, j});
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    RequiredPairs req;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!((bits >> k) & 1U)) continue;
      const auto [lo, hi] = pairs[k];
      if (g.kind(lo, hi) != PairKind::Directed)
        req.a.push_back(pairs[k]);
      else if (g.has_arc(lo, hi))
        req.d.push_back({hi, lo});
      else
        req.d.push_back({lo, hi});
    }
    f(req);
  }
}

RequiredPairs random_requirement(const MixedGraph& g, std::uint64_t seed) {
  RequiredPairs req;
  std::uint64_t bits = fixtures::case_seed(77, seed);
  for (const auto& e : g.unoriented_pairs()) {
    if ((bits & 3U) == 0) req.a.push_back(e);
    bits = fixtures::case_seed(bits, 1);
  }
  for (const auto& e : g.reversed_arcs()) {
    if ((bits & 3U) == 0) req.d.push_back(e);
    bits = fixtures::case_seed(bits, 2);
  }
  return req;
}

bool oracle_agrees(const ParityReport& r) {
  const std::string suffix = "_oracle";
  for (const auto& c : r.counts) {
    if (c.name.size() <= suffix.size() ||
        c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) != 0)
      continue;
    if (r.count(c.name.substr(0, c.name.size() - suffix.size())) != c.value) return false;
  }
  return true;
}

Outcome redei_exhaustive() {
  Tally t;
  for (std::size_t n : {5, 6}) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t i = 0; i < total; ++i)
      t.check(!is_even(hamilton_count(tournament_from_index(n, i))));
  }
  // Independent enumeration on the n = 5 family.
  for (std::uint64_t i = 0; i < 1024; ++i) {
    const MixedGraph g = tournament_from_index(5, i);
    t.check(hamilton_count(g) == reference::hamilton(g));
  }
  return t.outcome("odd counts on 1024 + 32768 tournaments, 1024 reference cross-checks");
}

Outcome transitive_base() {
  Tally t;
  for (std::size_t n = 2; n <= 16; ++n) t.check(hamilton_count(transitive_tournament(n)) == 1);
  return t.outcome("n = 2..16 with exactly one path");
}

Outcome closed_form_equivalence() {
  Tally exhaustive;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1));
    for (std::uint64_t i = 0; i < graphs; ++i) {
      const MixedGraph g = mixed_graph_from_index(n, i);
      for_each_requirement(g, [&](const RequiredPairs& req) {
        exhaustive.check(closed_form_m(g, req) == brute_m(g, req));
      });
    }
  }
  Tally random;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const MixedGraph g = random_graph(2 + s % 7, 1, s);
    const auto req = random_requirement(g, s);
    random.check(closed_form_m(g, req) == brute_m(g, req));
  }
  Outcome o = exhaustive.outcome("exhaustive n <= 4");
  const Outcome r = random.outcome("random n <= 8");
  return {o.pass && r.pass, o.detail + ", " + r.detail};
}

Outcome inclusion_exclusion() {
  Tally t;
  for (std::uint64_t s = 0; s < 250; ++s) {
    const MixedGraph g = random_graph(2 + s % 7, 2, s);
    const auto a = sample_requirement(g, s);
    t.check(count_n_a_inclusion_exclusion(g, a) == count_n_a_brute(g, a));
  }
  return t.outcome("random (G, A) with n <= 8");
}

Outcome dirac_parity() {
  Tally random;
  for (std::uint64_t s = 0; s < 600; ++s) {
    const MixedGraph g = random_graph(2 + s % 7, 3, s);
    const auto a = sample_requirement(g, s);
    random.check(is_even(count_n_a_brute(g, a)) == is_even(count_n_eq_a_brute(g, a)));
  }
  Tally exhaustive;
  for (std::uint64_t i = 0; i < 64; ++i) {
    const MixedGraph g = mixed_graph_from_index(3, i);
    const auto pool = g.unoriented_pairs();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pool.size()); ++bits) {
      std::vector<UnorderedPair> a;
      for (std::size_t k = 0; k < pool.size(); ++k)
        if ((bits >> k) & 1U) a.push_back(pool[k]);
      exhaustive.check(is_even(count_n_a_brute(g, a)) == is_even(count_n_eq_a_brute(g, a)));
    }
  }
  const Outcome r = random.outcome("random n <= 8");
  const Outcome e = exhaustive.outcome("every A on every n = 3 graph");
  return {r.pass && e.pass, r.detail + ", " + e.detail};
}

Outcome theorem_sweeps() {
  struct Family {
    const char* name;
    std::function<ParityReport(std::uint64_t, std::size_t, Engine)> run;
  };
  const std::vector<Family> families = {
      {"redei-stronger",
       [](std::uint64_t s, std::size_t n, Engine e) {
         const std::size_t w = 1 + s % (n - 2);
         const SplitGraph split = materialize(random_extension(n - w, w, fixtures::case_seed(60, s)));
         return verify_redei_stronger(split.graph, split.t, split.w, e);
       }},
      {"berge",
       [](std::uint64_t s, std::size_t n, Engine e) {
         return verify_berge_stronger(random_graph(n, 61, s), e);
       }},
      {"corollary1",
       [](std::uint64_t s, std::size_t n, Engine e) {
         return verify_dirac_corollary1(random_mixed(n, {0, 1, 1}, fixtures::case_seed(62, s)), e);
       }},
      {"corollary2",
       [](std::uint64_t s, std::size_t n, Engine e) {
         return verify_dirac_corollary2(random_graph(n, 63, s), e);
       }},
      {"corollary3",
       [](std::uint64_t s, std::size_t n, Engine e) {
         // Mostly arcs so that 1 <= |E1 u E2| <= n - 1 is common; others are
         // redrawn.
         for (std::uint64_t k = 0;; ++k) {
           const MixedGraph g =
               random_mixed(n, {1, 1, 2.0 * n}, fixtures::case_seed(64, s * 1000 + k));
           const auto m = g.unoriented_pairs().size();
           if (m >= 1 && m <= n - 1) return verify_dirac_corollary3(g, e);
         }
       }},
      {"berge-dirac",
       [](std::uint64_t s, std::size_t n, Engine e) {
         return verify_berge_dirac(random_graph(n, 65, s), e);
       }},
  };
  bool pass = true;
  std::string detail;
  for (const auto& f : families) {
    Tally both;
    for (std::uint64_t s = 0; s < 300; ++s) {
      const std::size_t n = 3 + s % 6;
      const ParityReport r = f.run(s, n, Engine::Both);
      both.check(r.pass && oracle_agrees(r));
    }
    Tally dp;
    if (std::string(f.name) != "corollary3") {
      for (std::uint64_t s = 0; s < 60; ++s) {
        const std::size_t n = 9 + s % 6;
        dp.check(f.run(1000 + s, n, Engine::Dp).pass);
      }
    }
    pass = pass && both.failed == 0 && dp.failed == 0;
    if (!detail.empty()) detail += "; ";
    detail += std::string(f.name) + " " + std::to_string(both.checked - both.failed) + "/" +
              std::to_string(both.checked) + " both";
    if (dp.checked)
      detail += " + " + std::to_string(dp.checked - dp.failed) + "/" + std::to_string(dp.checked) +
                " dp n <= 14";
  }
  return {pass, detail};
}

Outcome witnesses() {
  const auto w = find_parity_witnesses();
  const auto even = verify_berge_stronger(w.both_even, Engine::Both);
  const auto odd = verify_berge_stronger(w.both_odd, Engine::Both);
  const bool ok = even.pass && odd.pass && oracle_agrees(even) && oracle_agrees(odd) &&
                  is_even(even.count("hamilton")) && is_even(even.count("hamilton_complement")) &&
                  !is_even(odd.count("hamilton")) && !is_even(odd.count("hamilton_complement"));
  return {ok, "even/even on n = " + std::to_string(w.both_even.size()) + " (" +
                  to_decimal(even.count("hamilton")) + ", " +
                  to_decimal(even.count("hamilton_complement")) + "), odd/odd on n = " +
                  std::to_string(w.both_odd.size()) + " (" + to_decimal(odd.count("hamilton")) +
                  ", " + to_decimal(odd.count("hamilton_complement")) + ")"};
}

Outcome gadget_bridge() {
  Tally t;
  t.check(gadget_equivalence_check(fixtures::worked_example(), Engine::Both).pass);
  for (std::uint64_t s = 0; t.checked < 121; ++s) {
    const MixedGraph g = random_mixed(2 + s % 5, {1, 1, 3}, fixtures::case_seed(70, s));
    const auto m = g.unoriented_pairs().size();
    if (m == 0 || m > 4) continue;
    const auto r = gadget_equivalence_check(g, Engine::Both);
    t.check(r.pass && oracle_agrees(r));
  }
  return t.outcome("worked example plus random n <= 6");
}

Outcome decomposition_identity() {
  Tally t;
  std::size_t empty = 0;
  std::size_t with_systems = 0;
  auto run = [&](const WExtension& ext) {
    const auto r = redei_via_dirac_check(ext, Engine::Both);
    t.check(r.pass && oracle_agrees(r));
    if (r.count("path_systems") > 0) {
      ++with_systems;
    } else {
      ++empty;
      t.check(r.count("hamilton_t") == 0);
    }
  };
  // A W vertex with a single edge admits no path system.
  run({fixtures::three_cycle(), 1, {{0, 3}}});
  for (std::uint64_t s = 0; with_systems < 60; ++s) {
    const std::size_t n = 3 + s % 6;
    const std::size_t w = 1 + s % (n - 2);
    run(random_extension(n - w, w, fixtures::case_seed(71, s)));
  }
  Outcome o = t.outcome("extensions with n <= 8");
  o.pass = o.pass && empty > 0;
  o.detail += ", " + std::to_string(with_systems) + " with path systems, " +
              std::to_string(empty) + " without";
  return o;
}

Outcome worked_example() {
  const MixedGraph g = fixtures::worked_example();
  const VertexId a = fixtures::kA, b = fixtures::kB, c = fixtures::kC;
  Tally t;
  t.check(hamilton_count(g) == 1);
  t.check(select(g, [&](const NeighborPairProfile& p) {
            for (const auto& e : p)
              if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return true;
            return false;
          }) == 4);
  const Permutation x{c, a, b};
  const auto prof = profile(g, x);
  t.check(prof.size() == 2 && prof[0].cls == PairClass::E3bar && prof[1].cls == PairClass::E2);
  return t.outcome("hamilton = 1, contains {a,b} = 4, profile of (c,a,b) = {E3bar, E2}");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "Redei exhaustive", redei_exhaustive},
      {2, "transitive base case", transitive_base},
      {3, "closed form vs enumeration", closed_form_equivalence},
      {4, "inclusion-exclusion exactness", inclusion_exclusion},
      {5, "N_A / N_=A parity", dirac_parity},
      {6, "theorem sweeps", theorem_sweeps},
      {7, "Berge parity witnesses", witnesses},
      {8, "gadget bridge", gadget_bridge},
      {9, "path-system decomposition", decomposition_identity},
      {10, "worked example", worked_example},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-30s %s  %.2fs  %s\n", c.id, c.title, o.pass ? "PASS" : "FAIL",
                secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
