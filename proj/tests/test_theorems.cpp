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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include <json.hpp>

#include "hamparity/count.hpp"
#include "hamparity/error.hpp"
#include "hamparity/sample.hpp"
#include "hamparity/theorems.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace hamparity;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::InvalidArgument;
}

MixedGraph random_complete_mixed(std::size_t n, std::uint64_t seed) {
  return random_mixed(n, {0, 1, 2}, seed);
}

}  // namespace

TEST_CASE("redei") {
  auto r = verify_redei(transitive_tournament(6));
  CHECK(r.theorem == "redei");
  CHECK(r.pass);
  CHECK(r.count("hamilton") == 1);

  r = verify_redei(fixtures::three_cycle(), Engine::Both);
  CHECK(r.pass);
  CHECK(r.count("hamilton") == 3);
  CHECK(r.count("hamilton_oracle") == 3);

  for (std::uint64_t i = 0; i < 1024; ++i) CHECK(verify_redei(tournament_from_index(5, i)).pass);

  CHECK(code_of([] { verify_redei(fixtures::worked_example()); }) == ErrorCode::NotATournament);
  CHECK(code_of([] { verify_redei(MixedGraph(1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("redei-stronger") {
  // 3-cycle on {0,1,2} plus w = 3 joined to 0 and 1.
  MixedGraph g(4);
  g.set_arc(0, 1);
  g.set_arc(1, 2);
  g.set_arc(2, 0);
  g.set_undirected(3, 0);
  g.set_undirected(3, 1);
  const std::vector<VertexId> t{0, 1, 2};
  const std::vector<VertexId> w{3};
  const auto r = verify_redei_stronger(g, t, w, Engine::Both);
  CHECK(r.pass);
  CHECK(is_even(r.count("hamilton_t")));
  CHECK(r.count("hamilton_t") == r.count("hamilton_t_oracle"));
  // (2,0,3,1) and (1,3,0,...) style paths: check against plain enumeration.
  const auto m = reference::matrix_of(g);
  const auto expected = reference::count(m, [&](const reference::Order& x) {
    return reference::steps_within(m, x, "uf") && x.front() != 3 && x.back() != 3;
  });
  CHECK(r.count("hamilton_t") == expected);

  MixedGraph isolated(4);
  isolated.set_arc(0, 1);
  isolated.set_arc(1, 2);
  isolated.set_arc(2, 0);
  const auto r0 = verify_redei_stronger(isolated, t, w);
  CHECK(r0.pass);
  CHECK(r0.count("hamilton_t") == 0);

  CHECK(code_of([&] { verify_redei_stronger(g, std::vector<VertexId>{0, 1}, w); }) ==
        ErrorCode::BadPartition);
  CHECK(code_of([&] {
          verify_redei_stronger(g, std::vector<VertexId>{0, 1, 2, 3}, std::vector<VertexId>{});
        }) == ErrorCode::BadPartition);
  CHECK(code_of([&] {
          verify_redei_stronger(g, std::vector<VertexId>{0, 3}, std::vector<VertexId>{1, 2});
        }) == ErrorCode::BadPartition);
  MixedGraph hole = g;
  hole.set_non_edge(0, 1);
  CHECK(code_of([&] { verify_redei_stronger(hole, t, w); }) == ErrorCode::BadPartition);
}

TEST_CASE("berge") {
  const MixedGraph g = fixtures::worked_example();
  const auto r = verify_berge_stronger(g, Engine::Both);
  CHECK(r.pass);
  CHECK(r.count("hamilton") == 1);
  CHECK(r.count("hamilton_complement") == reference::hamilton(complement(g)));

  for (std::uint64_t s = 0; s < 50; ++s) {
    const MixedGraph t = random_tournament(2 + s % 7, s);
    const auto rt = verify_berge_stronger(t);
    CHECK(rt.pass);
    CHECK(rt.count("hamilton") == rt.count("hamilton_complement"));
  }
}

TEST_CASE("corollary1") {
  auto r = verify_dirac_corollary1(fixtures::complete_undirected(3));
  CHECK(r.pass);
  CHECK(r.count("with_undirected") == 6);
  r = verify_dirac_corollary1(random_tournament(6, 4), Engine::Both);
  CHECK(r.pass);
  CHECK(r.count("with_undirected") == 0);
  for (std::uint64_t s = 0; s < 60; ++s)
    CHECK(verify_dirac_corollary1(random_complete_mixed(2 + s % 7, s), Engine::Both).pass);
  CHECK(code_of([] { verify_dirac_corollary1(fixtures::worked_example()); }) ==
        ErrorCode::NotComplete);
}

TEST_CASE("dirac-stronger") {
  const MixedGraph g = fixtures::worked_example();
  const std::vector<UnorderedPair> a{{fixtures::kA, fixtures::kB}};
  const auto r = verify_dirac_stronger(g, a, Engine::Both);
  CHECK(r.pass);
  CHECK(r.count("N_A") == 3);
  CHECK(r.count("N_eqA") == 1);
  CHECK(r.count("difference") == 2);
  CHECK(r.count("N_A_oracle") == 3);

  // A empty reduces to |P0| = N_0 and |P3| = N_=0.
  for (std::uint64_t s = 0; s < 30; ++s) {
    const MixedGraph h = random_mixed(2 + s % 6, {1, 1, 1}, s);
    const auto e = verify_dirac_stronger(h, {});
    CHECK(e.count("N_A") == count_class(h, ClassId::P0));
    CHECK(e.count("N_eqA") == count_class(h, ClassId::P3));
  }

  // |A| = n - 1 as a single chain: N_A = N_=A.
  const MixedGraph k5 = fixtures::complete_undirected(5);
  const std::vector<UnorderedPair> chain{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  const auto rc = verify_dirac_stronger(k5, chain, Engine::Both);
  CHECK(rc.count("N_A") == rc.count("N_eqA"));
  CHECK(rc.count("N_A") == 2);

  CHECK(code_of([&] {
          verify_dirac_stronger(g, std::vector<UnorderedPair>{{fixtures::kA, fixtures::kC}});
        }) == ErrorCode::MalformedRequirement);

  for (std::uint64_t s = 0; s < 150; ++s) {
    const MixedGraph h = random_mixed(2 + s % 7, {1, 1, 1}, fixtures::case_seed(30, s));
    const auto rr = verify_dirac_stronger(h, sample_requirement(h, s), Engine::Both);
    CHECK(rr.pass);
  }
}

TEST_CASE("corollary2") {
  const MixedGraph t = random_tournament(7, 9);
  const auto r = verify_dirac_corollary2(t, Engine::Both);
  CHECK(r.pass);
  CHECK(r.count("P0") == r.count("P3"));
  const auto f = verify_dirac_corollary2(fixtures::worked_example(), Engine::Both);
  CHECK(f.pass);
  CHECK(f.count("P0") == 4);
  CHECK(f.count("P3") == 0);
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK(verify_dirac_corollary2(random_mixed(9 + s % 8, {1, 1, 1}, s)).pass);
}

TEST_CASE("corollary3") {
  const auto r = verify_dirac_corollary3(fixtures::worked_example(), Engine::Both);
  CHECK(r.pass);
  CHECK(r.count("N_A") == 2);
  // Four unoriented pairs on four vertices: they cannot form disjoint paths.
  MixedGraph g = fixtures::complete_undirected(4);
  g.set_arc(0, 2);
  g.set_arc(1, 3);
  const auto z = verify_dirac_corollary3(g, Engine::Both);
  CHECK(z.pass);
  CHECK(z.count("N_A") == 0);
  CHECK(code_of([] { verify_dirac_corollary3(random_tournament(5, 1)); }) == ErrorCode::EmptyA);
}

TEST_CASE("berge-dirac") {
  const MixedGraph t = random_tournament(6, 2);
  const auto r = verify_berge_dirac(t, Engine::Both);
  CHECK(r.pass);
  CHECK(r.count("sum") == 4 * r.count("P1"));
  const auto f = verify_berge_dirac(fixtures::worked_example(), Engine::Both);
  CHECK(f.pass);
  CHECK(f.count("P0") == 4);
  CHECK(f.count("P1") == 1);
  CHECK(f.count("P2") == 1);
  CHECK(f.count("P3") == 0);
  CHECK(f.count("with_e1_and_e2") == f.count("signed"));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto rr =
        verify_berge_dirac(random_mixed(2 + s % 7, {1, 1, 1}, fixtures::case_seed(31, s)),
                           Engine::Oracle);
    CHECK(rr.pass);
    CHECK(rr.count("with_e1_and_e2") == rr.count("signed"));
  }
}

TEST_CASE("tournaments: redei pass iff corollary2 pass with odd P3") {
  for (std::uint64_t i = 0; i < 1024; ++i) {
    const MixedGraph t = tournament_from_index(5, i);
    const auto r = verify_redei(t);
    const auto c = verify_dirac_corollary2(t);
    CHECK(r.pass == (c.pass && !is_even(c.count("P3"))));
  }
}

TEST_CASE("engine agreement on random graphs") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const MixedGraph g = random_mixed(2 + s % 7, {1, 2, 2}, fixtures::case_seed(32, s));
    for (const auto& r : {verify_berge_stronger(g, Engine::Both),
                          verify_dirac_corollary2(g, Engine::Both),
                          verify_berge_dirac(g, Engine::Both)}) {
      CHECK(r.pass);
      for (const auto& c : r.counts) {
        const auto suffix = std::string("_oracle");
        if (c.name.size() > suffix.size() &&
            c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) == 0)
          CHECK(r.count(c.name.substr(0, c.name.size() - suffix.size())) == c.value);
      }
    }
  }
}

TEST_CASE("report json") {
  const auto r = verify_dirac_stronger(fixtures::worked_example(),
                                       std::vector<UnorderedPair>{{0, 1}}, Engine::Both);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["theorem"] == "dirac-stronger");
  CHECK(j["n"] == 3);
  CHECK(j["counts"]["N_A"] == "3");
  CHECK(j["parities"]["N_A"] == "odd");
  CHECK(j["parities"]["difference"] == "even");
  CHECK(j["inputs"]["a"] == "0-1");
  CHECK(j["inputs"]["digest"].get<std::string>().size() == 16);
  CHECK(j["pass"] == true);
  CHECK(j["engine"] == "both");
  CHECK(r.to_json().find('\n') == std::string::npos);
}

TEST_CASE("mixed_graph_from_index") {
  CHECK(mixed_graph_from_index(2, 0) == MixedGraph(2));
  CHECK(mixed_graph_from_index(2, 1).kind(0, 1) == PairKind::Undirected);
  CHECK(mixed_graph_from_index(2, 2).has_arc(0, 1));
  CHECK(mixed_graph_from_index(2, 3).has_arc(1, 0));
  // Pair order (0,1), (0,2), (1,2): digit 1 selects pair (0,2).
  CHECK(mixed_graph_from_index(3, 4).kind(0, 2) == PairKind::Undirected);
  CHECK(mixed_graph_from_index(3, 16).kind(1, 2) == PairKind::Undirected);
  CHECK(code_of([] { mixed_graph_from_index(2, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("parity witnesses") {
  const auto w = find_parity_witnesses();
  const auto even = verify_berge_stronger(w.both_even, Engine::Both);
  const auto odd = verify_berge_stronger(w.both_odd, Engine::Both);
  CHECK(even.pass);
  CHECK(odd.pass);
  CHECK(is_even(even.count("hamilton")));
  CHECK(is_even(even.count("hamilton_complement")));
  CHECK_FALSE(is_even(odd.count("hamilton")));
  CHECK_FALSE(is_even(odd.count("hamilton_complement")));
  CHECK(w.both_even.size() <= 4);
  CHECK(w.both_odd.size() <= 4);
  const auto tt = verify_berge_stronger(transitive_tournament(4));
  CHECK(tt.count("hamilton") == 1);
  CHECK(tt.count("hamilton_complement") == 1);
}
