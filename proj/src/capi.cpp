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

#include "hamparity/hamparity.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

#include "hamparity/config.hpp"
#include "hamparity/construct.hpp"
#include "hamparity/count.hpp"
#include "hamparity/error.hpp"
#include "hamparity/graph.hpp"
#include "hamparity/perm.hpp"
#include "hamparity/sample.hpp"
#include "hamparity/theorems.hpp"

struct hp_graph {
  hamparity::MixedGraph graph;
};

namespace {

using namespace hamparity;

thread_local std::string last_error;

hp_status fail(hp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

hp_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return HP_ERROR_PARSE;
    case ErrorCode::ScaleRefusal: return HP_ERROR_SCALE;
    case ErrorCode::SearchExhausted: return HP_ERROR_SEARCH_EXHAUSTED;
    case ErrorCode::InvalidArgument:
    case ErrorCode::LengthMismatch: return HP_ERROR_INVALID_ARGUMENT;
    case ErrorCode::NotDirected:
    case ErrorCode::MalformedRequirement:
    case ErrorCode::NotATournament:
    case ErrorCode::NotComplete:
    case ErrorCode::BadPartition:
    case ErrorCode::EmptyA:
    case ErrorCode::MalformedExtension:
    case ErrorCode::DuplicateEndpointPair: return HP_ERROR_PRECONDITION;
  }
  return HP_ERROR_INTERNAL;
}

template <class F>
hp_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.code()),
                std::string(error_code_name(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(HP_ERROR_SCALE, "out of memory");
  } catch (const std::exception& e) {
    return fail(HP_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hp_status emit_graph(MixedGraph g, hp_graph** out) {
  if (out == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null output");
  *out = new hp_graph{std::move(g)};
  return HP_OK;
}

std::vector<UnorderedPair> pairs_from(const uint32_t* ids, size_t count) {
  if (count > 0 && ids == nullptr) {
    throw Error(ErrorCode::InvalidArgument, "null pair array");
  }
  std::vector<UnorderedPair> out;
  for (size_t k = 0; k < count; ++k) {
    if (ids[2 * k] == ids[2 * k + 1]) {
      throw Error(ErrorCode::MalformedRequirement, "A element repeats a vertex");
    }
    out.push_back(UnorderedPair::of(ids[2 * k], ids[2 * k + 1]));
  }
  return out;
}

Engine engine_of(hp_engine e) {
  switch (e) {
    case HP_ENGINE_ORACLE: return Engine::Oracle;
    case HP_ENGINE_DP: return Engine::Dp;
    case HP_ENGINE_BOTH: return Engine::Both;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown engine");
}

template <class Fast, class Oracle>
hp_status emit_count(hp_engine engine, Fast&& fast, Oracle&& oracle,
                     char** decimal) {
  if (decimal == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null output");
  Count value;
  switch (engine_of(engine)) {
    case Engine::Dp: value = fast(); break;
    case Engine::Oracle: value = oracle(); break;
    case Engine::Both: {
      value = fast();
      const Count check = oracle();
      if (value != check) {
        return fail(HP_ERROR_ENGINE_MISMATCH,
                    "dp count " + to_decimal(value) + " != oracle count " +
                        to_decimal(check));
      }
      break;
    }
  }
  *decimal = copy_string(to_decimal(value));
  return HP_OK;
}

std::vector<VertexId> range(VertexId first, VertexId last) {
  std::vector<VertexId> out;
  for (VertexId v = first; v < last; ++v) out.push_back(v);
  return out;
}

}  // namespace

extern "C" {

const char* hp_version(void) { return "1.0.0"; }

const char* hp_last_error_message(void) { return last_error.c_str(); }

const char* hp_status_name(hp_status status) {
  switch (status) {
    case HP_OK: return "ok";
    case HP_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case HP_ERROR_PARSE: return "parse";
    case HP_ERROR_PRECONDITION: return "precondition";
    case HP_ERROR_SCALE: return "scale";
    case HP_ERROR_SEARCH_EXHAUSTED: return "search-exhausted";
    case HP_ERROR_ENGINE_MISMATCH: return "engine-mismatch";
    case HP_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

void hp_string_free(char* s) { std::free(s); }

void hp_set_oracle_cap(uint32_t cap) { set_oracle_cap(cap); }
uint32_t hp_oracle_cap(void) { return static_cast<uint32_t>(oracle_cap()); }

hp_status hp_graph_parse(const char* text, hp_graph** out, uint32_t* t_count) {
  return guarded([&] {
    if (text == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null text");
    const std::string_view view(text);
    MixedGraph g = parse_graph(view);
    if (t_count != nullptr) {
      const auto t = parse_partition_header(view);
      *t_count = t ? static_cast<uint32_t>(*t) : 0;
    }
    return emit_graph(std::move(g), out);
  });
}

hp_status hp_graph_serialize(const hp_graph* g, char** out) {
  return hp_graph_serialize_split(g, 0, out);
}

hp_status hp_graph_serialize_split(const hp_graph* g, uint32_t t_count,
                                   char** out) {
  return guarded([&] {
    if (g == nullptr || out == nullptr) {
      return fail(HP_ERROR_INVALID_ARGUMENT, "null argument");
    }
    *out = copy_string(t_count == 0
                           ? serialize_graph(g->graph)
                           : serialize_graph_with_partition(g->graph, t_count));
    return HP_OK;
  });
}

hp_status hp_graph_transitive(uint32_t n, hp_graph** out) {
  return guarded([&] { return emit_graph(transitive_tournament(n), out); });
}

hp_status hp_graph_tournament_from_index(uint32_t n, uint64_t index,
                                         hp_graph** out) {
  return guarded([&] { return emit_graph(tournament_from_index(n, index), out); });
}

hp_status hp_graph_random_tournament(uint32_t n, uint64_t seed, hp_graph** out) {
  return guarded([&] { return emit_graph(random_tournament(n, seed), out); });
}

hp_status hp_graph_random_mixed(uint32_t n, double w_non_edge,
                                double w_undirected, double w_directed,
                                uint64_t seed, hp_graph** out) {
  return guarded([&] {
    return emit_graph(
        random_mixed(n, {w_non_edge, w_undirected, w_directed}, seed), out);
  });
}

hp_status hp_graph_random_extension(uint32_t t_count, uint32_t w_count,
                                    uint64_t seed, hp_graph** out) {
  return guarded([&] {
    return emit_graph(materialize(random_extension(t_count, w_count, seed)).graph,
                      out);
  });
}

hp_status hp_graph_complement(const hp_graph* g, hp_graph** out) {
  return guarded([&] {
    if (g == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null graph");
    return emit_graph(complement(g->graph), out);
  });
}

hp_status hp_graph_gadget(const hp_graph* g, hp_graph** out, uint32_t* t_count) {
  return guarded([&] {
    if (g == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null graph");
    SplitGraph split = gadget_from_mixed(g->graph);
    if (t_count != nullptr) *t_count = static_cast<uint32_t>(split.t.size());
    return emit_graph(std::move(split.graph), out);
  });
}

void hp_graph_free(hp_graph* g) { delete g; }

uint32_t hp_graph_vertex_count(const hp_graph* g) {
  return g == nullptr ? 0 : static_cast<uint32_t>(g->graph.size());
}

hp_status hp_graph_pair_kind(const hp_graph* g, uint32_t i, uint32_t j,
                             hp_pair_kind* out) {
  return guarded([&] {
    if (g == nullptr || out == nullptr) {
      return fail(HP_ERROR_INVALID_ARGUMENT, "null argument");
    }
    switch (g->graph.kind(i, j)) {
      case PairKind::NonEdge: *out = HP_PAIR_NON_EDGE; break;
      case PairKind::Undirected: *out = HP_PAIR_UNDIRECTED; break;
      case PairKind::Directed:
        *out = g->graph.has_arc(i, j) ? HP_PAIR_ARC_FORWARD : HP_PAIR_ARC_BACKWARD;
        break;
    }
    return HP_OK;
  });
}

hp_status hp_sample_requirement(const hp_graph* g, uint64_t seed,
                                uint32_t* pairs, size_t* pair_count) {
  return guarded([&] {
    if (g == nullptr || pairs == nullptr || pair_count == nullptr) {
      return fail(HP_ERROR_INVALID_ARGUMENT, "null argument");
    }
    const auto a = sample_requirement(g->graph, seed);
    for (size_t k = 0; k < a.size(); ++k) {
      pairs[2 * k] = a[k].lo;
      pairs[2 * k + 1] = a[k].hi;
    }
    *pair_count = a.size();
    return HP_OK;
  });
}

hp_status hp_count_hamilton(const hp_graph* g, hp_engine engine, char** decimal) {
  return guarded([&] {
    if (g == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null graph");
    return emit_count(
        engine, [&] { return hamilton_count(g->graph); },
        [&] { return hamilton_count_brute(g->graph); }, decimal);
  });
}

hp_status hp_count_class(const hp_graph* g, hp_class c, hp_engine engine,
                         char** decimal) {
  return guarded([&] {
    if (g == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null graph");
    if (c < HP_P0 || c > HP_P3) return fail(HP_ERROR_INVALID_ARGUMENT, "bad class");
    const auto id = static_cast<ClassId>(c);
    return emit_count(
        engine, [&] { return count_class(g->graph, id); },
        [&] { return count_class_brute(g->graph, id); }, decimal);
  });
}

hp_status hp_count_na(const hp_graph* g, const uint32_t* pairs,
                      size_t pair_count, int exact, hp_engine engine,
                      char** decimal) {
  return guarded([&] {
    if (g == nullptr) return fail(HP_ERROR_INVALID_ARGUMENT, "null graph");
    const auto a = pairs_from(pairs, pair_count);
    if (exact != 0) {
      return emit_count(
          engine, [&] { return count_n_eq_a_dp(g->graph, a); },
          [&] { return count_n_eq_a_brute(g->graph, a); }, decimal);
    }
    return emit_count(
        engine,
        [&] {
          return g->graph.reversed_arcs().size() <= subset_sum_cap()
                     ? count_n_a_inclusion_exclusion(g->graph, a)
                     : count_n_a_dp(g->graph, a);
        },
        [&] { return count_n_a_brute(g->graph, a); }, decimal);
  });
}

hp_status hp_verify(const hp_graph* g, const char* theorem, hp_engine engine,
                    const hp_verify_options* options, char** report_json,
                    int* pass) {
  return guarded([&] {
    if (g == nullptr || theorem == nullptr || report_json == nullptr) {
      return fail(HP_ERROR_INVALID_ARGUMENT, "null argument");
    }
    const hp_verify_options none{0, nullptr, 0};
    const hp_verify_options& opt = options != nullptr ? *options : none;
    const Engine e = engine_of(engine);
    const MixedGraph& graph = g->graph;
    const std::string_view id(theorem);

    ParityReport report;
    if (id == "redei") {
      report = verify_redei(graph, e);
    } else if (id == "redei-stronger" || id == "redei-via-dirac") {
      if (opt.t_count == 0) {
        return fail(HP_ERROR_PRECONDITION,
                    "BadPartition: T/W split required (t_count = 0)");
      }
      if (id == "redei-stronger") {
        if (opt.t_count > graph.size()) {
          return fail(HP_ERROR_PRECONDITION, "BadPartition: t_count exceeds n");
        }
        const auto t = range(0, opt.t_count);
        const auto w = range(opt.t_count, static_cast<VertexId>(graph.size()));
        report = verify_redei_stronger(graph, t, w, e);
      } else {
        report = redei_via_dirac_check(extension_from_graph(graph, opt.t_count), e);
      }
    } else if (id == "berge") {
      report = verify_berge_stronger(graph, e);
    } else if (id == "corollary1") {
      report = verify_dirac_corollary1(graph, e);
    } else if (id == "dirac-stronger") {
      report = verify_dirac_stronger(
          graph, pairs_from(opt.a_pairs, opt.a_pair_count), e);
    } else if (id == "corollary2") {
      report = verify_dirac_corollary2(graph, e);
    } else if (id == "corollary3") {
      report = verify_dirac_corollary3(graph, e);
    } else if (id == "berge-dirac") {
      report = verify_berge_dirac(graph, e);
    } else if (id == "gadget") {
      report = gadget_equivalence_check(graph, e);
    } else {
      return fail(HP_ERROR_INVALID_ARGUMENT,
                  "unknown theorem '" + std::string(id) + "'");
    }
    *report_json = copy_string(report.to_json());
    if (pass != nullptr) *pass = report.pass ? 1 : 0;
    return HP_OK;
  });
}

hp_status hp_find_parity_witnesses(hp_graph** both_even, hp_graph** both_odd) {
  return guarded([&] {
    if (both_even == nullptr || both_odd == nullptr) {
      return fail(HP_ERROR_INVALID_ARGUMENT, "null output");
    }
    auto w = find_parity_witnesses();
    *both_even = new hp_graph{std::move(w.both_even)};
    *both_odd = new hp_graph{std::move(w.both_odd)};
    return HP_OK;
  });
}

}  // extern "C"
