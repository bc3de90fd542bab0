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

/* C interface to the hamparity library.
 *
 * Graphs are opaque handles owned by the caller and released with
 * hp_graph_free. Functions return an hp_status; on failure a description is
 * available from hp_last_error_message() on the same thread. Strings handed
 * out by the library are released with hp_string_free.
 *
 * Counts are returned as decimal strings because they exceed 64 bits. */
#ifndef HAMPARITY_H
#define HAMPARITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define HP_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define HP_API __attribute__((visibility("default")))
#else
#  define HP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hp_graph hp_graph;

typedef enum hp_status {
  HP_OK = 0,
  HP_ERROR_INVALID_ARGUMENT = 1,
  HP_ERROR_PARSE = 2,
  HP_ERROR_PRECONDITION = 3, /* theorem or construction hypothesis violated */
  HP_ERROR_SCALE = 4,        /* a configured size cap was exceeded */
  HP_ERROR_SEARCH_EXHAUSTED = 5,
  HP_ERROR_ENGINE_MISMATCH = 6, /* oracle and DP disagree */
  HP_ERROR_INTERNAL = 7
} hp_status;

typedef enum hp_engine {
  HP_ENGINE_ORACLE = 0,
  HP_ENGINE_DP = 1,
  HP_ENGINE_BOTH = 2
} hp_engine;

typedef enum hp_pair_kind {
  HP_PAIR_NON_EDGE = 0,
  HP_PAIR_UNDIRECTED = 1,
  HP_PAIR_ARC_FORWARD = 2, /* i -> j for the queried (i, j) */
  HP_PAIR_ARC_BACKWARD = 3 /* j -> i */
} hp_pair_kind;

typedef enum hp_class { HP_P0 = 0, HP_P1 = 1, HP_P2 = 2, HP_P3 = 3 } hp_class;

HP_API const char* hp_version(void);
HP_API const char* hp_last_error_message(void);
HP_API const char* hp_status_name(hp_status status);
HP_API void hp_string_free(char* s);

HP_API void hp_set_oracle_cap(uint32_t cap);
HP_API uint32_t hp_oracle_cap(void);

/* Graph construction. `t_count` receives k from a `# T 0..k-1` header, or 0
 * when the text has none; it may be NULL. */
HP_API hp_status hp_graph_parse(const char* text, hp_graph** out,
                                uint32_t* t_count);
HP_API hp_status hp_graph_serialize(const hp_graph* g, char** out);
/* Serializes with the `# T` / `# W` header; t_count of 0 means none. */
HP_API hp_status hp_graph_serialize_split(const hp_graph* g, uint32_t t_count,
                                          char** out);
HP_API hp_status hp_graph_transitive(uint32_t n, hp_graph** out);
HP_API hp_status hp_graph_tournament_from_index(uint32_t n, uint64_t index,
                                                hp_graph** out);
HP_API hp_status hp_graph_random_tournament(uint32_t n, uint64_t seed,
                                            hp_graph** out);
HP_API hp_status hp_graph_random_mixed(uint32_t n, double w_non_edge,
                                       double w_undirected, double w_directed,
                                       uint64_t seed, hp_graph** out);
/* Random tournament on t_count vertices plus w_count W vertices. */
HP_API hp_status hp_graph_random_extension(uint32_t t_count, uint32_t w_count,
                                           uint64_t seed, hp_graph** out);
HP_API hp_status hp_graph_complement(const hp_graph* g, hp_graph** out);
/* Gadget graph; t_count receives the number of original vertices. */
HP_API hp_status hp_graph_gadget(const hp_graph* g, hp_graph** out,
                                 uint32_t* t_count);
HP_API void hp_graph_free(hp_graph* g);

HP_API uint32_t hp_graph_vertex_count(const hp_graph* g);
HP_API hp_status hp_graph_pair_kind(const hp_graph* g, uint32_t i, uint32_t j,
                                    hp_pair_kind* out);

/* Seeded choice of A in E1 u E2. `pairs` needs room for 2 * (n - 1) ids and
 * receives lo/hi interleaved; `pair_count` receives |A|. */
HP_API hp_status hp_sample_requirement(const hp_graph* g, uint64_t seed,
                                       uint32_t* pairs, size_t* pair_count);

/* Exact counts as decimal strings. With HP_ENGINE_BOTH a disagreement
 * returns HP_ERROR_ENGINE_MISMATCH. */
HP_API hp_status hp_count_hamilton(const hp_graph* g, hp_engine engine,
                                   char** decimal);
HP_API hp_status hp_count_class(const hp_graph* g, hp_class c,
                                hp_engine engine, char** decimal);
/* N_A (exact == 0) or N_=A (exact != 0). `pairs` holds pair_count
 * interleaved lo/hi vertex ids. */
HP_API hp_status hp_count_na(const hp_graph* g, const uint32_t* pairs,
                             size_t pair_count, int exact, hp_engine engine,
                             char** decimal);

typedef struct hp_verify_options {
  /* redei-stronger: T is 0..t_count-1 and W the rest. */
  uint32_t t_count;
  /* dirac-stronger: interleaved lo/hi ids of A. */
  const uint32_t* a_pairs;
  size_t a_pair_count;
} hp_verify_options;

/* Theorem ids: redei, redei-stronger, berge, corollary1, dirac-stronger,
 * corollary2, corollary3, berge-dirac, gadget, redei-via-dirac.
 * On HP_OK, `report_json` holds one JSON object and `pass` the verdict.
 * `options` may be NULL. */
HP_API hp_status hp_verify(const hp_graph* g, const char* theorem,
                           hp_engine engine, const hp_verify_options* options,
                           char** report_json, int* pass);

/* First both-even and both-odd Berge witnesses among graphs with n <= 4. */
HP_API hp_status hp_find_parity_witnesses(hp_graph** both_even,
                                          hp_graph** both_odd);

#ifdef __cplusplus
}
#endif

#endif /* HAMPARITY_H */
