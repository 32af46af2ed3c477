// Copyright 2026 The signbal Authors
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

#ifndef SIGNBAL_SIGNBAL_H_
#define SIGNBAL_SIGNBAL_H_

/* C interface to the signbal library. Every function returns an sb_status;
 * on failure sb_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * sb_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(SIGNBAL_BUILDING_LIBRARY)
#define SB_API __attribute__((visibility("default")))
#else
#define SB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_INVALID_ARGUMENT = 1,
  SB_ERR_IO = 2,
  SB_ERR_PARSE = 3,
  SB_ERR_FORMAT = 4,
  SB_ERR_LOOKUP = 5,
  SB_ERR_CONTRACT = 6,
  SB_ERR_UNDEFINED = 7, /* e.g. balance of a graph without transitive triads */
  SB_ERR_LIMIT = 8,
  SB_ERR_INTERNAL = 9
} sb_status;

typedef enum sb_format {
  SB_FORMAT_CSV_RATING = 0,
  SB_FORMAT_TSV_SIGN = 1,
  SB_FORMAT_SIGNED_MATRIX = 2
} sb_format;

typedef enum sb_aggregate {
  SB_AGGREGATE_SUM = 0,
  SB_AGGREGATE_LAST = 1,
  SB_AGGREGATE_MEAN = 2
} sb_aggregate;

typedef enum sb_component { SB_COMPONENT_GIANT = 0, SB_COMPONENT_ALL = 1 } sb_component;

typedef enum sb_balance_mode {
  SB_BALANCE_TYPE_MEAN = 0,
  SB_BALANCE_TRIAD_MEAN = 1
} sb_balance_mode;

typedef enum sb_report_kind {
  SB_REPORT_CENSUS = 0,
  SB_REPORT_BALANCE = 1,
  SB_REPORT_COMPOSITION = 2,
  SB_REPORT_METRICS = 3,
  SB_REPORT_COMPARE = 4
} sb_report_kind;

typedef struct sb_preprocess_config {
  double sign_threshold;
  sb_aggregate aggregate;
  int prune_pendants;
  sb_component keep_component;
} sb_preprocess_config;

/* Absent ratios are NaN. */
typedef struct sb_balance_summary {
  uint64_t type_triads[4]; /* 030T, 120D, 120U, 300 */
  double type_ratio[4];
  double type_mean;
  double triad_mean;
  double nonpartial;
  uint64_t completely_balanced;
  uint64_t partially_balanced;
  uint64_t completely_imbalanced;
  uint64_t triangles;
  uint64_t balanced_triangles;
  double undirected;
} sb_balance_summary;

typedef struct sb_composition_counts {
  uint64_t directed[4]; /* +++, +--, ++-, --- */
  uint64_t undirected[4];
} sb_composition_counts;

typedef struct sb_metrics {
  uint64_t nodes;
  uint64_t edges;
  uint64_t components;
  double transitivity;
  double density;
  double avg_path_length;
  double clustering_coefficient;
} sb_metrics;

typedef struct sb_graph sb_graph;

SB_API const char* sb_version(void);
SB_API const char* sb_status_string(sb_status status);
SB_API const char* sb_last_error(void);
SB_API void sb_string_free(char* s);

/* 0 restores the default (hardware concurrency capped by BALANCE_THREADS). */
SB_API void sb_set_threads(unsigned threads);

SB_API sb_preprocess_config sb_preprocess_config_default(void);

/* Loads records and builds the graph without preprocessing. */
SB_API sb_status sb_graph_load_file(const char* path, sb_format format,
                                    const sb_preprocess_config* config, sb_graph** out);
SB_API sb_status sb_graph_load_buffer(const char* data, size_t size, sb_format format,
                                      const sb_preprocess_config* config, sb_graph** out);
SB_API sb_status sb_graph_preprocess(const sb_graph* graph,
                                     const sb_preprocess_config* config, sb_graph** out);
SB_API sb_status sb_graph_random(size_t nodes, double edge_prob, double neg_prob,
                                 uint64_t seed, sb_graph** out);
SB_API void sb_graph_free(sb_graph* graph);

SB_API size_t sb_graph_node_count(const sb_graph* graph);
SB_API size_t sb_graph_edge_count(const sb_graph* graph);
SB_API size_t sb_graph_component_count(const sb_graph* graph);
SB_API sb_status sb_graph_dump_tsv(const sb_graph* graph, char** out);

SB_API sb_status sb_census(const sb_graph* graph, uint64_t counts[16]);
SB_API const char* sb_triad_type_name(int index);
SB_API sb_status sb_balance(const sb_graph* graph, sb_balance_summary* out);
SB_API sb_status sb_composition(const sb_graph* graph, sb_composition_counts* out);
SB_API sb_status sb_metrics_compute(const sb_graph* graph, sb_metrics* out);

/* `network` labels CSV rows; may be NULL. */
SB_API sb_status sb_report_json(const sb_graph* graph, sb_report_kind kind,
                                sb_balance_mode mode, char** out);
SB_API sb_status sb_report_csv(const sb_graph* graph, sb_report_kind kind,
                               sb_balance_mode mode, const char* network, char** out);

/* Number of fast-path/oracle disagreements; details as a newline-joined
 * string when `details` is non-NULL. */
SB_API sb_status sb_oracle_check(const sb_graph* graph, size_t* mismatches, char** details);

SB_API sb_status sb_sha256_file(const char* path, char** hex);

#ifdef __cplusplus
}
#endif

#endif /* SIGNBAL_SIGNBAL_H_ */
