/* Copyright 2026 The searchtime Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the searchtime library.
 *
 * Every fallible call returns an st_status. On failure the message of the
 * calling thread's last error is available from st_last_error() until the
 * next failing call on that thread. Handles are opaque; each *_create or
 * builder call is paired with a *_destroy. Strings returned through char**
 * are owned by the caller and released with st_string_free. Accessors that
 * return a value directly need a valid handle and an in-range index;
 * destroy functions accept NULL.
 */

#ifndef SEARCHTIME_SEARCHTIME_H_
#define SEARCHTIME_SEARCHTIME_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SEARCHTIME_BUILDING_LIBRARY)
#define ST_API __attribute__((visibility("default")))
#else
#define ST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
  ST_OK = 0,
  ST_ERR_INVALID_ARGUMENT = 1,
  ST_ERR_DOMAIN = 2,
  ST_ERR_CAPACITY = 3,
  ST_ERR_NO_GOAL = 4,
  ST_ERR_INTERNAL = 5
} st_status;

typedef enum st_conditioning {
  ST_COND_NONE = 0,
  ST_COND_GIVEN_GOAL = 1,
  ST_COND_DROP_NO_GOAL_TERM = 2
} st_conditioning;

typedef enum st_method { ST_BFS = 0, ST_DFS = 1 } st_method;

typedef enum st_verdict {
  ST_VERDICT_BFS = 0,
  ST_VERDICT_DFS = 1,
  ST_VERDICT_BAND = 2
} st_verdict;

typedef struct st_estimate {
  double lower;
  double mean;
  double upper;
  st_conditioning conditioning;
} st_estimate;

ST_API const char* st_version(void);
ST_API const char* st_last_error(void);
ST_API const char* st_status_name(st_status status);
ST_API void st_string_free(char* s);

/* ---- distributions ---- */

ST_API st_status st_tc(double p, uint64_t m, double* out);
ST_API st_status st_exp_rate(double p, double* out);
ST_API st_status st_level_goal_prob(double p, uint64_t n_k, double* out);

typedef struct st_goal_probs st_goal_probs;

/* Requires entries in [0, 1] and at least one positive entry. */
ST_API st_status st_goal_probs_create(const double* probs, size_t count,
                                      st_goal_probs** out);
ST_API st_status st_goal_probs_single(int depth, int level, double p,
                                      st_goal_probs** out);
ST_API st_status st_goal_probs_gaussian(int depth, int mu, double sigma2,
                                        st_goal_probs** out);
ST_API void st_goal_probs_destroy(st_goal_probs* p);
ST_API int st_goal_probs_depth(const st_goal_probs* p);
ST_API double st_goal_probs_get(const st_goal_probs* p, int level);

/* F_0..F_D and the no-goal entry F_{D+1}: writes depth + 2 values.
 * `sizes` holds depth + 1 level sizes. */
ST_API st_status st_first_goal_level_probs(const st_goal_probs* p,
                                           const uint64_t* sizes,
                                           size_t size_count, double* out,
                                           size_t out_count);

/* ---- complete trees ---- */

ST_API st_status st_bfs_sgl(int depth, int branching, int goal_level,
                            double goal_prob, st_conditioning c,
                            st_estimate* out);
ST_API st_status st_dfs_sgl(int depth, int branching, int goal_level,
                            double goal_prob, st_conditioning c,
                            st_estimate* out);
ST_API st_status st_sgl_decision(int depth, int branching, int goal_level,
                                 double goal_prob, st_verdict* out);
ST_API st_status st_boundary_shift(int depth, int branching, int goal_level,
                                   double goal_prob, double* out);
ST_API st_status st_bfs_mgl(int depth, int branching, const st_goal_probs* p,
                            st_conditioning c, st_estimate* out);
ST_API st_status st_dfs_mgl(int depth, int branching, const st_goal_probs* p,
                            st_estimate* out);
ST_API st_status st_mgl_decision(int depth, int branching,
                                 const st_goal_probs* p, st_verdict* out);

/* ---- descendant counters and colliding branches ---- */

typedef struct st_counter st_counter;

ST_API st_status st_counter_binary_grammar(int depth, st_counter** out);
ST_API st_status st_counter_full_grammar(int depth, st_counter** out);
/* Row-major (depth+1) x (depth+1) entries L(n, d). */
ST_API st_status st_counter_create(int depth, const uint64_t* entries,
                                   st_counter** out);
ST_API void st_counter_destroy(st_counter* c);
ST_API int st_counter_depth(const st_counter* c);
ST_API uint64_t st_counter_get(const st_counter* c, int n, int d);
ST_API int st_counter_equal(const st_counter* a, const st_counter* b);

ST_API st_status st_lbg(int n, int d, uint64_t* out);
ST_API st_status st_lfg(int n, int d, uint64_t* out);
ST_API st_status st_abg(int n, int d, uint64_t* out);

/* |S_n| for n in [-1, D+1] (depth + 3 values). */
ST_API st_status st_subgraph_sizes(const st_counter* c, uint64_t* out,
                                   size_t out_count);
/* phi_n for n in [-1, D] (depth + 2 values). */
ST_API st_status st_explorable_goal_probs(const st_counter* c,
                                          const st_goal_probs* p, double* out,
                                          size_t out_count);
ST_API st_status st_dfs_cb(const st_counter* c, const st_goal_probs* p,
                           st_conditioning cond, st_estimate* out);
ST_API st_status st_bfs_cb(const st_counter* c, const st_goal_probs* p,
                           st_conditioning cond, st_estimate* out);
ST_API st_status st_bfs_cb_sgl(const st_counter* c, int goal_level,
                               double goal_prob, st_conditioning cond,
                               st_estimate* out);

/* ---- search graphs ---- */

typedef struct st_graph st_graph;

ST_API st_status st_graph_complete_tree(int branching, int depth,
                                        st_graph** out);
ST_API st_status st_graph_binary_grammar(int depth, st_graph** out);
ST_API st_status st_graph_full_grammar(int depth, st_graph** out);
/* Bit i of `rule_mask` enables rule i in the order
 * S->e, S->Sa, S->Sb, S->aS, S->bS, Sa->aS, Sb->bS, aS->Sa, bS->Sb.
 * S->e is always enabled. */
ST_API st_status st_graph_random_grammar(uint32_t rule_mask, int depth,
                                         st_graph** out);
/* Comma-separated rule names into a mask; S->e is always set. */
ST_API st_status st_parse_rules(const char* text, uint32_t* mask);
ST_API void st_graph_destroy(st_graph* g);
ST_API size_t st_graph_node_count(const st_graph* g);
ST_API size_t st_graph_edge_count(const st_graph* g);
ST_API int st_graph_depth(const st_graph* g);
ST_API st_status st_graph_level_sizes(const st_graph* g, uint64_t* out,
                                      size_t out_count);
/* Line-oriented node and edge listing. */
ST_API st_status st_graph_export(const st_graph* g, char** out);

typedef struct st_features {
  double mean_branching;
  double std_branching;
  int num_rules;
  int max_depth;
} st_features;

ST_API st_status st_graph_features(const st_graph* g, uint32_t rule_mask,
                                   st_features* out);
ST_API st_status st_descendant_counter(const st_graph* g, st_counter** out);

/* ---- simulation ---- */

/* Goal-check order as node ids; `out` holds node_count entries. */
ST_API st_status st_search_order(const st_graph* g, st_method m,
                                 uint32_t* out, size_t out_count);
/* One flag per node. */
ST_API st_status st_sample_goal_mask(const st_graph* g, const st_goal_probs* p,
                                     uint64_t seed, uint8_t* out,
                                     size_t out_count);
ST_API st_status st_run_search(const st_graph* g, st_method m,
                               const uint8_t* mask, size_t mask_count,
                               uint64_t* out);
ST_API st_status st_exact_expected_runtime(const st_graph* g, st_method m,
                                           const st_goal_probs* p,
                                           double* out);

typedef struct st_trial_stats {
  uint64_t trials_total;
  uint64_t trials_kept;
  uint64_t discarded_no_goal;
  double mean;
  double std_error;
} st_trial_stats;

/* threads == 0 uses every hardware thread. */
ST_API st_status st_monte_carlo(const st_graph* g, const st_goal_probs* p,
                                st_method m, uint64_t trials, uint64_t seed,
                                int condition_on_goal, int threads,
                                st_trial_stats* out);

/* ---- experiment drivers ---- */

typedef enum st_model {
  ST_MODEL_TREE = 0,
  ST_MODEL_BINARY_GRAMMAR = 1,
  ST_MODEL_FULL_GRAMMAR = 2
} st_model;

typedef struct st_problem {
  st_model model;
  int depth;
  int branching;
  int gaussian; /* 0: single goal level, otherwise Gaussian profile */
  int goal_level;
  double goal_prob;
  int mu;
  double sigma2;
} st_problem;

typedef struct st_estimate_report {
  st_estimate bfs;
  st_estimate dfs;
  double bfs_goal_terms;
  st_verdict verdict;
  const char* bfs_formula; /* static strings */
  const char* dfs_formula;
} st_estimate_report;

ST_API st_status st_estimate_problem(const st_problem* problem,
                                     st_conditioning c,
                                     st_estimate_report* out);

typedef struct st_simulate_report {
  st_trial_stats stats;
  st_estimate estimate;
  int has_oracle;
  double oracle;
} st_simulate_report;

ST_API st_status st_simulate_problem(const st_problem* problem, st_method m,
                                     uint64_t trials, uint64_t seed,
                                     int condition_on_goal, int threads,
                                     st_simulate_report* out);

typedef enum st_table_kind {
  ST_TABLE_SGL = 0,
  ST_TABLE_MGL = 1,
  ST_TABLE_BG = 2
} st_table_kind;

typedef struct st_table_cell {
  st_method method;
  double row;
  double column;
  int blank;
  st_estimate analytical;
  double empirical; /* NaN when not simulated */
  double std_error;
  double error_pct;
  uint64_t discarded_no_goal;
} st_table_cell;

typedef struct st_table st_table;

/* trials == 0 skips the Monte Carlo side. */
ST_API st_status st_table_run(st_table_kind kind, uint64_t trials,
                              uint64_t seed, int threads, st_table** out);
ST_API void st_table_destroy(st_table* t);
ST_API int st_table_depth(const st_table* t);
ST_API size_t st_table_cell_count(const st_table* t);
ST_API st_status st_table_get_cell(const st_table* t, size_t i,
                                   st_table_cell* out);

typedef enum st_boundary_kind {
  ST_BOUNDARY_SGL = 0,
  ST_BOUNDARY_BG = 1,
  ST_BOUNDARY_GAUSSIAN = 2
} st_boundary_kind;

typedef struct st_boundary_point {
  double x;
  double y;
  st_verdict verdict;
} st_boundary_point;

typedef struct st_boundary_sample {
  double x;
  double y;
  uint64_t bfs_time;
  uint64_t dfs_time;
  st_method winner;
  st_method predicted;
  uint64_t redraws;
} st_boundary_sample;

typedef struct st_boundary st_boundary;

ST_API st_status st_boundary_run(st_boundary_kind kind, uint64_t samples,
                                 uint64_t seed, st_boundary** out);
ST_API void st_boundary_destroy(st_boundary* b);
ST_API const char* st_boundary_x_name(const st_boundary* b);
ST_API const char* st_boundary_y_name(const st_boundary* b);
ST_API double st_boundary_accuracy(const st_boundary* b);
ST_API size_t st_boundary_grid_count(const st_boundary* b);
ST_API st_status st_boundary_grid_point(const st_boundary* b, size_t i,
                                        st_boundary_point* out);
ST_API size_t st_boundary_sample_count(const st_boundary* b);
ST_API st_status st_boundary_sample_at(const st_boundary* b, size_t i,
                                       st_boundary_sample* out);

typedef struct st_dataset_row {
  st_features features;
  uint32_t rule_mask;
  uint64_t goals;
  uint64_t bfs_time;
  uint64_t dfs_time;
  st_method winner;
} st_dataset_row;

typedef struct st_dataset st_dataset;

ST_API st_status st_dataset_run(uint64_t count, uint64_t seed, int threads,
                                st_dataset** out);
ST_API void st_dataset_destroy(st_dataset* d);
ST_API size_t st_dataset_row_count(const st_dataset* d);
ST_API st_status st_dataset_get_row(const st_dataset* d, size_t i,
                                    st_dataset_row* out);
ST_API uint64_t st_dataset_skipped(const st_dataset* d);
ST_API size_t st_dataset_warning_count(const st_dataset* d);
ST_API const char* st_dataset_warning(const st_dataset* d, size_t i);
ST_API double st_dataset_dfs_win_fraction(const st_dataset* d);

/* Rule mask rendered as comma-separated names. */
ST_API st_status st_rules_to_string(uint32_t rule_mask, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SEARCHTIME_SEARCHTIME_H_ */
