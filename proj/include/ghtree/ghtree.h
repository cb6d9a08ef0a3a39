/* C API for the ghtree library: Gomory-Hu (cut) trees for undirected
 * weighted graphs and unweighted hypergraphs.
 *
 * Conventions:
 *   - Every function returns a ghtree_status; GHTREE_OK is 0.
 *   - On failure, ghtree_last_error() returns a thread-local message.
 *   - Objects are opaque handles released with their matching _free call.
 *   - Output arrays are allocated by the library and released with
 *     ghtree_buffer_free (ids) or ghtree_string_free (strings).
 */
#ifndef GHTREE_H
#define GHTREE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghtree_status {
    GHTREE_OK = 0,
    GHTREE_ERR_INVALID_INPUT = 1,
    GHTREE_ERR_IO = 2,
    GHTREE_ERR_RANDOMIZED_FAILURE = 3,
    GHTREE_ERR_ORACLE_REFUSED = 4,
    GHTREE_ERR_INTERNAL = 5
} ghtree_status;

typedef struct ghtree_graph ghtree_graph;
typedef struct ghtree_hypergraph ghtree_hypergraph;
typedef struct ghtree_tree ghtree_tree;
typedef struct ghtree_ptree ghtree_ptree;
typedef struct ghtree_cuts ghtree_cuts;

const char* ghtree_version(void);
/* Message of the last failing call on this thread; valid until the next call. */
const char* ghtree_last_error(void);
void ghtree_buffer_free(void* buffer);
void ghtree_string_free(char* string);

/* ---- graphs ---- */
ghtree_status ghtree_graph_create(uint32_t vertex_count, const uint32_t* us, const uint32_t* vs,
                                  const int64_t* ws, size_t edge_count, ghtree_graph** out);
ghtree_status ghtree_graph_read(const char* path, ghtree_graph** out);
ghtree_status ghtree_graph_write(const ghtree_graph* g, const char* path);
void ghtree_graph_free(ghtree_graph* g);
uint32_t ghtree_graph_vertex_count(const ghtree_graph* g);
size_t ghtree_graph_edge_count(const ghtree_graph* g);
ghtree_status ghtree_graph_cut_value(const ghtree_graph* g, const uint32_t* side, size_t side_len,
                                     int64_t* out_value);

/* ---- hypergraphs ---- */
/* members: concatenated member lists; offsets: edge_count+1 prefix offsets. */
ghtree_status ghtree_hypergraph_create(uint32_t vertex_count, const int64_t* weights,
                                       const uint32_t* members, const size_t* offsets,
                                       size_t edge_count, ghtree_hypergraph** out);
ghtree_status ghtree_hypergraph_read(const char* path, ghtree_hypergraph** out);
ghtree_status ghtree_hypergraph_write(const ghtree_hypergraph* h, const char* path);
void ghtree_hypergraph_free(ghtree_hypergraph* h);
uint32_t ghtree_hypergraph_vertex_count(const ghtree_hypergraph* h);
size_t ghtree_hypergraph_edge_count(const ghtree_hypergraph* h);
uint64_t ghtree_hypergraph_total_size(const ghtree_hypergraph* h);
ghtree_status ghtree_hypergraph_cut_value(const ghtree_hypergraph* h, const uint32_t* side,
                                          size_t side_len, int64_t* out_value);

/* ---- maxflow ---- */
/* out_side is the inclusion-minimal mincut side containing s, sorted. */
ghtree_status ghtree_maxflow(const ghtree_graph* g, uint32_t s, uint32_t t, int64_t* out_value,
                             uint32_t** out_side, size_t* out_side_len);
ghtree_status ghtree_hypergraph_maxflow(const ghtree_hypergraph* h, uint32_t s, uint32_t t,
                                        int64_t* out_value, uint32_t** out_side, size_t* out_side_len);

/* ---- isolating cuts ---- */
/* group_ids: concatenated groups; group_offsets: group_count+1 prefix offsets. */
ghtree_status ghtree_isolating_cuts(const ghtree_graph* g, const uint32_t* group_ids,
                                    const size_t* group_offsets, size_t group_count, ghtree_cuts** out);
ghtree_status ghtree_hypergraph_isolating_cuts(const ghtree_hypergraph* h, const uint32_t* group_ids,
                                               const size_t* group_offsets, size_t group_count,
                                               ghtree_cuts** out);
size_t ghtree_cuts_count(const ghtree_cuts* cuts);
ghtree_status ghtree_cuts_get(const ghtree_cuts* cuts, size_t index, size_t* out_group,
                              int64_t* out_value, uint32_t** out_side, size_t* out_side_len);
void ghtree_cuts_free(ghtree_cuts* cuts);

/* ---- threshold search ---- */
ghtree_status ghtree_find_threshold(const ghtree_graph* g, const uint32_t* terminals,
                                    size_t terminal_count, uint64_t seed, int64_t* out_tau,
                                    uint32_t** out_component, size_t* out_component_len);
ghtree_status ghtree_hypergraph_find_threshold(const ghtree_hypergraph* h, const uint32_t* terminals,
                                               size_t terminal_count, uint64_t seed, int64_t* out_tau,
                                               uint32_t** out_component, size_t* out_component_len);

/* ---- partial tree ---- */
ghtree_status ghtree_partial_tree(const ghtree_graph* g, const uint32_t* terminals,
                                  size_t terminal_count, int64_t tau, uint64_t seed,
                                  ghtree_ptree** out);
ghtree_status ghtree_hypergraph_partial_tree(const ghtree_hypergraph* h, const uint32_t* terminals,
                                             size_t terminal_count, int64_t tau, uint64_t seed,
                                             ghtree_ptree** out);
size_t ghtree_ptree_class_count(const ghtree_ptree* t);
ghtree_status ghtree_ptree_class(const ghtree_ptree* t, size_t index, uint32_t** out_ids,
                                 size_t* out_len);
size_t ghtree_ptree_edge_count(const ghtree_ptree* t);
ghtree_status ghtree_ptree_edge(const ghtree_ptree* t, size_t index, size_t* out_a, size_t* out_b,
                                int64_t* out_w);
ghtree_status ghtree_ptree_class_of(const ghtree_ptree* t, uint32_t vertex, size_t* out_class);
void ghtree_ptree_free(ghtree_ptree* t);

/* ---- tree construction ---- */
typedef struct ghtree_build_options {
    uint64_t seed;
    int use_classic;     /* nonzero: the |U|-1 maxflow contraction scheme */
    int verify;          /* nonzero: certify against the oracle, reseed on failure */
    uint32_t oracle_cap; /* vertex cap for the verification oracle */
} ghtree_build_options;
void ghtree_build_options_init(ghtree_build_options* opt);

/* terminals may be NULL (all vertices). */
ghtree_status ghtree_build(const ghtree_graph* g, const uint32_t* terminals, size_t terminal_count,
                           const ghtree_build_options* opt, ghtree_tree** out);
ghtree_status ghtree_build_hyper(const ghtree_hypergraph* h, const uint32_t* terminals,
                                 size_t terminal_count, const ghtree_build_options* opt,
                                 ghtree_tree** out);

/* ---- trees ---- */
uint32_t ghtree_tree_vertex_count(const ghtree_tree* t);
size_t ghtree_tree_terminal_count(const ghtree_tree* t);
ghtree_status ghtree_tree_terminals(const ghtree_tree* t, uint32_t** out_ids, size_t* out_len);
size_t ghtree_tree_edge_count(const ghtree_tree* t);
ghtree_status ghtree_tree_edge(const ghtree_tree* t, size_t index, uint32_t* out_u, uint32_t* out_v,
                               int64_t* out_w);
ghtree_status ghtree_tree_map(const ghtree_tree* t, uint32_t vertex, uint32_t* out_terminal);
ghtree_status ghtree_tree_query(const ghtree_tree* t, uint32_t s, uint32_t u, int64_t* out_value,
                                uint32_t** out_side, size_t* out_side_len);
/* comp_offsets has component_count+1 entries into comp_ids. */
ghtree_status ghtree_tree_kcomponents(const ghtree_tree* t, int64_t k, uint32_t** out_comp_ids,
                                      size_t** out_comp_offsets, size_t* out_component_count);
/* JSON object: depth, per_level_edges, per_level_vertices, maxflow_calls,
 * maxflow_edge_sum, seed, wall_ms, retries. Empty stats for loaded trees. */
ghtree_status ghtree_tree_stats_json(const ghtree_tree* t, char** out_json);
ghtree_status ghtree_tree_write(const ghtree_tree* t, const char* path);
ghtree_status ghtree_tree_read(const char* path, ghtree_tree** out);
void ghtree_tree_free(ghtree_tree* t);

/* ---- verification ---- */
/* out_certified: all checks ran clean; out_oracle_refused: the value oracle
 * was skipped because the instance exceeds oracle_cap. Report is JSON. */
ghtree_status ghtree_verify(const ghtree_graph* g, const ghtree_tree* t, uint32_t oracle_cap,
                            int* out_certified, int* out_oracle_refused, char** out_report_json);
ghtree_status ghtree_verify_hyper(const ghtree_hypergraph* h, const ghtree_tree* t, uint32_t oracle_cap,
                                  int* out_certified, int* out_oracle_refused, char** out_report_json);

/* ---- instance generation ---- */
typedef struct ghtree_gen_params {
    uint32_t n;
    uint64_t edges;
    double density;
    int64_t weight_min;
    int64_t weight_max;
    uint32_t arity_min;
    uint32_t arity_max;
    uint32_t rows;
    uint32_t cols;
    uint64_t extra_edges;
    int ensure_connected;
} ghtree_gen_params;
void ghtree_gen_params_init(ghtree_gen_params* params);

/* kinds: gnp, two-cliques-bridge, grid, tree-plus-edges, hyper-random.
 * Writes the instance to out_path; out_is_hyper may be NULL. */
ghtree_status ghtree_generate(const char* kind, const ghtree_gen_params* params, uint64_t seed,
                              const char* out_path, int* out_is_hyper);

#ifdef __cplusplus
}
#endif

#endif /* GHTREE_H */
