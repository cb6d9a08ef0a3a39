#include "ghtree/ghtree.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "ghtree/build.hpp"
#include "ghtree/decomposition.hpp"
#include "ghtree/gen.hpp"
#include "ghtree/gomory_hu.hpp"
#include "ghtree/graph.hpp"
#include "ghtree/hypergraph.hpp"
#include "ghtree/isolating_cuts.hpp"
#include "ghtree/maxflow.hpp"
#include "ghtree/oracle.hpp"
#include "ghtree/partial_tree.hpp"

using nlohmann::json;

struct ghtree_graph {
    ghtree::weighted_graph g;
};
struct ghtree_hypergraph {
    ghtree::hypergraph h;
};
struct ghtree_tree {
    ghtree::gomory_hu_tree tree;
    ghtree::run_stats stats;
    bool has_stats = false;
};
struct ghtree_ptree {
    ghtree::partial_tree tree;
};
struct ghtree_cuts {
    std::vector<ghtree::isolating_cut> cuts;
};

namespace {

thread_local std::string g_last_error;

ghtree_status fail(ghtree_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <class Fn>
ghtree_status guarded(Fn&& fn) {
    try {
        fn();
        return GHTREE_OK;
    } catch (const ghtree::invalid_input_error& e) {
        return fail(GHTREE_ERR_INVALID_INPUT, e.what());
    } catch (const ghtree::io_error& e) {
        return fail(GHTREE_ERR_IO, e.what());
    } catch (const ghtree::randomized_failure& e) {
        return fail(GHTREE_ERR_RANDOMIZED_FAILURE, e.what());
    } catch (const ghtree::oracle_refused_error& e) {
        return fail(GHTREE_ERR_ORACLE_REFUSED, e.what());
    } catch (const std::exception& e) {
        return fail(GHTREE_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(GHTREE_ERR_INTERNAL, "unknown failure");
    }
}

uint32_t* copy_ids(const std::vector<ghtree::vertex_id>& ids, size_t* out_len) {
    auto* buf = static_cast<uint32_t*>(::operator new[](sizeof(uint32_t) * std::max<size_t>(ids.size(), 1)));
    std::memcpy(buf, ids.data(), sizeof(uint32_t) * ids.size());
    if (out_len) *out_len = ids.size();
    return buf;
}

char* copy_string(const std::string& s) {
    char* buf = static_cast<char*>(::operator new[](s.size() + 1));
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

std::vector<ghtree::vertex_id> terminal_vector(const uint32_t* terminals, size_t count) {
    if (!terminals || count == 0) return {};
    return {terminals, terminals + count};
}

json report_to_json(const ghtree::verification_report& report) {
    json j;
    j["certified"] = report.certified();
    j["oracle_refused"] = report.oracle_refused;
    j["pairs_checked"] = report.pairs_checked;
    j["value_mismatches"] = json::array();
    for (const auto& m : report.value_mismatches)
        j["value_mismatches"].push_back(
            {{"s", m.s}, {"t", m.t}, {"tree", m.tree_value}, {"oracle", m.oracle_value}});
    j["edge_mismatches"] = json::array();
    for (const auto& m : report.edge_mismatches)
        j["edge_mismatches"].push_back(
            {{"edge", m.edge_index}, {"u", m.u}, {"v", m.v}, {"weight", m.weight}, {"cut", m.cut}});
    j["map_violations"] = report.map_violations;
    return j;
}

std::vector<std::vector<ghtree::vertex_id>> groups_from_arrays(const uint32_t* ids,
                                                               const size_t* offsets, size_t count) {
    std::vector<std::vector<ghtree::vertex_id>> groups(count);
    for (size_t i = 0; i < count; ++i) groups[i].assign(ids + offsets[i], ids + offsets[i + 1]);
    return groups;
}

template <class G>
void verify_impl(const G& instance, const ghtree_tree* t, uint32_t oracle_cap, int* out_certified,
                 int* out_oracle_refused, char** out_report_json) {
    ghtree::engine_config cfg;
    if (oracle_cap > 0) cfg.oracle_maxflow_cap = oracle_cap;
    const auto report = ghtree::verify_ghtree(instance, t->tree.terminals, t->tree, cfg);
    if (out_certified) *out_certified = report.certified() ? 1 : 0;
    if (out_oracle_refused) *out_oracle_refused = report.oracle_refused ? 1 : 0;
    if (out_report_json) *out_report_json = copy_string(report_to_json(report).dump());
}

template <class G>
void build_with_options(const G& instance, const uint32_t* terminals, size_t terminal_count,
                        const ghtree_build_options* opt, ghtree_tree** out) {
    ghtree_build_options defaults;
    ghtree_build_options_init(&defaults);
    const ghtree_build_options& o = opt ? *opt : defaults;
    ghtree::build_options bo;
    bo.seed = o.seed;
    bo.use_classic = o.use_classic != 0;
    if (o.oracle_cap > 0) bo.config.oracle_maxflow_cap = o.oracle_cap;

    auto terms = terminal_vector(terminals, terminal_count);
    ghtree::build_result result = ghtree::build_gomory_hu_tree(instance, terms, bo);
    if (o.verify) {
        // certify end to end; reseed and retry on a bad draw
        int reseeds = 0;
        for (;;) {
            const auto report =
                ghtree::verify_ghtree(instance, result.tree.terminals, result.tree, bo.config);
            if (report.clean()) break;
            if (reseeds >= 3)
                throw ghtree::randomized_failure("verification kept failing after retries", o.seed);
            ++reseeds;
            bo.seed = ghtree::rng_handle(bo.seed).split().seed();
            result = ghtree::build_gomory_hu_tree(instance, terms, bo);
        }
        result.stats.retries += reseeds;
    }
    auto* handle = new ghtree_tree{std::move(result.tree), std::move(result.stats), true};
    *out = handle;
}

}  // namespace

extern "C" {

const char* ghtree_version(void) { return "1.0.0"; }

const char* ghtree_last_error(void) { return g_last_error.c_str(); }

void ghtree_buffer_free(void* buffer) { ::operator delete[](buffer); }
void ghtree_string_free(char* string) { ::operator delete[](string); }

ghtree_status ghtree_graph_create(uint32_t vertex_count, const uint32_t* us, const uint32_t* vs,
                                  const int64_t* ws, size_t edge_count, ghtree_graph** out) {
    if (!out || (edge_count > 0 && (!us || !vs || !ws)))
        return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        std::vector<ghtree::edge> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) edges.push_back({us[i], vs[i], ws[i]});
        *out = new ghtree_graph{ghtree::weighted_graph(vertex_count, std::move(edges))};
    });
}

ghtree_status ghtree_graph_read(const char* path, ghtree_graph** out) {
    if (!out || !path) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { *out = new ghtree_graph{ghtree::read_graph_file(path)}; });
}

ghtree_status ghtree_graph_write(const ghtree_graph* g, const char* path) {
    if (!g || !path) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { ghtree::write_graph_file(path, g->g); });
}

void ghtree_graph_free(ghtree_graph* g) { delete g; }

uint32_t ghtree_graph_vertex_count(const ghtree_graph* g) {
    return g ? static_cast<uint32_t>(g->g.vertex_count()) : 0;
}

size_t ghtree_graph_edge_count(const ghtree_graph* g) { return g ? g->g.edge_count() : 0; }

ghtree_status ghtree_graph_cut_value(const ghtree_graph* g, const uint32_t* side, size_t side_len,
                                     int64_t* out_value) {
    if (!g || !side || !out_value) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { *out_value = g->g.cut_value(std::span(side, side_len)); });
}

ghtree_status ghtree_hypergraph_create(uint32_t vertex_count, const int64_t* weights,
                                       const uint32_t* members, const size_t* offsets,
                                       size_t edge_count, ghtree_hypergraph** out) {
    if (!out || (edge_count > 0 && (!weights || !members || !offsets)))
        return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        std::vector<ghtree::hyperedge> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) {
            ghtree::hyperedge e;
            e.w = weights[i];
            e.members.assign(members + offsets[i], members + offsets[i + 1]);
            edges.push_back(std::move(e));
        }
        *out = new ghtree_hypergraph{ghtree::hypergraph(vertex_count, std::move(edges))};
    });
}

ghtree_status ghtree_hypergraph_read(const char* path, ghtree_hypergraph** out) {
    if (!out || !path) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { *out = new ghtree_hypergraph{ghtree::read_hypergraph_file(path)}; });
}

ghtree_status ghtree_hypergraph_write(const ghtree_hypergraph* h, const char* path) {
    if (!h || !path) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { ghtree::write_hypergraph_file(path, h->h); });
}

void ghtree_hypergraph_free(ghtree_hypergraph* h) { delete h; }

uint32_t ghtree_hypergraph_vertex_count(const ghtree_hypergraph* h) {
    return h ? static_cast<uint32_t>(h->h.vertex_count()) : 0;
}

size_t ghtree_hypergraph_edge_count(const ghtree_hypergraph* h) {
    return h ? h->h.edge_count() : 0;
}

uint64_t ghtree_hypergraph_total_size(const ghtree_hypergraph* h) {
    return h ? h->h.size_measure() : 0;
}

ghtree_status ghtree_hypergraph_cut_value(const ghtree_hypergraph* h, const uint32_t* side,
                                          size_t side_len, int64_t* out_value) {
    if (!h || !side || !out_value) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { *out_value = h->h.cut_value(std::span(side, side_len)); });
}

ghtree_status ghtree_maxflow(const ghtree_graph* g, uint32_t s, uint32_t t, int64_t* out_value,
                             uint32_t** out_side, size_t* out_side_len) {
    if (!g || !out_value) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto r = ghtree::maxflow(g->g, s, t);
        *out_value = r.value;
        if (out_side) *out_side = copy_ids(r.min_source_side, out_side_len);
    });
}

ghtree_status ghtree_hypergraph_maxflow(const ghtree_hypergraph* h, uint32_t s, uint32_t t,
                                        int64_t* out_value, uint32_t** out_side, size_t* out_side_len) {
    if (!h || !out_value) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto r = ghtree::maxflow(h->h, s, t);
        *out_value = r.value;
        if (out_side) *out_side = copy_ids(r.min_source_side, out_side_len);
    });
}

ghtree_status ghtree_isolating_cuts(const ghtree_graph* g, const uint32_t* group_ids,
                                    const size_t* group_offsets, size_t group_count,
                                    ghtree_cuts** out) {
    if (!g || !group_ids || !group_offsets || !out)
        return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto groups = groups_from_arrays(group_ids, group_offsets, group_count);
        *out = new ghtree_cuts{ghtree::compute_isolating_cuts(g->g, groups)};
    });
}

ghtree_status ghtree_hypergraph_isolating_cuts(const ghtree_hypergraph* h, const uint32_t* group_ids,
                                               const size_t* group_offsets, size_t group_count,
                                               ghtree_cuts** out) {
    if (!h || !group_ids || !group_offsets || !out)
        return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto groups = groups_from_arrays(group_ids, group_offsets, group_count);
        *out = new ghtree_cuts{ghtree::compute_isolating_cuts(h->h, groups)};
    });
}

size_t ghtree_cuts_count(const ghtree_cuts* cuts) { return cuts ? cuts->cuts.size() : 0; }

ghtree_status ghtree_cuts_get(const ghtree_cuts* cuts, size_t index, size_t* out_group,
                              int64_t* out_value, uint32_t** out_side, size_t* out_side_len) {
    if (!cuts || index >= cuts->cuts.size()) return fail(GHTREE_ERR_INVALID_INPUT, "bad cut index");
    if (out_group) *out_group = cuts->cuts[index].group;
    if (out_value) *out_value = cuts->cuts[index].value;
    if (out_side) *out_side = copy_ids(cuts->cuts[index].side, out_side_len);
    return GHTREE_OK;
}

void ghtree_cuts_free(ghtree_cuts* cuts) { delete cuts; }

ghtree_status ghtree_find_threshold(const ghtree_graph* g, const uint32_t* terminals,
                                    size_t terminal_count, uint64_t seed, int64_t* out_tau,
                                    uint32_t** out_component, size_t* out_component_len) {
    if (!g || !terminals || !out_tau) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        auto terms = ghtree::normalize_terminals(terminal_vector(terminals, terminal_count),
                                                 g->g.vertex_count());
        ghtree::rng_handle rng(seed);
        const auto r = ghtree::find_threshold(g->g, terms, rng);
        *out_tau = r.tau;
        if (out_component) *out_component = copy_ids(r.component_terminals, out_component_len);
    });
}

ghtree_status ghtree_hypergraph_find_threshold(const ghtree_hypergraph* h, const uint32_t* terminals,
                                               size_t terminal_count, uint64_t seed, int64_t* out_tau,
                                               uint32_t** out_component, size_t* out_component_len) {
    if (!h || !terminals || !out_tau) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        auto terms = ghtree::normalize_terminals(terminal_vector(terminals, terminal_count),
                                                 h->h.vertex_count());
        ghtree::rng_handle rng(seed);
        const auto r = ghtree::find_threshold(h->h, terms, rng);
        *out_tau = r.tau;
        if (out_component) *out_component = copy_ids(r.component_terminals, out_component_len);
    });
}

ghtree_status ghtree_partial_tree(const ghtree_graph* g, const uint32_t* terminals,
                                  size_t terminal_count, int64_t tau, uint64_t seed,
                                  ghtree_ptree** out) {
    if (!g || !terminals || !out) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto terms = terminal_vector(terminals, terminal_count);
        *out = new ghtree_ptree{ghtree::partial_ghtree(g->g, terms, tau, ghtree::rng_handle(seed))};
    });
}

ghtree_status ghtree_hypergraph_partial_tree(const ghtree_hypergraph* h, const uint32_t* terminals,
                                             size_t terminal_count, int64_t tau, uint64_t seed,
                                             ghtree_ptree** out) {
    if (!h || !terminals || !out) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto terms = terminal_vector(terminals, terminal_count);
        *out = new ghtree_ptree{ghtree::partial_ghtree(h->h, terms, tau, ghtree::rng_handle(seed))};
    });
}

size_t ghtree_ptree_class_count(const ghtree_ptree* t) { return t ? t->tree.classes.size() : 0; }

ghtree_status ghtree_ptree_class(const ghtree_ptree* t, size_t index, uint32_t** out_ids,
                                 size_t* out_len) {
    if (!t || index >= t->tree.classes.size() || !out_ids)
        return fail(GHTREE_ERR_INVALID_INPUT, "bad class index");
    *out_ids = copy_ids(t->tree.classes[index], out_len);
    return GHTREE_OK;
}

size_t ghtree_ptree_edge_count(const ghtree_ptree* t) { return t ? t->tree.edges.size() : 0; }

ghtree_status ghtree_ptree_edge(const ghtree_ptree* t, size_t index, size_t* out_a, size_t* out_b,
                                int64_t* out_w) {
    if (!t || index >= t->tree.edges.size()) return fail(GHTREE_ERR_INVALID_INPUT, "bad edge index");
    if (out_a) *out_a = t->tree.edges[index].a;
    if (out_b) *out_b = t->tree.edges[index].b;
    if (out_w) *out_w = t->tree.edges[index].w;
    return GHTREE_OK;
}

ghtree_status ghtree_ptree_class_of(const ghtree_ptree* t, uint32_t vertex, size_t* out_class) {
    if (!t || !out_class || vertex >= t->tree.preimage.size())
        return fail(GHTREE_ERR_INVALID_INPUT, "bad vertex");
    *out_class = t->tree.preimage[vertex];
    return GHTREE_OK;
}

void ghtree_ptree_free(ghtree_ptree* t) { delete t; }

void ghtree_build_options_init(ghtree_build_options* opt) {
    if (!opt) return;
    opt->seed = 1;
    opt->use_classic = 0;
    opt->verify = 0;
    opt->oracle_cap = 0;
}

ghtree_status ghtree_build(const ghtree_graph* g, const uint32_t* terminals, size_t terminal_count,
                           const ghtree_build_options* opt, ghtree_tree** out) {
    if (!g || !out) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { build_with_options(g->g, terminals, terminal_count, opt, out); });
}

ghtree_status ghtree_build_hyper(const ghtree_hypergraph* h, const uint32_t* terminals,
                                 size_t terminal_count, const ghtree_build_options* opt,
                                 ghtree_tree** out) {
    if (!h || !out) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { build_with_options(h->h, terminals, terminal_count, opt, out); });
}

uint32_t ghtree_tree_vertex_count(const ghtree_tree* t) {
    return t ? static_cast<uint32_t>(t->tree.vertex_count) : 0;
}

size_t ghtree_tree_terminal_count(const ghtree_tree* t) { return t ? t->tree.terminals.size() : 0; }

ghtree_status ghtree_tree_terminals(const ghtree_tree* t, uint32_t** out_ids, size_t* out_len) {
    if (!t || !out_ids) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    *out_ids = copy_ids(t->tree.terminals, out_len);
    return GHTREE_OK;
}

size_t ghtree_tree_edge_count(const ghtree_tree* t) { return t ? t->tree.edges.size() : 0; }

ghtree_status ghtree_tree_edge(const ghtree_tree* t, size_t index, uint32_t* out_u, uint32_t* out_v,
                               int64_t* out_w) {
    if (!t || index >= t->tree.edges.size()) return fail(GHTREE_ERR_INVALID_INPUT, "bad edge index");
    if (out_u) *out_u = t->tree.edges[index].u;
    if (out_v) *out_v = t->tree.edges[index].v;
    if (out_w) *out_w = t->tree.edges[index].w;
    return GHTREE_OK;
}

ghtree_status ghtree_tree_map(const ghtree_tree* t, uint32_t vertex, uint32_t* out_terminal) {
    if (!t || !out_terminal || vertex >= t->tree.f.size())
        return fail(GHTREE_ERR_INVALID_INPUT, "bad vertex");
    *out_terminal = t->tree.f[vertex];
    return GHTREE_OK;
}

ghtree_status ghtree_tree_query(const ghtree_tree* t, uint32_t s, uint32_t u, int64_t* out_value,
                                uint32_t** out_side, size_t* out_side_len) {
    if (!t || !out_value) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto r = ghtree::tree_query(t->tree, s, u);
        *out_value = r.value;
        if (out_side) *out_side = copy_ids(r.cut_side, out_side_len);
    });
}

ghtree_status ghtree_tree_kcomponents(const ghtree_tree* t, int64_t k, uint32_t** out_comp_ids,
                                      size_t** out_comp_offsets, size_t* out_component_count) {
    if (!t || !out_comp_ids || !out_comp_offsets || !out_component_count)
        return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        const auto comps = ghtree::k_components(t->tree, k);
        std::vector<ghtree::vertex_id> flat;
        auto* offsets = static_cast<size_t*>(::operator new[](sizeof(size_t) * (comps.size() + 1)));
        offsets[0] = 0;
        for (size_t i = 0; i < comps.size(); ++i) {
            flat.insert(flat.end(), comps[i].begin(), comps[i].end());
            offsets[i + 1] = flat.size();
        }
        *out_comp_ids = copy_ids(flat, nullptr);
        *out_comp_offsets = offsets;
        *out_component_count = comps.size();
    });
}

ghtree_status ghtree_tree_stats_json(const ghtree_tree* t, char** out_json) {
    if (!t || !out_json) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        json j;
        j["depth"] = t->stats.depth;
        j["per_level_edges"] = t->stats.level_edges;
        j["per_level_vertices"] = t->stats.level_vertices;
        j["maxflow_calls"] = t->stats.maxflow_calls;
        j["maxflow_edge_sum"] = t->stats.maxflow_instance_sum;
        j["seed"] = t->stats.seed;
        j["wall_ms"] = t->stats.wall_ms;
        j["retries"] = t->stats.retries;
        j["has_stats"] = t->has_stats;
        *out_json = copy_string(j.dump());
    });
}

ghtree_status ghtree_tree_write(const ghtree_tree* t, const char* path) {
    if (!t || !path) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { ghtree::write_tree_file(path, t->tree); });
}

ghtree_status ghtree_tree_read(const char* path, ghtree_tree** out) {
    if (!path || !out) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { *out = new ghtree_tree{ghtree::read_tree_file(path), {}, false}; });
}

void ghtree_tree_free(ghtree_tree* t) { delete t; }

ghtree_status ghtree_verify(const ghtree_graph* g, const ghtree_tree* t, uint32_t oracle_cap,
                            int* out_certified, int* out_oracle_refused, char** out_report_json) {
    if (!g || !t) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { verify_impl(g->g, t, oracle_cap, out_certified, out_oracle_refused, out_report_json); });
}

ghtree_status ghtree_verify_hyper(const ghtree_hypergraph* h, const ghtree_tree* t,
                                  uint32_t oracle_cap, int* out_certified, int* out_oracle_refused,
                                  char** out_report_json) {
    if (!h || !t) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] { verify_impl(h->h, t, oracle_cap, out_certified, out_oracle_refused, out_report_json); });
}

void ghtree_gen_params_init(ghtree_gen_params* params) {
    if (!params) return;
    params->n = 0;
    params->edges = 0;
    params->density = 0.0;
    params->weight_min = 1;
    params->weight_max = 1;
    params->arity_min = 2;
    params->arity_max = 3;
    params->rows = 0;
    params->cols = 0;
    params->extra_edges = 0;
    params->ensure_connected = 0;
}

ghtree_status ghtree_generate(const char* kind, const ghtree_gen_params* params, uint64_t seed,
                              const char* out_path, int* out_is_hyper) {
    if (!kind || !params || !out_path) return fail(GHTREE_ERR_INVALID_INPUT, "null argument");
    return guarded([&] {
        ghtree::gen_params p;
        p.n = params->n;
        p.edges = params->edges;
        p.density = params->density;
        p.weight_min = params->weight_min;
        p.weight_max = params->weight_max;
        p.arity_min = params->arity_min;
        p.arity_max = params->arity_max;
        p.rows = params->rows;
        p.cols = params->cols;
        p.extra_edges = params->extra_edges;
        p.ensure_connected = params->ensure_connected != 0;
        const auto instance = ghtree::generate_instance(kind, p, seed);
        if (const auto* g = std::get_if<ghtree::weighted_graph>(&instance)) {
            ghtree::write_graph_file(out_path, *g);
            if (out_is_hyper) *out_is_hyper = 0;
        } else {
            ghtree::write_hypergraph_file(out_path, std::get<ghtree::hypergraph>(instance));
            if (out_is_hyper) *out_is_hyper = 1;
        }
    });
}

}  // extern "C"
