// Exercises the shared-library C surface end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ghtree/ghtree.h"

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

ghtree_graph* bridge_graph() {
    const uint32_t us[] = {0, 0, 1, 3, 3, 4, 2};
    const uint32_t vs[] = {1, 2, 2, 4, 5, 5, 3};
    const int64_t ws[] = {1, 1, 1, 1, 1, 1, 1};
    ghtree_graph* g = nullptr;
    REQUIRE(ghtree_graph_create(6, us, vs, ws, 7, &g) == GHTREE_OK);
    return g;
}

}  // namespace

TEST_CASE("graph lifecycle and cut values") {
    ghtree_graph* g = bridge_graph();
    CHECK(ghtree_graph_vertex_count(g) == 6);
    CHECK(ghtree_graph_edge_count(g) == 7);
    const uint32_t side[] = {0, 1, 2};
    int64_t value = 0;
    CHECK(ghtree_graph_cut_value(g, side, 3, &value) == GHTREE_OK);
    CHECK(value == 1);
    ghtree_graph_free(g);
}

TEST_CASE("errors set a message and a matching status") {
    ghtree_graph* g = bridge_graph();
    int64_t value = 0;
    CHECK(ghtree_maxflow(g, 2, 2, &value, nullptr, nullptr) == GHTREE_ERR_INVALID_INPUT);
    CHECK(std::string(ghtree_last_error()).find("differ") != std::string::npos);
    ghtree_graph* bad = nullptr;
    CHECK(ghtree_graph_read("/nonexistent/file.g", &bad) == GHTREE_ERR_IO);
    ghtree_graph_free(g);
}

TEST_CASE("maxflow returns the minimal source side") {
    ghtree_graph* g = bridge_graph();
    int64_t value = 0;
    uint32_t* side = nullptr;
    size_t len = 0;
    REQUIRE(ghtree_maxflow(g, 0, 4, &value, &side, &len) == GHTREE_OK);
    CHECK(value == 1);
    REQUIRE(len == 3);
    CHECK(side[0] == 0);
    CHECK(side[2] == 2);
    ghtree_buffer_free(side);
    ghtree_graph_free(g);
}

TEST_CASE("isolating cuts through the C surface") {
    ghtree_graph* g = bridge_graph();
    const uint32_t ids[] = {0, 4};
    const size_t offsets[] = {0, 1, 2};
    ghtree_cuts* cuts = nullptr;
    REQUIRE(ghtree_isolating_cuts(g, ids, offsets, 2, &cuts) == GHTREE_OK);
    REQUIRE(ghtree_cuts_count(cuts) == 2);
    size_t group = 9;
    int64_t value = 0;
    uint32_t* side = nullptr;
    size_t len = 0;
    REQUIRE(ghtree_cuts_get(cuts, 1, &group, &value, &side, &len) == GHTREE_OK);
    CHECK(group == 1);
    CHECK(value == 1);
    CHECK(len == 3);
    ghtree_buffer_free(side);
    ghtree_cuts_free(cuts);
    ghtree_graph_free(g);
}

TEST_CASE("threshold and partial tree through the C surface") {
    ghtree_graph* g = bridge_graph();
    const uint32_t terms[] = {0, 1, 2, 3};
    int64_t tau = 0;
    uint32_t* comp = nullptr;
    size_t comp_len = 0;
    REQUIRE(ghtree_find_threshold(g, terms, 4, 5, &tau, &comp, &comp_len) == GHTREE_OK);
    CHECK(tau == 2);
    REQUIRE(comp_len == 3);
    CHECK(comp[0] == 0);
    ghtree_buffer_free(comp);

    const uint32_t all_terms[] = {0, 1, 2, 3, 4, 5};
    ghtree_ptree* pt = nullptr;
    REQUIRE(ghtree_partial_tree(g, all_terms, 6, 1, 3, &pt) == GHTREE_OK);
    CHECK(ghtree_ptree_class_count(pt) == 2);
    CHECK(ghtree_ptree_edge_count(pt) == 1);
    size_t a = 0, b = 0;
    int64_t w = 0;
    REQUIRE(ghtree_ptree_edge(pt, 0, &a, &b, &w) == GHTREE_OK);
    CHECK(w == 1);
    size_t cls = 99;
    REQUIRE(ghtree_ptree_class_of(pt, 5, &cls) == GHTREE_OK);
    CHECK(cls == 1);
    ghtree_ptree_free(pt);
    ghtree_graph_free(g);
}

TEST_CASE("build, query, kcomp, verify, io round trip") {
    ghtree_graph* g = bridge_graph();
    ghtree_build_options opt;
    ghtree_build_options_init(&opt);
    opt.seed = 11;
    opt.verify = 1;
    ghtree_tree* tree = nullptr;
    REQUIRE(ghtree_build(g, nullptr, 0, &opt, &tree) == GHTREE_OK);
    CHECK(ghtree_tree_terminal_count(tree) == 6);
    CHECK(ghtree_tree_edge_count(tree) == 5);

    int64_t value = 0;
    uint32_t* side = nullptr;
    size_t len = 0;
    REQUIRE(ghtree_tree_query(tree, 0, 4, &value, &side, &len) == GHTREE_OK);
    CHECK(value == 1);
    CHECK(len == 3);
    ghtree_buffer_free(side);

    uint32_t* comp_ids = nullptr;
    size_t* comp_offsets = nullptr;
    size_t comp_count = 0;
    REQUIRE(ghtree_tree_kcomponents(tree, 2, &comp_ids, &comp_offsets, &comp_count) == GHTREE_OK);
    CHECK(comp_count == 2);
    CHECK(comp_offsets[2] == 6);
    ghtree_buffer_free(comp_ids);
    ghtree_buffer_free(comp_offsets);

    int certified = 0, refused = 1;
    char* report = nullptr;
    REQUIRE(ghtree_verify(g, tree, 0, &certified, &refused, &report) == GHTREE_OK);
    CHECK(certified == 1);
    CHECK(refused == 0);
    CHECK(std::string(report).find("\"certified\":true") != std::string::npos);
    ghtree_string_free(report);

    char* stats = nullptr;
    REQUIRE(ghtree_tree_stats_json(tree, &stats) == GHTREE_OK);
    CHECK(std::string(stats).find("maxflow_calls") != std::string::npos);
    ghtree_string_free(stats);

    const std::string path = temp_path("capi_tree.txt");
    REQUIRE(ghtree_tree_write(tree, path.c_str()) == GHTREE_OK);
    ghtree_tree* back = nullptr;
    REQUIRE(ghtree_tree_read(path.c_str(), &back) == GHTREE_OK);
    CHECK(ghtree_tree_terminal_count(back) == 6);
    uint32_t term = 0;
    REQUIRE(ghtree_tree_map(back, 1, &term) == GHTREE_OK);
    CHECK(term == 1);
    ghtree_tree_free(back);
    ghtree_tree_free(tree);
    ghtree_graph_free(g);
    std::remove(path.c_str());
}

TEST_CASE("hypergraph surface") {
    const int64_t weights[] = {1, 1, 1};
    const uint32_t members[] = {0, 1, 2, 1, 2, 3, 0, 3};
    const size_t offsets[] = {0, 3, 6, 8};
    ghtree_hypergraph* h = nullptr;
    REQUIRE(ghtree_hypergraph_create(4, weights, members, offsets, 3, &h) == GHTREE_OK);
    CHECK(ghtree_hypergraph_total_size(h) == 8);
    int64_t value = 0;
    REQUIRE(ghtree_hypergraph_maxflow(h, 0, 3, &value, nullptr, nullptr) == GHTREE_OK);
    CHECK(value == 2);
    ghtree_build_options opt;
    ghtree_build_options_init(&opt);
    ghtree_tree* tree = nullptr;
    REQUIRE(ghtree_build_hyper(h, nullptr, 0, &opt, &tree) == GHTREE_OK);
    int certified = 0, refused = 0;
    REQUIRE(ghtree_verify_hyper(h, tree, 0, &certified, &refused, nullptr) == GHTREE_OK);
    CHECK(certified == 1);
    ghtree_tree_free(tree);
    ghtree_hypergraph_free(h);
}

TEST_CASE("generation through the C surface is deterministic") {
    ghtree_gen_params p;
    ghtree_gen_params_init(&p);
    p.n = 10;
    p.density = 0.4;
    p.weight_max = 5;
    p.ensure_connected = 1;
    const std::string a = temp_path("capi_gen_a.g");
    const std::string b = temp_path("capi_gen_b.g");
    int hyper = 2;
    REQUIRE(ghtree_generate("gnp", &p, 7, a.c_str(), &hyper) == GHTREE_OK);
    CHECK(hyper == 0);
    REQUIRE(ghtree_generate("gnp", &p, 7, b.c_str(), nullptr) == GHTREE_OK);
    std::ifstream fa(a), fb(b);
    std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK(ghtree_generate("mystery", &p, 7, a.c_str(), nullptr) == GHTREE_ERR_INVALID_INPUT);
    std::remove(a.c_str());
    std::remove(b.c_str());
}
