// ghtree: Gomory-Hu trees for graphs and hypergraphs, over the C API.
#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghtree/ghtree.h"

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 2;
constexpr int exit_input_error = 3;
constexpr int exit_oracle_refused = 4;

int exit_code_for(ghtree_status status) {
    switch (status) {
        case GHTREE_OK:
            return exit_ok;
        case GHTREE_ERR_INVALID_INPUT:
        case GHTREE_ERR_IO:
            return exit_input_error;
        case GHTREE_ERR_RANDOMIZED_FAILURE:
            return exit_verify_failed;
        case GHTREE_ERR_ORACLE_REFUSED:
            return exit_oracle_refused;
        default:
            return 1;
    }
}

[[noreturn]] void die(ghtree_status status) {
    std::cerr << "error: " << ghtree_last_error() << "\n";
    std::exit(exit_code_for(status));
}

void check(ghtree_status status) {
    if (status != GHTREE_OK) die(status);
}

struct id_buffer {
    uint32_t* data = nullptr;
    size_t len = 0;
    ~id_buffer() { ghtree_buffer_free(data); }
    std::vector<uint32_t> vec() const { return {data, data + len}; }
};

struct owned_string {
    char* data = nullptr;
    ~owned_string() { ghtree_string_free(data); }
};

std::vector<uint32_t> read_id_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open terminal file: " << path << "\n";
        std::exit(exit_input_error);
    }
    std::vector<uint32_t> ids;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        long long v;
        while (row >> v) {
            if (v < 0) {
                std::cerr << "error: negative id in " << path << "\n";
                std::exit(exit_input_error);
            }
            ids.push_back(static_cast<uint32_t>(v));
        }
    }
    return ids;
}

// one group per line
std::vector<std::vector<uint32_t>> read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open terminal file: " << path << "\n";
        std::exit(exit_input_error);
    }
    std::vector<std::vector<uint32_t>> groups;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::vector<uint32_t> group;
        long long v;
        while (row >> v) group.push_back(static_cast<uint32_t>(v));
        if (!group.empty()) groups.push_back(std::move(group));
    }
    return groups;
}

struct instance_handle {
    ghtree_graph* graph = nullptr;
    ghtree_hypergraph* hyper = nullptr;
    ~instance_handle() {
        ghtree_graph_free(graph);
        ghtree_hypergraph_free(hyper);
    }
    bool is_hyper() const { return hyper != nullptr; }
};

// --format graph|hyper, or sniff the file header
instance_handle open_instance(const std::string& path, std::string format) {
    if (format.empty()) {
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            const auto pos = line.find_first_not_of(" \t\r\n");
            if (pos == std::string::npos || line[pos] == '#') continue;
            format = line[pos] == 'h' ? "hyper" : "graph";
            break;
        }
        if (format.empty()) format = "graph";
    }
    instance_handle h;
    if (format == "hyper")
        check(ghtree_hypergraph_read(path.c_str(), &h.hyper));
    else
        check(ghtree_graph_read(path.c_str(), &h.graph));
    return h;
}

void print_side(std::ostream& out, const uint32_t* side, size_t len) {
    out << "side";
    for (size_t i = 0; i < len; ++i) out << " " << side[i];
    out << "\n";
}

struct tree_handle {
    ghtree_tree* t = nullptr;
    ~tree_handle() { ghtree_tree_free(t); }
};

json stats_json(const ghtree_tree* t) {
    owned_string s;
    check(ghtree_tree_stats_json(t, &s.data));
    return json::parse(s.data);
}

// ---- bench ----

struct bench_row {
    json row;
};

struct bench_job {
    json spec;
    uint64_t seed;
    std::size_t index;
};

bench_row run_bench_job(const bench_job& job, uint32_t oracle_cap, const std::string& tmp_dir) {
    const json& spec = job.spec;
    std::string file;
    std::string format = spec.value("format", "");
    bool is_hyper = format == "hyper";
    if (spec.contains("file")) {
        file = spec["file"].get<std::string>();
    } else {
        ghtree_gen_params p;
        ghtree_gen_params_init(&p);
        const std::string kind = spec.value("kind", "gnp");
        p.n = spec.value("n", 0u);
        p.edges = spec.value("m", 0ull);
        p.density = spec.value("density", 0.0);
        p.weight_min = spec.value("wmin", 1);
        p.weight_max = spec.value("wmax", 1);
        p.arity_min = spec.value("amin", 2u);
        p.arity_max = spec.value("amax", 3u);
        p.rows = spec.value("rows", 0u);
        p.cols = spec.value("cols", 0u);
        p.extra_edges = spec.value("extra", 0ull);
        p.ensure_connected = spec.value("connected", true) ? 1 : 0;
        file = tmp_dir + "/bench_" + std::to_string(job.index) + ".inst";
        int hyper_flag = 0;
        check(ghtree_generate(kind.c_str(), &p, job.seed, file.c_str(), &hyper_flag));
        is_hyper = hyper_flag != 0;
        format = is_hyper ? "hyper" : "graph";
    }
    instance_handle inst = open_instance(file, format);

    ghtree_build_options opt;
    ghtree_build_options_init(&opt);
    opt.seed = job.seed;
    opt.use_classic = spec.value("classic", false) ? 1 : 0;

    std::vector<uint32_t> terms;
    if (spec.contains("terminals")) terms = spec["terminals"].get<std::vector<uint32_t>>();

    tree_handle tree;
    ghtree_status st;
    if (inst.is_hyper())
        st = ghtree_build_hyper(inst.hyper, terms.empty() ? nullptr : terms.data(), terms.size(), &opt,
                                &tree.t);
    else
        st = ghtree_build(inst.graph, terms.empty() ? nullptr : terms.data(), terms.size(), &opt,
                          &tree.t);
    if (st != GHTREE_OK) die(st);

    json row = stats_json(tree.t);
    const uint64_t size_measure = inst.is_hyper() ? ghtree_hypergraph_total_size(inst.hyper)
                                                  : ghtree_graph_edge_count(inst.graph);
    const uint32_t n = inst.is_hyper() ? ghtree_hypergraph_vertex_count(inst.hyper)
                                       : ghtree_graph_vertex_count(inst.graph);
    row["n"] = n;
    row[inst.is_hyper() ? "p" : "m"] = size_measure;
    row["u"] = ghtree_tree_terminal_count(tree.t);
    row["kind"] = spec.contains("file") ? json(file) : json(spec.value("kind", "gnp"));
    row["seed"] = job.seed;

    uint64_t total_edges = 0;
    for (const auto& level : row["per_level_edges"]) total_edges += level.get<uint64_t>();
    const double log_u = std::log2(static_cast<double>(ghtree_tree_terminal_count(tree.t)) + 2.0);
    row["instance_edge_total"] = total_edges;
    row["c_size"] = static_cast<double>(total_edges) / (static_cast<double>(size_measure) * log_u * log_u);
    const double log_n = std::log2(std::max<double>(n, 2.0));
    row["c_maxflow"] =
        static_cast<double>(row["maxflow_calls"].get<uint64_t>()) / std::pow(log_n, 6.0);
    row["depth_bound"] = static_cast<uint64_t>(
        std::floor(std::log(std::max<double>(static_cast<double>(ghtree_tree_terminal_count(tree.t)), 2.0)) /
                   std::log(1.5)));

    if (spec.value("verify", false)) {
        int certified = 0, refused = 0;
        owned_string report;
        if (inst.is_hyper())
            check(ghtree_verify_hyper(inst.hyper, tree.t, oracle_cap, &certified, &refused, &report.data));
        else
            check(ghtree_verify(inst.graph, tree.t, oracle_cap, &certified, &refused, &report.data));
        row["verified"] = certified != 0;
        row["oracle_refused"] = refused != 0;
    }
    return {row};
}

int cmd_bench(const std::string& suite_path, const std::string& out_path, unsigned workers,
              uint32_t oracle_cap) {
    std::ifstream in(suite_path);
    if (!in) {
        std::cerr << "error: cannot open suite config: " << suite_path << "\n";
        return exit_input_error;
    }
    json suite;
    try {
        in >> suite;
    } catch (const std::exception& e) {
        std::cerr << "error: bad suite config: " << e.what() << "\n";
        return exit_input_error;
    }
    std::vector<bench_job> jobs;
    for (const auto& run : suite["runs"]) {
        std::vector<uint64_t> seeds = run.contains("seeds")
                                          ? run["seeds"].get<std::vector<uint64_t>>()
                                          : std::vector<uint64_t>{1};
        for (uint64_t s : seeds) jobs.push_back({run, s, jobs.size()});
    }
    const std::string tmp_dir = std::filesystem::temp_directory_path().string();
    std::vector<bench_row> rows(jobs.size());
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t mine;
            {
                std::lock_guard lock(next_mutex);
                if (next >= jobs.size()) return;
                mine = next++;
            }
            rows[mine] = run_bench_job(jobs[mine], oracle_cap, tmp_dir);
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::max(1u, workers);
    for (unsigned i = 0; i + 1 < count; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ofstream out;
    if (!out_path.empty()) out.open(out_path, std::ios::app);
    double c_size_max = 0.0;
    bool all_verified = true;
    std::cout << "kind,n,size,u,depth,maxflow_calls,maxflow_edge_sum,wall_ms,c_size,verified\n";
    for (const auto& r : rows) {
        const json& row = r.row;
        if (!out_path.empty()) out << row.dump() << "\n";
        c_size_max = std::max(c_size_max, row.value("c_size", 0.0));
        if (row.contains("verified") && !row["verified"].get<bool>()) all_verified = false;
        std::cout << row.value("kind", json("?")).dump() << "," << row.value("n", 0) << ","
                  << (row.contains("m") ? row["m"].get<uint64_t>() : row.value("p", 0ull)) << ","
                  << row.value("u", 0) << "," << row.value("depth", 0) << ","
                  << row.value("maxflow_calls", 0ull) << "," << row.value("maxflow_edge_sum", 0ull)
                  << "," << row.value("wall_ms", 0ull) << "," << row.value("c_size", 0.0) << ","
                  << (row.contains("verified") ? (row["verified"].get<bool>() ? "yes" : "NO") : "-")
                  << "\n";
    }
    std::cout << "# fitted c_size (max over runs) = " << c_size_max << "\n";
    if (!all_verified) {
        std::cerr << "error: verification failed for at least one run\n";
        return exit_verify_failed;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gomory-Hu cut trees via recursive mincut decomposition"};
    app.require_subcommand(1);

    // ---- build ----
    auto* build = app.add_subcommand("build", "build a Gomory-Hu tree");
    std::string build_file, build_terms, build_stats, build_out, build_format;
    uint64_t build_seed = 1;
    bool build_verify = false, build_classic = false, build_hyper = false;
    uint32_t build_cap = 0;
    build->add_option("file", build_file, "graph or hypergraph file")->required();
    build->add_option("--terminals", build_terms, "terminal id file (default: all vertices)");
    build->add_option("--seed", build_seed, "random seed");
    build->add_flag("--verify", build_verify, "certify the tree; reseed and retry on failure");
    build->add_flag("--classic", build_classic, "force the |U|-1 maxflow contraction scheme");
    build->add_flag("--hyper", build_hyper, "treat the input as a hypergraph");
    build->add_option("--format", build_format, "graph|hyper (default: sniff the header)");
    build->add_option("--stats", build_stats, "write run statistics JSON to this path");
    build->add_option("-o,--out", build_out, "write the tree here instead of stdout");
    build->add_option("--oracle-cap", build_cap, "vertex cap for the verification oracle");

    // ---- query ----
    auto* query = app.add_subcommand("query", "minimum cut value and side between two terminals");
    std::string query_file;
    uint32_t query_s = 0, query_t = 0;
    query->add_option("tree", query_file)->required();
    query->add_option("s", query_s)->required();
    query->add_option("t", query_t)->required();

    // ---- kcomp ----
    auto* kcomp = app.add_subcommand("kcomp", "k-connected components of the terminal set");
    std::string kcomp_file;
    int64_t kcomp_k = 1;
    kcomp->add_option("tree", kcomp_file)->required();
    kcomp->add_option("k", kcomp_k)->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "certify a tree against its graph");
    std::string verify_graph, verify_tree, verify_terms, verify_format, verify_json;
    uint32_t verify_cap = 0;
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("tree", verify_tree)->required();
    verify->add_option("--terminals", verify_terms, "expected terminal set");
    verify->add_option("--format", verify_format, "graph|hyper");
    verify->add_option("--oracle-cap", verify_cap, "vertex cap for the value oracle");
    verify->add_option("--json", verify_json, "write the verification report here");

    // ---- maxflow ----
    auto* mf = app.add_subcommand("maxflow", "single (s,t) mincut value and minimal source side");
    std::string mf_file, mf_format;
    uint32_t mf_s = 0, mf_t = 0;
    mf->add_option("file", mf_file)->required();
    mf->add_option("s", mf_s)->required();
    mf->add_option("t", mf_t)->required();
    mf->add_option("--format", mf_format, "graph|hyper");

    // ---- isocuts ----
    auto* iso = app.add_subcommand("isocuts", "disjoint minimal isolating cuts for terminal groups");
    std::string iso_file, iso_terms, iso_format;
    iso->add_option("file", iso_file)->required();
    iso->add_option("terminals", iso_terms, "terminal groups, one per line")->required();
    iso->add_option("--format", iso_format, "graph|hyper");

    // ---- threshold ----
    auto* thr = app.add_subcommand("threshold", "largest tau whose tau-connected component holds a terminal majority");
    std::string thr_file, thr_terms, thr_format;
    uint64_t thr_seed = 1;
    thr->add_option("file", thr_file)->required();
    thr->add_option("--terminals", thr_terms);
    thr->add_option("--seed", thr_seed);
    thr->add_option("--format", thr_format, "graph|hyper");

    // ---- partial ----
    auto* part = app.add_subcommand("partial", "partial tree over (tau+1)-connected terminal classes");
    std::string part_file, part_terms, part_format;
    int64_t part_tau = 1;
    uint64_t part_seed = 1;
    part->add_option("file", part_file)->required();
    part->add_option("--tau", part_tau)->required();
    part->add_option("--terminals", part_terms);
    part->add_option("--seed", part_seed);
    part->add_option("--format", part_format, "graph|hyper");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a deterministic instance");
    std::string gen_kind, gen_out;
    ghtree_gen_params gp;
    ghtree_gen_params_init(&gp);
    uint64_t gen_seed = 1;
    bool gen_connected = false;
    gen->add_option("kind", gen_kind, "gnp|two-cliques-bridge|grid|tree-plus-edges|hyper-random")
        ->required();
    gen->add_option("--n", gp.n);
    gen->add_option("--m", gp.edges, "hyperedge count (hyper-random)");
    gen->add_option("--density", gp.density);
    gen->add_option("--wmin", gp.weight_min);
    gen->add_option("--wmax", gp.weight_max);
    gen->add_option("--amin", gp.arity_min);
    gen->add_option("--amax", gp.arity_max);
    gen->add_option("--rows", gp.rows);
    gen->add_option("--cols", gp.cols);
    gen->add_option("--extra", gp.extra_edges, "extra edges (tree-plus-edges)");
    gen->add_flag("--connected", gen_connected, "enforce connectivity via a random spanning tree");
    gen->add_option("--seed", gen_seed);
    gen->add_option("-o,--out", gen_out, "output path")->required();

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "run a benchmark suite and emit JSON lines");
    std::string bench_suite, bench_out;
    unsigned bench_workers = 1;
    uint32_t bench_cap = 0;
    bench->add_option("--suite", bench_suite, "suite config JSON")->required();
    bench->add_option("--out", bench_out, "append one JSON object per run to this file");
    bench->add_option("--workers", bench_workers, "concurrent runs");
    bench->add_option("--oracle-cap", bench_cap, "vertex cap for the verification oracle");

    CLI11_PARSE(app, argc, argv);

    if (build->parsed()) {
        instance_handle inst = open_instance(build_file, build_hyper ? "hyper" : build_format);
        std::vector<uint32_t> terms;
        if (!build_terms.empty()) terms = read_id_file(build_terms);
        ghtree_build_options opt;
        ghtree_build_options_init(&opt);
        opt.seed = build_seed;
        opt.use_classic = build_classic ? 1 : 0;
        opt.verify = build_verify ? 1 : 0;
        opt.oracle_cap = build_cap;
        tree_handle tree;
        ghtree_status st;
        if (inst.is_hyper())
            st = ghtree_build_hyper(inst.hyper, terms.empty() ? nullptr : terms.data(), terms.size(),
                                    &opt, &tree.t);
        else
            st = ghtree_build(inst.graph, terms.empty() ? nullptr : terms.data(), terms.size(), &opt,
                              &tree.t);
        if (st != GHTREE_OK) die(st);
        if (!build_stats.empty()) {
            std::ofstream sout(build_stats);
            sout << stats_json(tree.t).dump(2) << "\n";
        }
        if (build_out.empty()) {
            std::cout << "# seed " << build_seed << "\n";
            // stream the canonical file form through a private temp path
            const std::string path =
                (std::filesystem::temp_directory_path() /
                 ("ghtree_stdout." + std::to_string(::getpid()) + ".tree"))
                    .string();
            check(ghtree_tree_write(tree.t, path.c_str()));
            std::ifstream back(path);
            std::cout << back.rdbuf();
            std::remove(path.c_str());
        } else {
            check(ghtree_tree_write(tree.t, build_out.c_str()));
            std::cout << "# seed " << build_seed << "\n";
            std::cout << "wrote " << build_out << "\n";
        }
        return exit_ok;
    }

    if (query->parsed()) {
        tree_handle tree;
        check(ghtree_tree_read(query_file.c_str(), &tree.t));
        int64_t value = 0;
        id_buffer side;
        check(ghtree_tree_query(tree.t, query_s, query_t, &value, &side.data, &side.len));
        std::cout << "value " << value << "\n";
        print_side(std::cout, side.data, side.len);
        return exit_ok;
    }

    if (kcomp->parsed()) {
        tree_handle tree;
        check(ghtree_tree_read(kcomp_file.c_str(), &tree.t));
        uint32_t* ids = nullptr;
        size_t* offsets = nullptr;
        size_t count = 0;
        check(ghtree_tree_kcomponents(tree.t, kcomp_k, &ids, &offsets, &count));
        for (size_t c = 0; c < count; ++c) {
            for (size_t i = offsets[c]; i < offsets[c + 1]; ++i)
                std::cout << ids[i] << (i + 1 == offsets[c + 1] ? "" : " ");
            std::cout << "\n";
        }
        ghtree_buffer_free(ids);
        ghtree_buffer_free(offsets);
        return exit_ok;
    }

    if (verify->parsed()) {
        instance_handle inst = open_instance(verify_graph, verify_format);
        tree_handle tree;
        check(ghtree_tree_read(verify_tree.c_str(), &tree.t));
        if (!verify_terms.empty()) {
            auto want = read_id_file(verify_terms);
            std::sort(want.begin(), want.end());
            want.erase(std::unique(want.begin(), want.end()), want.end());
            id_buffer have;
            check(ghtree_tree_terminals(tree.t, &have.data, &have.len));
            if (want != have.vec()) {
                std::cerr << "terminal set mismatch between --terminals and the tree\n";
                return exit_verify_failed;
            }
        }
        int certified = 0, refused = 0;
        owned_string report;
        ghtree_status st;
        if (inst.is_hyper())
            st = ghtree_verify_hyper(inst.hyper, tree.t, verify_cap, &certified, &refused, &report.data);
        else
            st = ghtree_verify(inst.graph, tree.t, verify_cap, &certified, &refused, &report.data);
        if (st != GHTREE_OK) die(st);
        if (!verify_json.empty()) {
            std::ofstream out(verify_json);
            out << report.data << "\n";
        }
        const json rep = json::parse(report.data);
        if (certified) {
            std::cout << "certified\n";
            return exit_ok;
        }
        if (refused && rep["value_mismatches"].empty() && rep["edge_mismatches"].empty() &&
            rep["map_violations"].empty()) {
            std::cout << "certificates ok; value oracle refused (instance above --oracle-cap)\n";
            return exit_oracle_refused;
        }
        std::cout << "verification FAILED: " << rep["value_mismatches"].size() << " value, "
                  << rep["edge_mismatches"].size() << " edge, " << rep["map_violations"].size()
                  << " map violations\n";
        return exit_verify_failed;
    }

    if (mf->parsed()) {
        instance_handle inst = open_instance(mf_file, mf_format);
        int64_t value = 0;
        id_buffer side;
        ghtree_status st;
        if (inst.is_hyper())
            st = ghtree_hypergraph_maxflow(inst.hyper, mf_s, mf_t, &value, &side.data, &side.len);
        else
            st = ghtree_maxflow(inst.graph, mf_s, mf_t, &value, &side.data, &side.len);
        if (st != GHTREE_OK) die(st);
        std::cout << "value " << value << "\n";
        print_side(std::cout, side.data, side.len);
        return exit_ok;
    }

    if (iso->parsed()) {
        instance_handle inst = open_instance(iso_file, iso_format);
        const auto groups = read_group_file(iso_terms);
        std::vector<uint32_t> flat;
        std::vector<size_t> offsets{0};
        for (const auto& g : groups) {
            flat.insert(flat.end(), g.begin(), g.end());
            offsets.push_back(flat.size());
        }
        ghtree_cuts* cuts = nullptr;
        ghtree_status st;
        if (inst.is_hyper())
            st = ghtree_hypergraph_isolating_cuts(inst.hyper, flat.data(), offsets.data(),
                                                  groups.size(), &cuts);
        else
            st = ghtree_isolating_cuts(inst.graph, flat.data(), offsets.data(), groups.size(), &cuts);
        if (st != GHTREE_OK) die(st);
        for (size_t i = 0; i < ghtree_cuts_count(cuts); ++i) {
            size_t group = 0;
            int64_t value = 0;
            id_buffer side;
            check(ghtree_cuts_get(cuts, i, &group, &value, &side.data, &side.len));
            std::cout << "group " << group << " value " << value << " ";
            print_side(std::cout, side.data, side.len);
        }
        ghtree_cuts_free(cuts);
        return exit_ok;
    }

    if (thr->parsed()) {
        instance_handle inst = open_instance(thr_file, thr_format);
        std::vector<uint32_t> terms;
        if (!thr_terms.empty()) {
            terms = read_id_file(thr_terms);
        } else {
            const uint32_t n = inst.is_hyper() ? ghtree_hypergraph_vertex_count(inst.hyper)
                                               : ghtree_graph_vertex_count(inst.graph);
            for (uint32_t v = 0; v < n; ++v) terms.push_back(v);
        }
        int64_t tau = 0;
        id_buffer comp;
        ghtree_status st;
        if (inst.is_hyper())
            st = ghtree_hypergraph_find_threshold(inst.hyper, terms.data(), terms.size(), thr_seed,
                                                  &tau, &comp.data, &comp.len);
        else
            st = ghtree_find_threshold(inst.graph, terms.data(), terms.size(), thr_seed, &tau,
                                       &comp.data, &comp.len);
        if (st != GHTREE_OK) die(st);
        std::cout << "# seed " << thr_seed << "\n";
        std::cout << "tau " << tau << "\n";
        std::cout << "component";
        for (size_t i = 0; i < comp.len; ++i) std::cout << " " << comp.data[i];
        std::cout << "\n";
        return exit_ok;
    }

    if (part->parsed()) {
        instance_handle inst = open_instance(part_file, part_format);
        std::vector<uint32_t> terms;
        if (!part_terms.empty()) {
            terms = read_id_file(part_terms);
        } else {
            const uint32_t n = inst.is_hyper() ? ghtree_hypergraph_vertex_count(inst.hyper)
                                               : ghtree_graph_vertex_count(inst.graph);
            for (uint32_t v = 0; v < n; ++v) terms.push_back(v);
        }
        ghtree_ptree* pt = nullptr;
        ghtree_status st;
        if (inst.is_hyper())
            st = ghtree_hypergraph_partial_tree(inst.hyper, terms.data(), terms.size(), part_tau,
                                                part_seed, &pt);
        else
            st = ghtree_partial_tree(inst.graph, terms.data(), terms.size(), part_tau, part_seed, &pt);
        if (st != GHTREE_OK) die(st);
        std::cout << "# seed " << part_seed << "\n";
        for (size_t c = 0; c < ghtree_ptree_class_count(pt); ++c) {
            id_buffer ids;
            check(ghtree_ptree_class(pt, c, &ids.data, &ids.len));
            std::cout << "class " << c;
            for (size_t i = 0; i < ids.len; ++i) std::cout << " " << ids.data[i];
            std::cout << "\n";
        }
        for (size_t e = 0; e < ghtree_ptree_edge_count(pt); ++e) {
            size_t a = 0, b = 0;
            int64_t w = 0;
            check(ghtree_ptree_edge(pt, e, &a, &b, &w));
            std::cout << "edge " << a << " " << b << " " << w << "\n";
        }
        ghtree_ptree_free(pt);
        return exit_ok;
    }

    if (gen->parsed()) {
        gp.ensure_connected = gen_connected ? 1 : 0;
        int is_hyper = 0;
        check(ghtree_generate(gen_kind.c_str(), &gp, gen_seed, gen_out.c_str(), &is_hyper));
        std::cout << "# seed " << gen_seed << "\n";
        std::cout << "wrote " << gen_out << (is_hyper ? " (hypergraph)" : " (graph)") << "\n";
        return exit_ok;
    }

    if (bench->parsed()) return cmd_bench(bench_suite, bench_out, bench_workers, bench_cap);

    return exit_input_error;
}
