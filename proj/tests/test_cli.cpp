// Drives the installed CLI binary and checks outputs and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct run_result {
    int exit_code;
    std::string output;  // stdout only
};

run_result run_cli(const std::string& args) {
    const std::string cmd = std::string(GHTREE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string temp_file(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

const char* bridge_graph_text =
    "g 6 7\n0 1 1\n0 2 1\n1 2 1\n2 3 1\n3 4 1\n3 5 1\n4 5 1\n";

}  // namespace

TEST_CASE("gen produces byte-identical files per seed and prints the seed") {
    const auto out1 = temp_file("cli_gen1.g");
    const auto out2 = temp_file("cli_gen2.g");
    const std::string args = "gen gnp --n 10 --density 0.4 --wmin 1 --wmax 5 --connected --seed 7 -o ";
    const auto r1 = run_cli(args + out1);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("# seed 7") != std::string::npos);
    const auto r2 = run_cli(args + out2);
    CHECK(r2.exit_code == 0);
    std::ifstream f1(out1), f2(out2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(!s1.empty());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("build, query, kcomp, verify round trip") {
    const auto graph_path = temp_file("cli_bridge.g");
    const auto tree_path = temp_file("cli_bridge.tree");
    const auto stats_path = temp_file("cli_bridge.stats.json");
    write_file(graph_path, bridge_graph_text);

    const auto built = run_cli("build " + graph_path + " --seed 3 --verify --stats " + stats_path +
                               " -o " + tree_path);
    CHECK(built.exit_code == 0);
    CHECK(built.output.find("# seed 3") != std::string::npos);

    std::ifstream stats(stats_path);
    std::string stats_text((std::istreambuf_iterator<char>(stats)), std::istreambuf_iterator<char>());
    CHECK(stats_text.find("maxflow_calls") != std::string::npos);
    CHECK(stats_text.find("per_level_edges") != std::string::npos);

    const auto q = run_cli("query " + tree_path + " 0 4");
    CHECK(q.exit_code == 0);
    CHECK(q.output.find("value 1") != std::string::npos);
    CHECK(q.output.find("side 0 1 2") != std::string::npos);

    const auto kc = run_cli("kcomp " + tree_path + " 2");
    CHECK(kc.exit_code == 0);
    CHECK(kc.output.find("0 1 2") != std::string::npos);
    CHECK(kc.output.find("3 4 5") != std::string::npos);

    const auto ver = run_cli("verify " + graph_path + " " + tree_path);
    CHECK(ver.exit_code == 0);
    CHECK(ver.output.find("certified") != std::string::npos);

    // identical command and seed gives identical bytes
    const auto again = run_cli("build " + graph_path + " --seed 3");
    const auto again2 = run_cli("build " + graph_path + " --seed 3");
    CHECK(again.output == again2.output);

    std::remove(graph_path.c_str());
    std::remove(tree_path.c_str());
    std::remove(stats_path.c_str());
}

TEST_CASE("verify flags a corrupted tree with exit code 2") {
    const auto graph_path = temp_file("cli_bad.g");
    const auto tree_path = temp_file("cli_bad.tree");
    write_file(graph_path, bridge_graph_text);
    const auto built = run_cli("build " + graph_path + " --seed 3 -o " + tree_path);
    REQUIRE(built.exit_code == 0);
    // inflate the first edge weight
    std::ifstream in(tree_path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    content.insert(content.find('\n') - 1, "9");
    write_file(tree_path, content);
    const auto ver = run_cli("verify " + graph_path + " " + tree_path);
    CHECK(ver.exit_code == 2);
    std::remove(graph_path.c_str());
    std::remove(tree_path.c_str());
}

TEST_CASE("maxflow, isocuts and threshold subcommands") {
    const auto graph_path = temp_file("cli_ops.g");
    write_file(graph_path, bridge_graph_text);

    const auto mf = run_cli("maxflow " + graph_path + " 0 4");
    CHECK(mf.exit_code == 0);
    CHECK(mf.output.find("value 1") != std::string::npos);
    CHECK(mf.output.find("side 0 1 2") != std::string::npos);

    const auto groups_path = temp_file("cli_groups.txt");
    write_file(groups_path, "0\n4\n");
    const auto iso = run_cli("isocuts " + graph_path + " " + groups_path);
    CHECK(iso.exit_code == 0);
    CHECK(iso.output.find("group 0 value 1 side 0 1 2") != std::string::npos);
    CHECK(iso.output.find("group 1 value 1 side 3 4 5") != std::string::npos);

    const auto terms_path = temp_file("cli_terms.txt");
    write_file(terms_path, "0 1 2 3\n");
    const auto thr = run_cli("threshold " + graph_path + " --terminals " + terms_path + " --seed 5");
    CHECK(thr.exit_code == 0);
    CHECK(thr.output.find("tau 2") != std::string::npos);
    CHECK(thr.output.find("component 0 1 2") != std::string::npos);

    const auto part = run_cli("partial " + graph_path + " --tau 1 --seed 5");
    CHECK(part.exit_code == 0);
    CHECK(part.output.find("class 0 0 1 2") != std::string::npos);
    CHECK(part.output.find("class 1 3 4 5") != std::string::npos);
    CHECK(part.output.find("edge 0 1 1") != std::string::npos);

    std::remove(graph_path.c_str());
    std::remove(groups_path.c_str());
    std::remove(terms_path.c_str());
}

TEST_CASE("input errors exit with code 3") {
    const auto missing = run_cli("build /nonexistent/file.g");
    CHECK(missing.exit_code == 3);
    const auto bad_path = temp_file("cli_selfloop.g");
    write_file(bad_path, "g 2 1\n0 0 1\n");
    const auto bad = run_cli("build " + bad_path);
    CHECK(bad.exit_code == 3);
    std::remove(bad_path.c_str());
}

TEST_CASE("hypergraph build through the CLI") {
    const auto path = temp_file("cli_h1.h");
    write_file(path, "h 4 3\n1 3 0 1 2\n1 3 1 2 3\n1 2 0 3\n");
    const auto tree_path = temp_file("cli_h1.tree");
    const auto built = run_cli("build " + path + " --hyper --seed 2 -o " + tree_path);
    CHECK(built.exit_code == 0);
    const auto q = run_cli("query " + tree_path + " 0 3");
    CHECK(q.exit_code == 0);
    CHECK(q.output.find("value 2") != std::string::npos);
    const auto ver = run_cli("verify " + path + " " + tree_path);
    CHECK(ver.exit_code == 0);
    std::remove(path.c_str());
    std::remove(tree_path.c_str());
}

TEST_CASE("bench emits rows and a fitted constant") {
    const auto suite_path = temp_file("cli_suite.json");
    const auto out_path = temp_file("cli_bench.jsonl");
    std::remove(out_path.c_str());
    write_file(suite_path,
               "{\"runs\":[{\"kind\":\"gnp\",\"n\":24,\"density\":0.3,\"connected\":true,"
               "\"seeds\":[1,2],\"verify\":true}]}");
    const auto bench = run_cli("bench --suite " + suite_path + " --out " + out_path + " --workers 2");
    CHECK(bench.exit_code == 0);
    CHECK(bench.output.find("fitted c_size") != std::string::npos);
    std::ifstream rows(out_path);
    std::string line;
    int count = 0;
    while (std::getline(rows, line))
        if (!line.empty()) ++count;
    CHECK(count == 2);
    std::remove(suite_path.c_str());
    std::remove(out_path.c_str());
}
