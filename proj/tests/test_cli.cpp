#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hypertopo/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = std::filesystem::temp_directory_path() / "hypertopo_cli_out.txt";
    std::string cmd = std::string(HT_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(HT_FIXTURES_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

}  // namespace

TEST_CASE("gen strong reproduces the (4,2) family") {
    auto r = run_cli("gen strong --m 4 --t 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["edges"] == nlohmann::json::parse("[[1,2,3],[1,2,4],[2,3,4]]"));
    CHECK(j["cardinality"] == 3);

    auto again = run_cli("gen strong --m 4 --t 2");
    CHECK(again.output == r.output);  // byte-identical reruns
}

TEST_CASE("verify distinguishes pass, verified failure, and bad input") {
    CHECK(run_cli("verify " + fixture("fixA.json") + " --strict").exit_code == 0);

    auto failing = write_temp("disjoint.json", R"({"ground":[1,2],"edges":[[1],[2]]})");
    CHECK(run_cli("verify " + failing + " --strict").exit_code == 1);

    auto malformed = write_temp("broken.json", "{\"ground\": [1,,]}");
    auto r = run_cli("verify " + malformed);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("byte") != std::string::npos);

    CHECK(run_cli("verify /nonexistent.json").exit_code == 2);
}

TEST_CASE("counting commands") {
    auto trees = run_cli("count trees --n 4 --complete");
    CHECK(trees.exit_code == 0);
    CHECK(nlohmann::json::parse(trees.output)["spanning_trees"] == "16");

    auto bip = run_cli("count trees --bipartite 2 3");
    CHECK(nlohmann::json::parse(bip.output)["spanning_trees"] == "12");

    auto forests = run_cli("count forests --n 4");
    CHECK(nlohmann::json::parse(forests.output)["forests"] == "38");
}

TEST_CASE("cycle search on the pinned family") {
    auto r = run_cli("cycle " + fixture("fixA.json"));
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["found"] == true);
    CHECK(j["edge_order"].size() == 8);
}

TEST_CASE("group commands") {
    auto check = run_cli("group check " + fixture("fixB_e11.json") + " --modulus 10");
    CHECK(check.exit_code == 0);
    auto j = nlohmann::json::parse(check.output);
    CHECK(j["pass"] == true);
    CHECK(j["members"].size() == 10);

    auto table = run_cli("group table --modulus 4 --zero 2");
    auto tj = nlohmann::json::parse(table.output);
    CHECK(tj["table"][0][1] == 1);  // 1 + 2 - 2 = 1

    auto shifted = run_cli("group shift " + fixture("fixB_e11.json") + " --modulus 10 --r 1");
    auto sj = nlohmann::json::parse(shifted.output);
    CHECK(sj["edges"].size() == 6);
}

TEST_CASE("enumeration and key search") {
    auto e = run_cli("enum --ground 2 --strict");
    CHECK(nlohmann::json::parse(e.output)["count"] == 1);

    auto k1 = run_cli("keys --ground 4 --limit 3 --seed 7");
    auto k2 = run_cli("keys --ground 4 --limit 3 --seed 7");
    CHECK(k1.output == k2.output);

    // the environment variable stands in for --seed
    auto env1 = run_cli("keys --ground 6 --limit 2 --seed 11");
    RunResult env2;
    {
        const std::string out_path =
            std::filesystem::temp_directory_path() / "hypertopo_cli_env.txt";
        std::string cmd = std::string("HYPERTOPO_SEED=11 ") + HT_CLI_PATH +
                          " keys --ground 6 --limit 2 > " + out_path + " 2>&1";
        int status = std::system(cmd.c_str());
        if (WIFEXITED(status)) env2.exit_code = WEXITSTATUS(status);
        std::ifstream in(out_path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        env2.output = ss.str();
    }
    CHECK(env2.exit_code == 0);
    CHECK(env1.output == env2.output);
}

TEST_CASE("graph export") {
    auto dot = run_cli("graph " + fixture("fixF_M5.json") + " --out dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph G {") != std::string::npos);
    CHECK(dot.output.find("v0 -- v1") != std::string::npos);

    auto js = run_cli("graph " + fixture("fixF_M5.json") + " --out json");
    auto j = nlohmann::json::parse(js.output);
    CHECK(j["vertices"] == 5);
    CHECK(j["edges"].size() == 10);  // complete on five vertices
}

TEST_CASE("metrics and reduce") {
    auto m = run_cli("metrics " + fixture("fixA.json"));
    auto j = nlohmann::json::parse(m.output);
    CHECK(j["hyperedge_degrees"] == nlohmann::json::parse("[6,6,6,6,6,6,6,6]"));
    CHECK(j["hyperdiameter"] == 2);
    CHECK(j["hyperedge_connectivity"] == 6);

    auto chain = write_temp("chain.json", R"({"ground":[1,2,3],"edges":[[1,2],[1,2,3]]})");
    auto red = run_cli("reduce " + chain);
    CHECK(nlohmann::json::parse(red.output)["edges"].empty());
}

TEST_CASE("coloring verification via documents") {
    auto doc = write_temp("p4.json", R"({
      "vertices": 4,
      "edges": [[0,1],[1,2],[2,3]],
      "vertex_colors": {"0":0,"1":3,"2":1,"3":2},
      "edge_colors": {"0-1":3,"1-2":2,"2-3":1},
      "bipartition": [[0,2],[1,3]]
    })");
    CHECK(run_cli("color verify " + doc + " --kind graceful --k 1 --d 1").exit_code == 0);
    CHECK(run_cli("color verify " + doc + " --kind harmonious --k 1 --d 1").exit_code == 1);
}

TEST_CASE("topcode command handles set-colored documents") {
    auto r = run_cli("topcode " + fixture("fixC.json"));
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["columns"].size() == 6);
    CHECK(j["columns"][0][1] == nlohmann::json::parse("[2,6,7,11,12,15]"));

    auto intdoc = write_temp("p4_topcode.json", R"({
      "vertices": 4,
      "edges": [[0,1],[1,2],[2,3]],
      "vertex_colors": {"0":0,"1":3,"2":1,"3":2},
      "edge_colors": {"0-1":3,"1-2":2,"2-3":1},
      "bipartition": [[0,2],[1,3]]
    })");
    auto ri = run_cli("topcode " + intdoc);
    CHECK(ri.exit_code == 0);
    auto ji = nlohmann::json::parse(ri.output);
    CHECK(ji["columns"] == nlohmann::json::parse("[[0,3,3],[1,2,3],[1,1,2]]"));
}

TEST_CASE("complement command") {
    auto star = write_temp("star5.json",
                           R"({"ground":[1,2,3,4,5],"edges":[[1,5],[2,5],[3,5],[4,5],[1,2,3,4]]})");
    auto r = run_cli("complement " + star);
    CHECK(r.exit_code == 0);
    auto verify = run_cli("verify " + write_temp("co.json", r.output) + " --strict");
    CHECK(verify.exit_code == 1);  // the complement fails Intersection at {5}
}
