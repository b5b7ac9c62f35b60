#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "dikroma/coloring.hpp"
#include "dikroma/digraph.hpp"
#include "dikroma/formats.hpp"
#include "fixtures.hpp"

using namespace dikroma;
using nlohmann::json;

namespace {

#ifndef DIKROMA_BIN_PATH
#error "build must define DIKROMA_BIN_PATH"
#endif

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run the CLI with stderr folded into the captured stream so error text is
// checkable too
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DIKROMA_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/dikroma_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("cli params on an edge list file") {
    std::string path = write_temp("c3.txt", "3 3\n0 1\n1 2\n2 0\n");
    RunResult r = run_cli("params " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("dc") == 2);
    CHECK(j.at("dg") == 2);
    CHECK(j.at("dac") == 2);
    CHECK(!j.contains("dco"));
}

TEST_CASE("cli params accepts inline digraph6 and computes the dual") {
    RunResult r = run_cli("params '&A?' --with-dco");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("n") == 2);
    CHECK(j.at("dc") == 1);
    CHECK(j.at("dco") == 1);
}

TEST_CASE("cli params reads stdin") {
    std::string path = write_temp("p2.txt", "2 1\n0 1\n");
    RunResult r = run_cli("params - < " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("dc") == 1);
}

TEST_CASE("cli params text format") {
    std::string path = write_temp("c3b.txt", "3 3\n0 1\n1 2\n2 0\n");
    RunResult r = run_cli("params " + path + " --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("dc 2") != std::string::npos);
    CHECK(r.out.find("dac 2") != std::string::npos);
}

TEST_CASE("cli witnesses re-validate with the library predicates") {
    std::string path = write_temp("p4.txt", "4 6\n0 1\n1 0\n1 2\n2 1\n2 3\n3 2\n");
    RunResult r = run_cli("params " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    Digraph d = fixtures::symmetric_path4();

    auto as_coloring = [&](const json& w) {
        return Coloring(w.at("colors").get<std::vector<int>>(), w.at("k").get<int>());
    };
    Coloring dc_w = as_coloring(j.at("witnesses").at("dc"));
    CHECK(dc_w.k == j.at("dc"));
    CHECK(is_acyclic_coloring(d, dc_w));
    Coloring dac_w = as_coloring(j.at("witnesses").at("dac"));
    CHECK(is_acyclic_coloring(d, dac_w));
    CHECK(is_complete_coloring(d, dac_w, PairMode::ordered));
    Coloring dg_w = as_coloring(j.at("witnesses").at("dg"));
    CHECK(is_digrundy_coloring(d, dg_w));
}

TEST_CASE("cli greedy follows the given order") {
    std::string path = write_temp("c3c.txt", "3 3\n0 1\n1 2\n2 0\n");
    RunResult r = run_cli("greedy " + path + " --order 0,1,2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("k") == 2);
    CHECK(j.at("colors") == json::array({1, 1, 2}));
}

TEST_CASE("cli parsimonious beats first-fit on the branching instance") {
    std::string path = write_temp("branch.txt", "4 6\n0 1\n1 0\n1 3\n3 1\n2 3\n3 2\n");
    RunResult greedy = run_cli("greedy " + path + " --order 0,1,2,3");
    REQUIRE(greedy.exit_code == 0);
    CHECK(json::parse(greedy.out).at("k") == 3);

    RunResult pars = run_cli("parsimonious " + path + " --order 0,1,2,3");
    REQUIRE(pars.exit_code == 0);
    json j = json::parse(pars.out);
    CHECK(j.at("k") == 2);
    CHECK(j.at("trace") == json::array({1, 2, 2, 1}));
}

TEST_CASE("cli interpolation") {
    std::string path = write_temp("p4b.txt", "4 6\n0 1\n1 0\n1 2\n2 1\n2 3\n3 2\n");
    RunResult r = run_cli("interpolate " + path + " --kind greedy");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("lo") == 2);
    CHECK(j.at("hi") == 3);
    CHECK(j.at("missing").empty());
    CHECK(j.at("witnesses").contains("2"));
    CHECK(j.at("witnesses").contains("3"));
}

TEST_CASE("cli sweep json and csv") {
    RunResult r = run_cli("sweep --n 2 --exhaustive");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("digraphs") == 4);
    CHECK(j.at("violations").empty());

    RunResult csv = run_cli("sweep --n 2 --exhaustive --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("digraph6,", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
}

TEST_CASE("cli sampled sweep with explicit options") {
    RunResult r = run_cli("sweep --n 6 --samples 8 --p 0.2 --p 0.8 --seed 5 "
                          "--check ng-dc --check chain");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("digraphs") == 16);
    CHECK(j.at("violations").empty());
}

TEST_CASE("cli witness hunts the extremal pair") {
    RunResult r = run_cli("witness --n 2 --check ng-dc");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(!j.empty());
    CHECK(j.front().at("sum") == 3);

    // --target is an accepted alias
    RunResult alias = run_cli("witness --n 2 --target ng-dc");
    CHECK(alias.exit_code == 0);
}

TEST_CASE("cli input errors exit 2") {
    std::string path = write_temp("bad.txt", "not a digraph\n");
    CHECK(run_cli("params " + path).exit_code == 2);
    CHECK(run_cli("params /nonexistent/file").exit_code == 2);
    CHECK(run_cli("params '&A'").exit_code == 2);

    std::string ok = write_temp("ok2.txt", "2 1\n0 1\n");
    CHECK(run_cli("greedy " + ok + " --order 0").exit_code == 2);       // short order
    CHECK(run_cli("greedy " + ok + " --order 0,0").exit_code == 2);     // not a permutation
    CHECK(run_cli("greedy " + ok + " --order 0,x").exit_code == 2);     // not a number
    CHECK(run_cli("sweep --n 3 --exhaustive --check bogus").exit_code == 2);
    CHECK(run_cli("interpolate " + ok + " --kind bogus").exit_code == 2);
    CHECK(run_cli("params").exit_code == 2);                            // missing input
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("cli cap refusals exit 3") {
    CHECK(run_cli("sweep --n 6 --exhaustive").exit_code == 3);
    std::string big = write_temp("big.txt", "17 0\n");
    CHECK(run_cli("params " + big).exit_code == 3);
    CHECK(run_cli("parsimonious " + big).exit_code == 3);

    // the documented time budget knob is honored end to end: four directed
    // triangles plus a complete digon block stall the depth-3 search
    std::string slow_path = [] {
        std::string text = "16 24\n";
        for (int t = 0; t < 4; ++t) {
            int b = 3 * t;
            text += std::to_string(b) + " " + std::to_string(b + 1) + "\n";
            text += std::to_string(b + 1) + " " + std::to_string(b + 2) + "\n";
            text += std::to_string(b + 2) + " " + std::to_string(b) + "\n";
        }
        for (int u = 12; u < 16; ++u)
            for (int v = 12; v < 16; ++v)
                if (u != v) text += std::to_string(u) + " " + std::to_string(v) + "\n";
        return write_temp("slow.txt", text);
    }();
    setenv("DIKROMA_TIME_BUDGET_MS", "1", 1);
    CHECK(run_cli("params " + slow_path).exit_code == 3);
    unsetenv("DIKROMA_TIME_BUDGET_MS");
}

TEST_CASE("cli help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("params --help").exit_code == 0);
}
