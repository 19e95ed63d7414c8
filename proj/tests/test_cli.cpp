// End-to-end checks of the command-line tool: exit code contract, file
// round-trips, and manifest determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "secant/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef SECANT_CLI_PATH
#define SECANT_CLI_PATH "secant"
#endif

namespace {

struct Run {
    int exit_code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(SECANT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_path(const std::string& name) {
    return std::string("cli_scratch_") + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("generate: set counts and exit codes") {
    auto r = run_cli("generate --family veronese --m 3 --d 4 --output " + tmp_path("v34.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("15 sets") != std::string::npos);

    r = run_cli("generate --family segre --d 6 --m 2 --reduced --output " + tmp_path("s62.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("64 sets") != std::string::npos);

    r = run_cli("generate --family grassmann --m 4 --d 2 --output " + tmp_path("g42.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("6 sets") != std::string::npos);

    CHECK(run_cli("generate --family veronese --m 1 --d 4").exit_code == 2);
    CHECK(run_cli("generate --family nosuch --m 2 --d 2").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("eval: results, perturbation, and the voronoi/config mismatch code") {
    run_cli("generate --family binary-forms --d 3 --output " + tmp_path("bf3.json"));
    std::ofstream(tmp_path("w2.json"))
        << R"({"sites": [["1/2","5/2"],["5/2","1/2"]]})";
    auto r = run_cli("eval --problem voronoi --config " + tmp_path("bf3.json") + " --witness " +
                     tmp_path("w2.json") + " --output " + tmp_path("res.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("total 4") != std::string::npos);
    const auto res = secant::io::result_from_json(
        secant::io::load_json_file(tmp_path("res.json")));
    CHECK(res.total == 4);

    // voronoi on non-singleton sets is a semantic mismatch
    r = run_cli("eval --problem voronoi --config " + tmp_path("g42.json") + " --witness " +
                tmp_path("w2.json"));
    CHECK(r.exit_code == 3);

    // parse failures
    CHECK(run_cli("eval --problem voronoi --config missing.json --witness " + tmp_path("w2.json"))
              .exit_code == 2);

    // corner witness on the quadratic Veronese surfaces needs --perturb for 6
    run_cli("generate --family veronese --m 3 --d 2 --output " + tmp_path("v32.json"));
    std::ofstream(tmp_path("corners.json"))
        << R"({"sites": [[2,0,0],[0,2,0],[0,0,2]]})";
    r = run_cli("eval --problem voronoi --config " + tmp_path("v32.json") + " --witness " +
                tmp_path("corners.json"));
    CHECK(r.out.find("total 3") != std::string::npos);  // three corner cells, ties elsewhere
    r = run_cli("eval --problem voronoi --perturb --config " + tmp_path("v32.json") +
                " --witness " + tmp_path("corners.json"));
    CHECK(r.out.find("total 6") != std::string::npos);
}

TEST_CASE("eval accepts a Gram file and emits diagnostics") {
    std::ofstream(tmp_path("gram2.json")) << R"({"matrix": [[2,1],[1,2]]})";
    auto r = run_cli("eval --problem voronoi --config " + tmp_path("bf3.json") + " --witness " +
                     tmp_path("w2.json") + " --gram " + tmp_path("gram2.json") +
                     " --diagnostics --output " + tmp_path("resg.json"));
    CHECK(r.exit_code == 0);
    const auto j = secant::io::load_json_file(tmp_path("resg.json"));
    CHECK(j.contains("minima"));

    std::ofstream(tmp_path("badgram.json")) << R"({"matrix": [[0,0],[0,1]]})";
    CHECK(run_cli("eval --problem voronoi --config " + tmp_path("bf3.json") + " --witness " +
                  tmp_path("w2.json") + " --gram " + tmp_path("badgram.json"))
              .exit_code == 2);
}

TEST_CASE("search and oracle run end to end") {
    auto r = run_cli("search --problem voronoi --config " + tmp_path("bf3.json") +
                     " --k 2 --steps 150 --restarts 2 --seed 7 --output " +
                     tmp_path("srch.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("best total 4") != std::string::npos);

    r = run_cli("oracle --family veronese --m 3 --d 2 --k 2 --trials 2 --output " +
                tmp_path("orc.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("reported dim 5") != std::string::npos);
    CHECK(r.out.find("below expected") != std::string::npos);
}

TEST_CASE("reproduce: pass and failure exit codes") {
    CHECK(run_cli("reproduce segre-p1-6").exit_code == 0);
    CHECK(run_cli("reproduce nosuch").exit_code == 2);
}

TEST_CASE("render: golden bytes for the quadratic plane figure") {
    std::ofstream(tmp_path("w32.json"))
        << R"({"sites": [["1/3","1/3","4/3"],["3/2","1/2",0],[0,2,0]]})";
    auto r = run_cli("render --config " + tmp_path("v32.json") + " --witness " +
                     tmp_path("w32.json") + " --output " + tmp_path("fig.svg"));
    CHECK(r.exit_code == 0);
    CHECK(slurp(tmp_path("fig.svg")) == slurp(std::string(SECANT_GOLDEN_DIR) +
                                              "/veronese_d2_k3.svg"));

    // unsupported projection
    CHECK(run_cli("render --config " + tmp_path("g42.json") + " --witness " + tmp_path("w2.json"))
              .exit_code == 3);
}

TEST_CASE("manifest: identical inputs and seed give byte-identical outputs") {
    const std::string cmd = "search --problem voronoi --config " + tmp_path("bf3.json") +
                            " --k 2 --steps 80 --seed 11 --output ";
    run_cli(cmd + tmp_path("a.json"));
    run_cli(cmd + tmp_path("b.json"));
    CHECK(slurp(tmp_path("a.json")) == slurp(tmp_path("b.json")));
    // manifests differ only in the named output file
    const auto ma = secant::io::load_json_file(tmp_path("a.json") + ".manifest.json");
    const auto mb = secant::io::load_json_file(tmp_path("b.json") + ".manifest.json");
    CHECK(ma.at("inputs") == mb.at("inputs"));
    CHECK(ma.at("seed") == mb.at("seed"));
}
