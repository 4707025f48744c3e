#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "stabdiv/cli.hpp"

using namespace stabdiv;
using nlohmann::json;

TEST_CASE("divide subcommand mirrors the worked example") {
    CliResult r = run_cli_capture({"divide", "--weights", "1,1", "--gens", "x", "--h", "x^2+x*y"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["quotients"][0] == "x + y");
    CHECK(j["remainder"] == "0");
}

TEST_CASE("norm subcommand emits exact rationals") {
    CliResult r = run_cli_capture({"norm", "--d", "2", "--t", "-2", "--poly", "x*y"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["norm_sq"] == "1/2");

    r = run_cli_capture({"norm", "--d", "2", "--t", "0", "--poly", "1+x", "--check-equivalence",
                         "--c-ratio-max", "4"});
    REQUIRE(r.exit_code == 0);
    j = json::parse(r.output);
    CHECK(j["equivalence"]["lower_ok"] == true);
    CHECK(j["equivalence"]["upper_ok"] == true);
    CHECK(j["c_ratio"][2]["c"] == "1/6");
}

TEST_CASE("counterexample subcommand reports the exact table") {
    CliResult r = run_cli_capture({"counterexample", "--t", "-2", "--n-max", "10"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["rows"][3]["n"] == 4);
    CHECK(j["rows"][3]["ratio_sq"] == "6");
    CHECK(j["verdict"] == "growing");

    // exit 3 when stability was expected
    r = run_cli_capture({"counterexample", "--t", "-2", "--n-max", "10", "--expect-stable"});
    CHECK(r.exit_code == 3);

    // the repaired basis is stable
    r = run_cli_capture(
        {"counterexample", "--t", "-2", "--n-max", "10", "--repaired", "--expect-stable"});
    CHECK(r.exit_code == 0);
    j = json::parse(r.output);
    CHECK(j["rows"][0]["ratio_sq"] == "1");
}

TEST_CASE("groebner subcommand") {
    CliResult r = run_cli_capture({"groebner", "--weights", "1,1", "--gens", "x^2+y^2", "--gens",
                                   "x*y", "--equalize"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["basis"].size() == 3);
    CHECK(j["staircase_codimension"] == 4);
    CHECK(j["quasi_homogeneous"] == true);
    CHECK(j["equalized"].size() >= 3);
}

TEST_CASE("beurling subcommand") {
    CliResult r = run_cli_capture({"beurling", "--gens", "x^2*y", "--gens", "x*y^2"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["gcd"] == "x*y");
    CHECK(j["cofactor_codimension"] == 1);
}

TEST_CASE("certify subcommand and verdict wiring") {
    CliResult r = run_cli_capture({"certify", "--weights", "1,1", "--t", "-2", "--gens", "x^2",
                                   "--gens", "x*y", "--gens", "y^2", "--q-max", "14", "--samples",
                                   "10", "--expect-stable"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["verdict"] == "bounded-plateau");
    CHECK(j["sup_ratio_sq"] == "1");
}

TEST_CASE("input errors exit with code 1 and point at the problem") {
    CliResult r = run_cli_capture({"divide", "--h", "x^2 + @", "--gens", "x"});
    CHECK(r.exit_code == 1);

    r = run_cli_capture({"norm", "--d", "2", "--t", "-7/2", "--poly", "x"});
    CHECK(r.exit_code == 1);

    r = run_cli_capture({"no-such-command"});
    CHECK(r.exit_code == 1);

    r = run_cli_capture({"certify", "--q-max", "5", "--gens", "x+y^2"});
    CHECK(r.exit_code == 1);  // not quasi-homogeneous under the default weights
}

TEST_CASE("determinism: identical invocations produce identical bytes") {
    std::vector<std::vector<std::string>> invocations = {
        {"certify", "--weights", "2,1", "--t", "-2", "--gens", "x", "--gens", "y^2", "--q-max",
         "16", "--samples", "20", "--seed", "9"},
        {"counterexample", "--t", "0", "--n-max", "8"},
        {"scan-commutators", "--d", "2", "--t", "-2", "--gens", "x", "--p", "3", "--D-list",
         "6,8"},
        {"fang-xia-probe", "--d", "2", "--t", "-2", "--f", "x", "--D", "9", "--samples", "15",
         "--seed", "4"},
        {"angle-check", "--ambient-dim", "14", "--m-dim", "4", "--cos-angle", "0.5", "--samples",
         "50", "--trials", "2", "--seed", "11"},
    };
    for (const auto& args : invocations) {
        CliResult a = run_cli_capture(args);
        CliResult b = run_cli_capture(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}

TEST_CASE("csv output") {
    CliResult r = run_cli_capture({"certify", "--weights", "1,1", "--t", "-2", "--gens", "x^2",
                                   "--gens", "x*y", "--gens", "y^2", "--q-max", "8", "--samples",
                                   "5", "--output", "csv"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("degree,dim,", 0) == 0);
}

TEST_CASE("numerical diagnostics exit with code 2") {
    // an almost-degenerate angle trips the diagnostic, not a crash
    CliResult r = run_cli_capture({"angle-check", "--ambient-dim", "10", "--m-dim", "3",
                                   "--cos-angle", "0.9999999999", "--samples", "5", "--seed",
                                   "1"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("generator files: one polynomial per line, comments skipped") {
    std::string path = "/tmp/stabdiv_gens_test.txt";
    {
        std::ofstream f(path);
        f << "# reference homogeneous basis\n";
        f << "x^2\n\nx*y\n";
        f << "y^2\n";
    }
    CliResult r = run_cli_capture(
        {"certify", "--t", "-2", "--gens-file", path, "--q-max", "8", "--samples", "5"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["params"]["generators"].size() == 3);
    std::remove(path.c_str());
}

TEST_CASE("relative output paths resolve against the output directory variable") {
    setenv("STABDIV_OUTPUT_DIR", "/tmp", 1);
    CliResult r = run_cli_capture({"norm", "--d", "2", "--t", "-2", "--poly", "x*y", "--out",
                                   "stabdiv_out_test.json"});
    unsetenv("STABDIV_OUTPUT_DIR");
    REQUIRE(r.exit_code == 0);
    std::ifstream f("/tmp/stabdiv_out_test.json");
    REQUIRE(f.good());
    json j = json::parse(f);
    CHECK(j["norm_sq"] == "1/2");
    std::remove("/tmp/stabdiv_out_test.json");
}
