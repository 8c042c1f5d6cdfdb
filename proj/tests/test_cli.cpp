// Integration tests for the command-line tool: exit codes, report content,
// and byte-level determinism. The binary and data locations come in as
// compile definitions from the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef PICURVE_BIN
#error "PICURVE_BIN must be defined"
#endif
#ifndef TEST_DATA_DIR
#error "TEST_DATA_DIR must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    char tmpl[] = "/tmp/picurve_cli_XXXXXX";
    int fd = mkstemp(tmpl);
    REQUIRE(fd >= 0);
    close(fd);
    std::string out_path = tmpl;
    std::string cmd = std::string(PICURVE_BIN) + " " + args + " --output " + out_path;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    std::remove(out_path.c_str());
    return r;
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("group-info reports order and generator count") {
    RunResult r = run("group-info --input " + data("s3_group.json"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("order") == 6);
    CHECK(j.at("n") == 2);
    CHECK(j.at("solvable") == true);
    CHECK(j.at("derived_series_orders") == nlohmann::json({6, 3, 1}));

    RunResult c3 = run("group-info --input " + data("c3_group.json"));
    REQUIRE(c3.exit_code == 0);
    auto jc = nlohmann::json::parse(c3.output);
    CHECK(jc.at("order") == 3);
    CHECK(jc.at("n") == 1);
}

TEST_CASE("cohomology subcommand") {
    RunResult r = run("cohomology --input " + data("sign_module.json"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("h1") == 0);
    CHECK(j.at("h2") == 0);
    CHECK(j.at("fixed_dim") == 0);
    CHECK(j.at("irreducible") == true);
}

TEST_CASE("realizability decisions and scope exit code") {
    RunResult line = run("realizability --input " + data("realizability_line.json"));
    REQUIRE(line.exit_code == 0);
    auto j = nlohmann::json::parse(line.output);
    CHECK(j.at("realizable") == false);
    CHECK(j.at("bound") == 0);

    RunResult cyc = run("realizability --input " + data("realizability_cyclic.json"));
    REQUIRE(cyc.exit_code == 0);
    CHECK(nlohmann::json::parse(cyc.output).at("realizable") == true);

    RunResult scope = run("realizability --input " + data("realizability_scope.json"));
    CHECK(scope.exit_code == 3);  // |G| divisible by p
}

TEST_CASE("tower subcommand") {
    RunResult triv = run("tower --input " + data("tower_trivial.json"));
    REQUIRE(triv.exit_code == 0);
    auto jt = nlohmann::json::parse(triv.output);
    CHECK(jt.at("tower_layers").empty());
    CHECK(jt.at("verdict") == true);

    RunResult s3 = run("tower --input " + data("tower_s3.json"));
    REQUIRE(s3.exit_code == 0);
    auto j = nlohmann::json::parse(s3.output);
    CHECK(j.at("verdict") == false);
    CHECK(j.at("n_G") == 2);
    REQUIRE(j.at("tower_layers").size() == 2);
    CHECK(j.at("tower_layers")[0].at("order") == 3);
    CHECK(j.at("self_check").at("all_pass") == true);
}

TEST_CASE("gos subcommand") {
    RunResult r = run("gos --input " + data("gos_affine.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output).at("chi") == 0);
}

TEST_CASE("malformed and invalid input fail with nonzero exit") {
    CHECK(run("group-info --input " + data("malformed.json")).exit_code == 2);
    CHECK(run("group-info --input " + data("unknown_field.json")).exit_code == 2);
    CHECK(run("group-info --input " + data("does_not_exist.json")).exit_code == 2);
}

TEST_CASE("identical input gives byte-identical reports") {
    for (std::string args :
         {"group-info --input " + data("s3_group.json"),
          "tower --input " + data("tower_s3.json"),
          "cohomology --input " + data("sign_module.json")}) {
        RunResult a = run(args);
        RunResult b = run(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}
