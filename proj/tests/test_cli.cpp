#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "poolkit/constructions.hpp"
#include "poolkit/io.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(POOLKIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path write_fano() {
    auto path = std::filesystem::temp_directory_path() / "poolkit_test_fano.dual";
    std::ofstream f(path, std::ios::binary);
    f << poolkit::format_dual(poolkit::steiner_catalog("S(2,3,7)").blocks);
    return path;
}

}  // namespace

TEST_CASE("bound subcommand") {
    CliResult r = run_cli("bound --v 8 --p 1 --q 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n_max 14\nK_q 5\nT 4\n");

    CliResult r2 = run_cli("bound --v 9 --p 2 --q 0");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == "n_max 12\nt_star 2\n");

    CliResult rj = run_cli("bound --v 8 --p 1 --q 1 --json");
    CHECK(rj.exit_code == 0);
    json doc = json::parse(rj.out);
    CHECK(doc["n_max"] == 14);
    CHECK(doc["K_q"] == "5");
    CHECK(doc["T"] == 4);
}

TEST_CASE("verify subcommand exit codes") {
    auto fano = write_fano();
    CHECK(run_cli("verify --design " + fano.string() + " --p 2 --q 0").exit_code == 0);
    CHECK(run_cli("verify --design " + fano.string() + " --p 2 --q 1").exit_code == 1);
    CHECK(run_cli("verify --design " + fano.string() + " --q 0 --method lemma1").exit_code == 0);
    CHECK(run_cli("verify --design " + fano.string() + " --p 2 --q 0 --method oracle").exit_code == 0);
    CHECK(run_cli("verify --design " + fano.string() + " --p 1 --q 1 --method p1").exit_code == 0);
    CHECK(run_cli("verify --design /nonexistent --p 1 --q 0").exit_code == 2);
    CHECK(run_cli("verify --p 1 --q 0").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);

    CliResult r = run_cli("verify --design " + fano.string() + " --p 2 --q 0");
    CHECK(r.out.find("solution true") != std::string::npos);
}

TEST_CASE("decode subcommand") {
    auto fano = write_fano();
    CliResult r = run_cli("decode --design " + fano.string() +
                          " --p 1 --q 1 --mode failures --outcome 1x01000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("identified 1") != std::string::npos);

    CliResult anom = run_cli("decode --design " + fano.string() +
                             " --p 1 --q 1 --mode errors --outcome 1001000 --strict");
    CHECK(anom.exit_code == 1);
    CHECK(anom.out.find("result anomaly") != std::string::npos);

    CliResult mismatch = run_cli("decode --design " + fano.string() +
                                 " --p 1 --q 1 --mode failures --outcome 101");
    CHECK(mismatch.exit_code == 2);
}

TEST_CASE("construct | verify | decode round trip") {
    auto out = std::filesystem::temp_directory_path() / "poolkit_test_s348.dual";
    CliResult c = run_cli("construct --family steiner --name 'S(3,4,8)' -o " + out.string());
    CHECK(c.exit_code == 0);
    CHECK(run_cli("verify --design " + out.string() + " --p 1 --q 1").exit_code == 0);
    CliResult d = run_cli("decode --design " + out.string() +
                          " --p 1 --q 1 --mode errors --outcome 00000000");
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("identified -") != std::string::npos);

    // byte-stable output across runs
    CliResult a = run_cli("construct --family sperner --v 4");
    CliResult b = run_cli("construct --family sperner --v 4");
    CHECK(a.out == b.out);
    CHECK(a.out.substr(0, 9) == "dual 4 6\n");
}

TEST_CASE("search subcommand") {
    CliResult r = run_cli("search --v 4 --p 1 --q 0 --json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["n_max"] == 6);
    CHECK(doc["certified"] == true);
    CHECK(doc["witness"].size() == 6);
}

TEST_CASE("simulate subcommand is seed-stable") {
    auto fano = write_fano();
    std::string cmd = "simulate --design " + fano.string() +
                      " --p 1 --q 1 --mode failures --trials 200 --seed 5 --json";
    CliResult a = run_cli(cmd);
    CliResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["trials"] == 200);
    CHECK(doc["misidentifications"] == 0);
}
