// End-to-end checks of the built binary: JSON shape, spec'd example outputs,
// determinism, and error objects.

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SYMGW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("hurwitz subcommand with both oracles") {
    auto r = run_cli("hurwitz --lambda 2 --rho 2 --genus 1 --oracle both");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("value") == "1/2");
    CHECK(j.at("agreement") == true);

    auto r2 = run_cli("hurwitz --lambda 2,1 --rho 3 --genus 0 --oracle both");
    REQUIRE(r2.exit_code == 0);
    CHECK(json::parse(r2.out).at("value") == "1");
}

TEST_CASE("invariant subcommand matches the documented example") {
    auto r = run_cli(
        "invariant --n 2 --r 1 --mu1 \"2(E1)\" --mu2 \"2(E1)\" --a 0 --beta 2 --formula both");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("value") == "2*t1+2*t2");
    CHECK(j.at("audit") == "EQUAL");
    CHECK(j.at("t_sum_multiplicity") == 1);
}

TEST_CASE("invariant disconnected formula") {
    auto r = run_cli(
        "invariant --n 2 --r 1 --mu1 \"2(E1)\" --mu2 \"2(E1)\" --a 0 --beta 1 "
        "--formula disconnected");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("value") == "4*t1+4*t2");
}

TEST_CASE("pairing subcommand") {
    auto r = run_cli("pairing --n 2 --r 1 --w1 \"1(E1),1(E1)\" --w2 \"1(E1),1(E1)\"");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("value") == "4");
}

TEST_CASE("series subcommand is flagged partial without degree-0 data") {
    auto r = run_cli("series --n 3 --r 1 --mu1 \"3(E1)\" --mu2 \"3(E1)\" --theta two "
                     "--u-order 1 --s-order 2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("partial") == true);
    CHECK(j.at("coefficients").size() > 0);
}

TEST_CASE("wdvv subcommand solves the synthetic fixture and verifies") {
    auto r = run_cli("wdvv --synthetic --s-order 2 --verify");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("verified") == true);
    CHECK(j.at("violations").empty());
    CHECK(j.at("entries").size() == 220);
}

TEST_CASE("wdvv seed round-trips through the JSON schema") {
    std::string path = "symgw_cli_test_seed.json";
    auto r = run_cli("wdvv --synthetic --s-order 2 --emit-seed " + path);
    REQUIRE(r.exit_code == 0);
    auto r2 = run_cli("wdvv --input " + path + " --verify");
    REQUIRE(r2.exit_code == 0);
    json j2 = json::parse(r2.out);
    CHECK(j2.at("verified") == true);
    CHECK(json::parse(r.out).at("entries") == j2.at("entries"));
    std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
    std::string args = "invariant --n 3 --r 2 --mu1 \"2(E1),1(E1)\" --mu2 \"3(E1)\" "
                       "--a 1 --beta 1,0 --formula both";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("errors are machine-readable and nonzero") {
    auto r = run_cli("invariant --n 2 --r 1 --mu1 \"2)E1(\" --mu2 \"2(E1)\" --a 0 --beta 1");
    CHECK(r.exit_code != 0);
    json j = json::parse(r.out);
    CHECK(j.contains("error"));
    CHECK(j.at("error").contains("message"));

    auto r2 = run_cli("hurwitz --lambda 2,1 --rho 2,1 --genus 0 --oracle gjv");
    CHECK(r2.exit_code != 0);
    CHECK(json::parse(r2.out).at("error").at("type") == "invalid_argument");

    auto r3 = run_cli("nonsense");
    CHECK(r3.exit_code != 0);
}

TEST_CASE("check subcommand runs the fast suites") {
    auto r = run_cli("check --suite cartan");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("pass") == true);
    for (auto& s : j.at("suites")) CHECK(s.at("pass") == true);
}
