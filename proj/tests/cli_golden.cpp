// Golden-file checks for the command-line tool: byte-stable output across
// runs, schema-valid JSON, and the documented exit codes.
#include <doctest.h>

#include "logint/basis.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LOGINT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("byte-stable output across runs") {
    for (const std::string args :
         {"list", "show 4.231.7", "verify 4.231.1", "list --json", "constants",
          "reduce \"x*ln(x)/(x+1)\" --upper 1 --explain"}) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}

TEST_CASE("verify output format and exit code") {
    const auto r = run_cli("verify 4.231.1 --tol 1e-10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS 4.231.1") != std::string::npos);
    CHECK(r.out.find("closed=-0.822467033424113") != std::string::npos);
}

TEST_CASE("verify --all --json is one schema-valid document") {
    const auto r = run_cli("verify --all --json --tol 1e-10");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n_fail"] == 0);
    CHECK(doc["n_errata"] == 5);
    REQUIRE(doc["reports"].is_array());
    for (const auto& rep : doc["reports"]) {
        CHECK(rep["pass"] == true);
        CHECK(rep["id"].is_string());
        CHECK(rep["closed"].is_number());
    }
}

TEST_CASE("list --json validates against the catalog schema") {
    const auto r = run_cli("list --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.contains("entries"));
    for (const auto& e : doc["entries"]) {
        REQUIRE(e.contains("id"));
        REQUIRE(e.contains("description"));
        REQUIRE(e.contains("params"));
        REQUIRE(e["closed_form"].contains("atoms"));
        REQUIRE(e.contains("printed_differs"));
        REQUIRE(e.contains("erratum"));
    }
}

TEST_CASE("eval matches the library bit for bit") {
    const auto r = run_cli("eval 4.231.7 --param n=1 --param a=3 --param b=2 --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const double want = logint::basis::log_quad_halfline_scaled(1, 3.0, 2.0);
    CHECK(doc["value"].get<double>() == want);
}

TEST_CASE("reduce smoke value") {
    const auto r = run_cli("reduce \"x*ln(x)/(x+1)\" --upper 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-0.177532966575887") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("show no.such.entry").exit_code == 2);          // unknown id
    CHECK(run_cli("reduce \"ln(x)/(x-1)\" --upper 1").exit_code == 2);  // bad pole
    CHECK(run_cli("frobnicate").exit_code == 2);                  // unknown subcommand
    CHECK(run_cli("quad \"ln(x)/(x+1)\" --upper 1 --tol 1e-30").exit_code == 3);
    CHECK(run_cli("verify 4.231.1 --tol 1e-30").exit_code == 1);  // verification failure
    CHECK(run_cli("constants").exit_code == 0);
}

TEST_SUITE_END();
