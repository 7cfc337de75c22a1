#include <map>
#include <sstream>
#include <string>
#include <doctest.h>

#include "aclab/scenario.hpp"

using namespace aclab;

namespace {

std::string error_of(const std::string& text)
{
    try {
        parse_scenario(text, "cfg.yaml");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

const char* kSmallDisc = R"(schema_version: 1
name: small
domain: {type: disc}
field: {type: constant, beta: 3.0}
resolution:
  radial_n: 512
  fem_levels: [2, 3]
  toeplitz_M: [32, 64]
routes: [radial, fem, toeplitz, index]
seed: 3
)";

} // namespace

TEST_CASE("a valid configuration parses")
{
    const Scenario s = parse_scenario(kSmallDisc);
    CHECK(s.name == "small");
    CHECK(s.field.beta() == 3.0);
    CHECK(s.routes.size() == 4);
    CHECK(s.resolution.fem_levels == std::vector<int>{2, 3});
    CHECK(s.seed == 3);
}

TEST_CASE("configuration errors carry line and column")
{
    CHECK(error_of("schema_version: 1\ndomain: {type: disc}\nfield: {type: constant, beta: 1}\nroutes: []\n")
              .rfind("cfg.yaml:4:", 0) == 0);
    CHECK(error_of("schema_version: 1\ndomain: {type: disc}\nfield: {type: constant, beta: 1}\nroutes: []\n")
              .find("route") != std::string::npos);
    const std::string unknown =
        error_of("schema_version: 1\ndomain: {type: disc}\nfield: {type: constant, beta: 1}\ncolour: red\nroutes: [fem]\n");
    CHECK(unknown.rfind("cfg.yaml:4:1:", 0) == 0);
    CHECK(unknown.find("colour") != std::string::npos);
    CHECK(error_of("schema_version: 2\ndomain: {type: disc}\nfield: {type: constant, beta: 1}\nroutes: [fem]\n")
              .rfind("cfg.yaml:1:", 0) == 0);
    CHECK(error_of("schema_version: 1\ndomain: {type: disc}\nfield: {type: constant, beta: x}\nroutes: [fem]\n")
              .rfind("cfg.yaml:3:", 0) == 0);
    CHECK(error_of("schema_version: 1\ndomain: {type: square}\nfield: {type: constant, beta: 1}\nroutes: [fem]\n")
              .rfind("cfg.yaml:2:", 0) == 0);
    CHECK(!error_of("schema_version: 1\ndomain: {type: disc}\nfield: {type: constant, beta: 1\n").empty());
}

TEST_CASE("routes must fit the domain")
{
    const std::string toeplitz_annulus = error_of(
        "schema_version: 1\ndomain: {type: annulus, r_in: 0.5, r_out: 1}\nfield: {type: constant, beta: 8}\n"
        "routes: [fem, toeplitz]\n");
    CHECK(toeplitz_annulus.rfind("cfg.yaml:4:", 0) == 0);
    CHECK(toeplitz_annulus.find("toeplitz") != std::string::npos);
    CHECK(!error_of("schema_version: 1\ndomain: {type: mapped_disc, coefficients: [0.2]}\n"
                    "field: {type: constant, beta: 3}\nroutes: [radial]\n")
               .empty());
    CHECK(!error_of("schema_version: 1\ndomain: {type: disc}\nfield: {type: linear, by: -4}\nroutes: [radial]\n").empty());
    CHECK(!error_of("schema_version: 1\ndomain: {type: disc}\n"
                    "field: {type: gaussian, amplitude: -4, nonnegative: true}\nroutes: [fem]\n")
               .empty());
}

TEST_CASE("full run on a small disc: all routes agree and the report is deterministic")
{
    const Scenario s = parse_scenario(kSmallDisc);
    const Report a = run(s);
    CHECK(a.bound == 2);
    REQUIRE(a.radial);
    CHECK(a.radial->count_negative == 2);
    REQUIRE(!a.fem.empty());
    CHECK(a.fem.back().count.count_negative == 2);
    CHECK(a.fem_monotone);
    REQUIRE(!a.toeplitz.empty());
    CHECK(a.toeplitz.back().count.count_negative == 2);
    CHECK(a.toeplitz.back().count.count_negative <= a.fem.back().count.count_negative);
    CHECK(a.aps_index == 2);
    CHECK(a.verdict == "OK");
    CHECK(a.checks_failed.empty());
    const Report b = run(s);
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("figure data: branches cross zero as the flux passes integers")
{
    std::ostringstream out;
    figure1_data(out, {0.0, 1.9, 2.1, 6.0}, 1.0, -1, 3, 1, 1024);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "beta,m,branch,lambda");
    std::map<std::pair<double, int>, double> lowest;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(row, cell, ',')) v.push_back(std::stod(cell));
        lowest[{v[0], static_cast<int>(v[1])}] = v[3];
    }
    for (int m = -1; m <= 3; ++m) CHECK(lowest[{0.0, m}] >= -1e-12);
    CHECK(lowest[{1.9, 1}] > 0.0);
    CHECK(lowest[{2.1, 1}] < 0.0);
    int below = 0;
    for (int m = -1; m <= 3; ++m) below += lowest[{6.0, m}] < 0.0;
    CHECK(below == 3);
}
