#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hhfrac/cli.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hhfrac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = hhfrac::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("eval prints both variants", "[cli]") {
    const auto r = run({"eval", "--theorem", "T1", "--f", "power:1", "--a", "0", "--b", "1",
                        "--s", "1", "--alpha", "2", "--variant", "both"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("as-stated: violated"));
    CHECK_THAT(r.out, ContainsSubstring("rhs = 0.25"));
    CHECK_THAT(r.out, ContainsSubstring("proof-consistent: equality-within-tol"));
}

TEST_CASE("strict mode turns as-stated violations into exit 1", "[cli]") {
    const std::vector<std::string> cell{"eval", "--theorem", "T1", "--f",     "power:1", "--a", "0",
                                        "--b",  "1",         "--s", "1",      "--alpha", "2"};
    auto strict = cell;
    strict.push_back("--strict");
    CHECK(run(strict).code == 1);
    strict.push_back("--variant");
    strict.push_back("proof-consistent");
    CHECK(run(strict).code == 1);
    CHECK(run({"eval", "--theorem", "E1", "--f", "power:2", "--a", "0", "--b", "1", "--strict"})
              .code == 0);
}

TEST_CASE("usage and runtime errors exit 2", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"eval", "--bogus"}).code == 2);
    CHECK(run({"eval", "--theorem", "T1", "--f", "power:1", "--a", "0", "--b", "1"}).code == 2);
    const auto bad_f = run({"eval", "--theorem", "E1", "--f", "sine:1", "--a", "0", "--b", "1"});
    CHECK(bad_f.code == 2);
    CHECK_THAT(bad_f.err, ContainsSubstring("unknown function family"));
    CHECK(run({"eval", "--theorem", "E1", "--f", "power:2", "--a", "1", "--b", "0"}).code == 2);
    CHECK(run({"sweep", "--config", "/nonexistent.json"}).code == 2);
    CHECK(run({"convexity", "--f", "power:2", "--class", "s-convex"}).code == 2);
    CHECK(run({"convexity", "--f", "power:2", "--class", "round"}).code == 2);
}

TEST_CASE("help exits 0", "[cli]") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("sweep"));
    CHECK(run({"eval", "--help"}).code == 0);
}

TEST_CASE("convexity subcommand", "[cli]") {
    const auto ok = run({"convexity", "--f", "power:0.5", "--class", "s-convex", "--s", "0.5",
                         "--a", "0", "--b", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "holds (grid 33³ + 10000 random)\n");
    const auto bad = run({"convexity", "--f", "quadratic:1,0,1", "--class", "m-convex", "--m",
                          "0.5", "--a", "0", "--b", "1"});
    CHECK(bad.code == 0);
    CHECK_THAT(bad.out, ContainsSubstring("violated at x="));
}

TEST_CASE("sweep writes reports and a replayable summary", "[cli]") {
    const auto cfg_path = temp_path("hhfrac_cli_sweep.json");
    const auto json_path = temp_path("hhfrac_cli_report.json");
    const auto csv_path = temp_path("hhfrac_cli_report.csv");
    std::ofstream(cfg_path) << R"({
        "theorems": ["T1"],
        "functions": ["power:1", "power:2"],
        "alpha_grid": [0.5, 2],
        "s_grid": [0.5, 1],
        "intervals": [[0, 1]]
    })";
    const auto r = run({"sweep", "--config", cfg_path, "--out", json_path, "--csv", csv_path});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("T1       as-stated"));
    const auto report = nlohmann::json::parse(slurp(json_path));
    CHECK(report["reports"].size() == 16);
    CHECK_THAT(slurp(csv_path), ContainsSubstring("theorem,variant,f,a,b"));
    CHECK(run({"sweep", "--config", cfg_path, "--strict"}).code == 1);

    // Every violated as-stated cell replays through eval with a negative margin.
    for (const auto& rep : report["reports"]) {
        if (rep["verdict"] != "violated") continue;
        const auto& in = rep["inputs"];
        const auto replay =
            run({"eval", "--theorem", rep["theorem"].get<std::string>(), "--f",
                 rep["f"].get<std::string>(), "--a", std::to_string(in["a"].get<double>()), "--b",
                 std::to_string(in["b"].get<double>()), "--s",
                 hhfrac::detail::format_real(in["s"].get<double>()), "--alpha",
                 hhfrac::detail::format_real(in["alpha"].get<double>()), "--variant",
                 rep["variant"].get<std::string>(), "--strict"});
        CHECK(replay.code == 1);
        CHECK_THAT(replay.out, ContainsSubstring(": violated"));
    }
}

TEST_CASE("sharpness subcommand", "[cli]") {
    const auto r = run({"sharpness", "--theorem", "e13", "--f", "power:s", "--s", "0.25,0.5,0.75"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("minimum rhs margin"));
    CHECK(run({"sharpness", "--theorem", "L1", "--f", "power:2", "--alpha", "1"}).code == 2);
}
