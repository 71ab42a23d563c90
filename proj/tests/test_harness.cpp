#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hhfrac/harness.hpp"

using namespace hhfrac;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::E1, TheoremId::T1, TheoremId::T2, TheoremId::h1, TheoremId::h2};
    cfg.functions = {"power:0.5", "power:1", "power:2", "exp:1", "quadratic:1,-1,1"};
    cfg.alpha_grid = {0.5, 1.0, 2.0};
    cfg.s_grid = {0.25, 0.75};
    cfg.m_grid = {0.5, 1.0};
    cfg.q_grid = {1.0, 2.0};
    cfg.intervals = {{0.0, 1.0}, {1.0, 3.0}};
    cfg.certifier.random_samples = 500;
    cfg.certifier.grid_n = 9;
    return cfg;
}

}  // namespace

TEST_CASE("config parsing fills defaults and honours overrides", "[harness]") {
    const auto cfg = parse_sweep_config(nlohmann::json::parse(R"({
        "theorems": ["T1", "l1"],
        "alpha_grid": [0.5],
        "intervals": [[0, 2]],
        "tolerance": {"abs": 1e-11},
        "certifier": {"grid_n": 11},
        "seed": 9,
        "workers": 3,
        "output": {"json": "out.json"}
    })"));
    CHECK(cfg.theorems == std::vector<TheoremId>{TheoremId::T1, TheoremId::L1});
    CHECK(cfg.alpha_grid == std::vector<double>{0.5});
    CHECK(cfg.s_grid.size() == 5);
    CHECK(cfg.intervals.front() == Interval(0.0, 2.0));
    CHECK(cfg.eval.quad.abs_tol == 1e-11);
    CHECK(cfg.eval.quad.rel_tol == 1e-12);
    CHECK(cfg.certifier.grid_n == 11);
    CHECK(cfg.seed == 9);
    CHECK(cfg.workers == 3);
    CHECK(cfg.json_out == std::optional<std::string>("out.json"));
    CHECK_FALSE(cfg.csv_out);
}

TEST_CASE("config errors", "[harness]") {
    for (const char* bad : {
             R"({"alpha_grid": []})",
             R"({"s_grid": [0]})",
             R"({"s_grid": [1.5]})",
             R"({"m_grid": [0]})",
             R"({"q_grid": [0.5]})",
             R"({"alpha_grid": [-1]})",
             R"({"intervals": [[1, 0]]})",
             R"({"intervals": [[-1, 1]]})",
             R"({"intervals": [[0, 1, 2]]})",
             R"({"theorems": ["T7"]})",
             R"({"functions": ["sine:1"]})",
             R"({"variants": ["loose"]})",
             R"({"alpha": [1]})",
             R"({"alpha_grid": "1"})",
             R"({"seed": "zero"})",
             R"([1, 2])",
         }) {
        INFO(bad);
        CHECK_THROWS_AS(parse_sweep_config(nlohmann::json::parse(bad)), ConfigError);
    }
    CHECK_THROWS_AS(load_sweep_config("/nonexistent/config.json"), ConfigError);
    const auto path = std::filesystem::temp_directory_path() / "hhfrac_bad_config.json";
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(load_sweep_config(path.string()), ConfigError);
}

TEST_CASE("bundled configs load", "[harness]") {
    const auto cfg = load_sweep_config(std::string(HHFRAC_CONFIG_DIR) + "/default_sweep.json");
    const SweepConfig defaults;
    CHECK(cfg.alpha_grid == defaults.alpha_grid);
    CHECK(cfg.functions == defaults.functions);
    CHECK(cfg.theorems.size() == 9);
    CHECK_NOTHROW(load_sweep_config(std::string(HHFRAC_CONFIG_DIR) + "/small_sweep.json"));
}

TEST_CASE("single-cell sweep on the identity function", "[harness]") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::T1};
    cfg.functions = {"power:1"};
    cfg.s_grid = {1.0};
    cfg.alpha_grid = {1.0};
    cfg.intervals = {{0.0, 1.0}};
    const auto rep = run_sweep(cfg);
    CHECK(rep.stats.cells_total == 1);
    CHECK(rep.stats.cells_evaluated == 1);
    REQUIRE(rep.reports.size() == 2);
    for (const auto& r : rep.reports) {
        CHECK_THAT(r.term("lhs"), WithinAbs(0.5, 1e-15));
        CHECK_THAT(r.term("mid"), WithinAbs(0.5, 1e-12));
        CHECK(r.verdict == Verdict::equality);
    }
}

TEST_CASE("identity sweep over the default grid", "[harness]") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::L1};
    cfg.variants = {BoundVariant::as_stated};
    const auto rep = run_sweep(cfg);
    CHECK(rep.stats.cells_evaluated >= 100);
    CHECK(rep.stats.cells_errored == 0);
    for (const auto& r : rep.reports) {
        INFO(r.f << " alpha = " << *r.inputs.alpha);
        CHECK(*r.residual <= 1e-9);
    }
    CHECK(rep.entry(TheoremId::L1, BoundVariant::as_stated).violated == 0);
}

TEST_CASE("summary counts and worst cells are consistent", "[harness][property]") {
    const auto cfg = small_config();
    const auto rep = run_sweep(cfg);
    CHECK(rep.stats.cells_total ==
          rep.stats.cells_evaluated + rep.stats.cells_skipped + rep.stats.cells_errored);
    CHECK(rep.reports.size() == rep.stats.cells_evaluated * cfg.variants.size());
    std::size_t counted = 0;
    for (const auto& e : rep.summary) {
        counted += e.holds + e.violated + e.equality;
        if (!e.worst_report) continue;
        const auto& w = rep.reports[*e.worst_report];
        CHECK(w.theorem == e.theorem);
        CHECK(w.variant == e.variant);
        const auto again = evaluate(w.theorem, FuncSpec::parse(w.f), w.inputs, w.variant, cfg.eval);
        CHECK(again.worst_margin() == *e.worst_margin);
        if (e.violated > 0) CHECK(*e.worst_margin < 0.0);
    }
    CHECK(counted == rep.reports.size());
}

TEST_CASE("sweep skips cells whose hypotheses fail", "[harness]") {
    const auto rep = run_sweep(small_config());
    bool sqrt_not_convex = false, sqrt_not_mconvex = false;
    for (const auto& s : rep.skipped) {
        CHECK_FALSE(s.error);
        if (s.f == "power:0.5" && s.theorem == TheoremId::E1)
            sqrt_not_convex = s.reason == "f not convex on interval";
        if (s.f == "power:0.5" && s.theorem == TheoremId::h1) sqrt_not_mconvex = true;
    }
    CHECK(sqrt_not_convex);
    CHECK(sqrt_not_mconvex);
}

TEST_CASE("sweep records as-stated violations beyond alpha = 1", "[harness]") {
    const auto rep = run_sweep(small_config());
    CHECK(rep.entry(TheoremId::T1, BoundVariant::as_stated).violated > 0);
    for (auto id : {TheoremId::T1, TheoremId::T2, TheoremId::h1, TheoremId::h2}) {
        INFO(to_string(id));
        CHECK(rep.entry(id, BoundVariant::proof_consistent).violated == 0);
    }
    for (const auto& r : rep.reports) {
        if (r.theorem == TheoremId::T1 && r.verdict == Verdict::violated) {
            CHECK(*r.inputs.alpha > 1.0);
        }
    }
}

TEST_CASE("sweep output is deterministic and independent of worker count", "[harness][property]") {
    auto cfg = small_config();
    const auto serial = to_json_text(run_sweep(cfg));
    CHECK(serial == to_json_text(run_sweep(cfg)));
    cfg.workers = 4;
    CHECK(serial == to_json_text(run_sweep(cfg)));
    cfg.workers = 0;
    CHECK(serial == to_json_text(run_sweep(cfg)));
}

TEST_CASE("JSON and CSV reports mirror the sweep", "[harness]") {
    const auto rep = run_sweep(small_config());
    const auto j = nlohmann::json::parse(to_json_text(rep));
    CHECK(j["reports"].size() == rep.reports.size());
    CHECK(j["skipped"].size() == rep.skipped.size());
    CHECK(j["summary"].size() == rep.summary.size());
    CHECK_FALSE(j["stats"].contains("wall_seconds"));

    const auto csv = to_csv(rep);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("theorem,variant,f,a,b,alpha,s,m,q,lhs,mid,rhs,margin_1,margin_2,verdict", 0) == 0);
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == rep.reports.size());
    CHECK_THAT(csv, ContainsSubstring("\"quadratic:1,-1,1\""));
}

TEST_CASE("report files are written", "[harness]") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "hhfrac_report_test.json").string();
    write_text_file(path, "{}\n");
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text == "{}\n");
    CHECK_THROWS(write_text_file("/nonexistent/dir/report.json", "x"));
}

TEST_CASE("family templates substitute swept parameters", "[harness]") {
    CellParams p{0.0, 1.0};
    p.s = 0.25;
    p.alpha = 2.0;
    CHECK(instantiate_family("power:s", p) == "power:0.25");
    CHECK(instantiate_family("abs-power:alpha,1@0,3", p) == "abs-power:2,1@0,3");
    CHECK(instantiate_family("affine:1,2", p) == "affine:1,2");
    CHECK_THROWS_AS(instantiate_family("power:m", p), ConfigError);
}

TEST_CASE("sharpness: x^s attains the s-convex bound", "[harness]") {
    SharpnessRequest req;
    req.theorem = TheoremId::e13;
    req.family = "power:s";
    req.s_grid = {0.25, 0.5, 0.75};
    const auto rec = sharpness_search(req);
    REQUIRE(rec.points.size() == 3);
    for (const auto& pt : rec.points) CHECK_THAT(pt.rhs_margin, WithinAbs(0.0, 1e-9));
}

TEST_CASE("sharpness: classical chain for x^2", "[harness]") {
    SharpnessRequest req;
    req.theorem = TheoremId::E1;
    req.family = "quadratic:0,0,1";
    const auto rec = sharpness_search(req);
    REQUIRE(rec.points.size() == 1);
    CHECK_THAT(rec.min_margin(), WithinAbs(1.0 / 6.0, 1e-12));
}

TEST_CASE("sharpness: proof-consistent chain is tight for f(x) = x", "[harness]") {
    SharpnessRequest req;
    req.theorem = TheoremId::T1;
    req.family = "power:1";
    req.variant = BoundVariant::proof_consistent;
    req.alpha_grid = {0.25, 0.5, 1.0, 2.0, 3.0};
    req.s_grid = {1.0};
    const auto rec = sharpness_search(req);
    REQUIRE(rec.points.size() == 5);
    for (const auto& pt : rec.points) CHECK_THAT(pt.rhs_margin, WithinAbs(0.0, 1e-9));
}

TEST_CASE("sharpness rejects unusable requests", "[harness]") {
    SharpnessRequest req;
    req.theorem = TheoremId::L1;
    req.family = "power:2";
    req.alpha_grid = {1.0};
    CHECK_THROWS_AS(sharpness_search(req), ConfigError);
    req.theorem = TheoremId::T1;
    req.s_grid = {};
    CHECK_THROWS_AS(sharpness_search(req), ConfigError);
}
