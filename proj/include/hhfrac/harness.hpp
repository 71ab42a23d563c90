#pragma once

/**
 * @file harness.hpp
 * @brief Parameter sweeps over the bound evaluators, sharpness search and
 *        JSON/CSV report emission.
 *
 * A sweep expands a SweepConfig into a canonically ordered list of cells
 * (theorem, function, interval, alpha, s, m, q). Each cell is first checked
 * against the theorem's hypotheses; cells that fail are recorded as skipped
 * with a reason. Admissible cells are evaluated once and reported under every
 * selected variant.
 *
 * Cells are evaluated by a pool of worker threads writing into pre-sized
 * slots, so the report is identical for any worker count.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hhfrac/bounds.hpp"
#include "hhfrac/convexity.hpp"
#include "hhfrac/core.hpp"

namespace hhfrac {

inline const std::vector<std::string>& default_function_corpus() {
    static const std::vector<std::string> corpus = {
        "power:0.5",          "power:1",     "power:2",        "power:3",
        "abs-power:1.5,1",    "affine:1,2",  "quadratic:1,-1,1", "exp:1",
        "exp:-1",             "poly:0,0,1,0,1",
    };
    return corpus;
}

struct SweepConfig {
    std::vector<TheoremId> theorems{all_theorems.begin(), all_theorems.end()};
    std::vector<std::string> functions = default_function_corpus();
    std::vector<double> alpha_grid{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
    std::vector<double> s_grid{0.1, 0.25, 0.5, 0.75, 0.9};
    std::vector<double> m_grid{0.25, 0.5, 0.75, 1.0};
    std::vector<double> q_grid{1.0, 1.5, 2.0, 3.0};
    std::vector<Interval> intervals{{0.0, 1.0}, {0.5, 2.0}, {1.0, 3.0}};
    std::vector<BoundVariant> variants{BoundVariant::as_stated, BoundVariant::proof_consistent};
    EvalOptions eval;
    CertifierOptions certifier;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::optional<std::string> json_out;
    std::optional<std::string> csv_out;

    /// Throws ConfigError when a grid leaves its theorem's admissible range.
    void validate() const {
        auto nonempty = [](const auto& v, const char* name) {
            if (v.empty()) throw ConfigError(std::string("config: ") + name + " must not be empty");
        };
        nonempty(theorems, "theorems");
        nonempty(functions, "functions");
        nonempty(alpha_grid, "alpha_grid");
        nonempty(s_grid, "s_grid");
        nonempty(m_grid, "m_grid");
        nonempty(q_grid, "q_grid");
        nonempty(intervals, "intervals");
        nonempty(variants, "variants");
        for (double v : alpha_grid)
            if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("config: alpha values must be > 0");
        for (double v : s_grid)
            if (!(v > 0.0 && v <= 1.0)) throw ConfigError("config: s values must lie in (0, 1]");
        for (double v : m_grid)
            if (!(v > 0.0 && v <= 1.0)) throw ConfigError("config: m values must lie in (0, 1]");
        for (double v : q_grid)
            if (!(v >= 1.0) || !std::isfinite(v)) throw ConfigError("config: q values must be >= 1");
        for (const auto& iv : intervals)
            if (iv.a < 0.0 || !iv.bounded()) throw ConfigError("config: intervals must lie in [0, inf)");
        for (const auto& f : functions) (void)FuncSpec::parse(f);
        eval.quad.validate();
        if (certifier.grid_n < 3) throw ConfigError("config: certifier grid_n must be >= 3");
    }
};

namespace detail {

template <class T>
std::vector<T> json_list(const nlohmann::json& j, const char* key, std::vector<T> fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_array()) throw ConfigError(std::string("config: ") + key + " must be a list");
    return j.at(key).get<std::vector<T>>();
}

}  // namespace detail

/// Reads a SweepConfig from JSON. Absent keys keep their defaults; present
/// keys must be well-formed.
inline SweepConfig parse_sweep_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    static const std::vector<std::string> known = {
        "theorems", "functions", "alpha_grid", "s_grid", "m_grid", "q_grid", "intervals",
        "variants", "tolerance", "certifier", "seed",   "workers", "output"};
    for (const auto& [key, _] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }

    SweepConfig cfg;
    try {
        if (j.contains("theorems")) {
            cfg.theorems.clear();
            for (const auto& t : detail::json_list<std::string>(j, "theorems", {})) {
                cfg.theorems.push_back(parse_theorem(t));
            }
        }
        cfg.functions = detail::json_list(j, "functions", cfg.functions);
        cfg.alpha_grid = detail::json_list(j, "alpha_grid", cfg.alpha_grid);
        cfg.s_grid = detail::json_list(j, "s_grid", cfg.s_grid);
        cfg.m_grid = detail::json_list(j, "m_grid", cfg.m_grid);
        cfg.q_grid = detail::json_list(j, "q_grid", cfg.q_grid);
        if (j.contains("intervals")) {
            cfg.intervals.clear();
            for (const auto& pair : detail::json_list<std::vector<double>>(j, "intervals", {})) {
                if (pair.size() != 2) throw ConfigError("config: each interval must be [a, b]");
                cfg.intervals.emplace_back(pair[0], pair[1]);
            }
        }
        if (j.contains("variants")) {
            cfg.variants.clear();
            for (const auto& v : detail::json_list<std::string>(j, "variants", {})) {
                cfg.variants.push_back(parse_variant(v));
            }
        }
        if (j.contains("tolerance")) {
            const auto& t = j.at("tolerance");
            cfg.eval.quad.abs_tol = t.value("abs", cfg.eval.quad.abs_tol);
            cfg.eval.quad.rel_tol = t.value("rel", cfg.eval.quad.rel_tol);
            cfg.eval.quad.max_evals = t.value("max_evals", cfg.eval.quad.max_evals);
            cfg.eval.verdict_rel_tol = t.value("verdict_rel", cfg.eval.verdict_rel_tol);
            cfg.eval.identity_tol = t.value("identity", cfg.eval.identity_tol);
        }
        if (j.contains("certifier")) {
            const auto& c = j.at("certifier");
            cfg.certifier.grid_n = c.value("grid_n", cfg.certifier.grid_n);
            cfg.certifier.random_samples = c.value("random_samples", cfg.certifier.random_samples);
        }
        cfg.seed = j.value("seed", cfg.seed);
        cfg.workers = j.value("workers", cfg.workers);
        if (j.contains("output")) {
            const auto& o = j.at("output");
            if (o.contains("json")) cfg.json_out = o.at("json").get<std::string>();
            if (o.contains("csv")) cfg.csv_out = o.at("csv").get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const DomainError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

inline SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    return parse_sweep_config(j);
}

// ---------------------------------------------------------------------------
// Cells and hypotheses

struct Cell {
    TheoremId theorem;
    std::size_t function;  ///< index into SweepConfig::functions
    CellParams params;
};

/// Canonical cell order: theorem, function, interval, alpha, s, m, q.
inline std::vector<Cell> enumerate_cells(const SweepConfig& cfg) {
    std::vector<Cell> cells;
    const std::vector<double> none{std::numeric_limits<double>::quiet_NaN()};
    auto grid = [&](bool used, const std::vector<double>& g) -> const std::vector<double>& {
        return used ? g : none;
    };
    auto opt = [](bool used, double v) { return used ? std::optional<double>(v) : std::nullopt; };
    for (auto id : cfg.theorems) {
        const auto use = params_of(id);
        for (std::size_t fi = 0; fi < cfg.functions.size(); ++fi) {
            for (const auto& iv : cfg.intervals) {
                for (double alpha : grid(use.alpha, cfg.alpha_grid)) {
                    for (double s : grid(use.s, cfg.s_grid)) {
                        for (double m : grid(use.m, cfg.m_grid)) {
                            for (double q : grid(use.q, cfg.q_grid)) {
                                CellParams p{iv.a, iv.b};
                                p.alpha = opt(use.alpha, alpha);
                                p.s = opt(use.s, s);
                                p.m = opt(use.m, m);
                                p.q = opt(use.q, q);
                                cells.push_back({id, fi, p});
                            }
                        }
                    }
                }
            }
        }
    }
    return cells;
}

namespace detail {

inline bool certified(Label label, const auto& run_certifier) {
    if (label == Label::yes) return true;
    if (label == Label::no) return false;
    return run_certifier().holds;
}

}  // namespace detail

/// Returns a reason when the cell's hypotheses are not met (or cannot be
/// established); std::nullopt when it may be evaluated.
inline std::optional<std::string> skip_reason(const Cell& cell, const FuncSpec& f,
                                              const SweepConfig& cfg) {
    const auto& p = cell.params;
    const Interval iv(p.a, p.b);
    const auto& copt = cfg.certifier;
    const int n = copt.grid_n;
    const auto seed = cfg.seed;

    if (!f.domain().contains(iv)) return "interval outside function domain";

    auto s_convex = [&](double s) {
        return detail::certified(f.s_convex_on(s, iv),
                                 [&] { return check_s_convex(f, s, iv, n, seed, copt); });
    };
    auto m_convex = [&](double m, double upper) {
        const Interval base(0.0, upper);
        return detail::certified(f.m_convex_on(m, base),
                                 [&] { return check_m_convex(f, m, base, n, seed, copt); });
    };
    auto derivative_ok = [&]() -> std::optional<std::string> {
        if (!f.has_derivative()) return "no analytic derivative";
        if (!f.derivative_bounded_on(iv)) return "derivative unbounded on interval";
        return std::nullopt;
    };
    auto abs_derivative_s_convex = [&](double q, double s) {
        const Label label = f.abs_derivative_pow_s_convex_on(q, s, iv);
        if (label != Label::unknown) return label == Label::yes;
        // No label: sample the defining inequality of g = |f'|^q directly.
        const auto g = [&](double x) { return std::pow(std::abs(f.derivative(x)), q); };
        auto ineq = [&](double x, double y, double lam) {
            const double mu = 1.0 - lam;
            return std::pair{g(lam * x + mu * y), std::pow(lam, s) * g(x) + std::pow(mu, s) * g(y)};
        };
        return detail::falsify(ineq, iv, n, seed, copt).holds;
    };

    switch (cell.theorem) {
        case TheoremId::E1:
            if (!detail::certified(f.convex_on(iv), [&] { return check_convex(f, iv, n, seed, copt); }))
                return "f not convex on interval";
            return std::nullopt;
        case TheoremId::e13:
        case TheoremId::T1:
            if (!s_convex(*p.s)) return "f not s-convex on interval";
            return std::nullopt;
        case TheoremId::L1:
            return derivative_ok();
        case TheoremId::e14:
        case TheoremId::T2:
            if (auto why = derivative_ok()) return why;
            if (!abs_derivative_s_convex(*p.q, *p.s)) return "|f'|^q not s-convex on interval";
            return std::nullopt;
        case TheoremId::h1:
        case TheoremId::kk: {
            const double upper = p.b / *p.m;
            if (!f.domain().contains(upper) || !f.domain().contains(*p.m * p.a))
                return "b/m outside function domain";
            if (!m_convex(*p.m, upper)) return "f not m-convex on [0, b/m]";
            return std::nullopt;
        }
        case TheoremId::h2:
            if (!f.domain().contains(*p.m * p.a)) return "ma outside function domain";
            if (!m_convex(*p.m, p.b)) return "f not m-convex on [0, b]";
            return std::nullopt;
    }
    return "unknown theorem";
}

// ---------------------------------------------------------------------------
// Reports

struct SkippedCell {
    TheoremId theorem;
    std::string f;
    CellParams params;
    std::string reason;
    bool error = false;  ///< evaluation raised rather than a hypothesis failing
};

struct SummaryEntry {
    TheoremId theorem;
    BoundVariant variant;
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::size_t equality = 0;
    std::optional<double> worst_margin;
    std::optional<std::size_t> worst_report;  ///< index into SweepReport::reports
};

struct SweepStats {
    std::size_t cells_total = 0;
    std::size_t cells_evaluated = 0;
    std::size_t cells_skipped = 0;
    std::size_t cells_errored = 0;
    std::size_t quad_evals = 0;
    double wall_seconds = 0.0;  ///< not serialized
};

struct SweepReport {
    std::vector<InequalityReport> reports;  ///< cell order, then variant order
    std::vector<SkippedCell> skipped;
    std::vector<SummaryEntry> summary;  ///< theorem order, then variant order
    SweepStats stats;

    const SummaryEntry& entry(TheoremId id, BoundVariant v) const {
        for (const auto& e : summary) {
            if (e.theorem == id && e.variant == v) return e;
        }
        throw std::out_of_range("no summary entry for " + to_string(id) + "/" + to_string(v));
    }
};

/// Evaluates every admissible cell of the configuration.
inline SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();

    std::vector<FuncSpec> funcs;
    funcs.reserve(cfg.functions.size());
    for (const auto& text : cfg.functions) funcs.push_back(FuncSpec::parse(text));

    const auto cells = enumerate_cells(cfg);
    struct Slot {
        std::optional<InequalityReport> report;
        std::optional<std::string> reason;
        bool error = false;
    };
    std::vector<Slot> slots(cells.size());

    auto work = [&](std::size_t i) {
        const auto& cell = cells[i];
        const auto& f = funcs[cell.function];
        auto& slot = slots[i];
        try {
            if (auto why = skip_reason(cell, f, cfg)) {
                slot.reason = std::move(why);
                return;
            }
            slot.report = evaluate(cell.theorem, f, cell.params, cfg.variants.front(), cfg.eval);
        } catch (const std::exception& e) {
            slot.reason = std::string("evaluation error: ") + e.what();
            slot.error = true;
        }
    };

    const unsigned workers =
        cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.workers;
    if (workers <= 1 || cells.size() < 2) {
        for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, cells.size()));
        for (unsigned w = 0; w < n; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) work(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    SweepReport out;
    out.stats.cells_total = cells.size();
    for (auto id : cfg.theorems) {
        if (std::any_of(out.summary.begin(), out.summary.end(),
                        [&](const SummaryEntry& e) { return e.theorem == id; }))
            continue;
        for (auto v : cfg.variants) out.summary.push_back({id, v});
    }
    auto entry_for = [&](TheoremId id, BoundVariant v) -> SummaryEntry& {
        for (auto& e : out.summary) {
            if (e.theorem == id && e.variant == v) return e;
        }
        throw std::logic_error("summary entry missing");
    };

    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& cell = cells[i];
        auto& slot = slots[i];
        if (!slot.report) {
            out.skipped.push_back({cell.theorem, funcs[cell.function].to_string(), cell.params,
                                   *slot.reason, slot.error});
            ++(slot.error ? out.stats.cells_errored : out.stats.cells_skipped);
            continue;
        }
        ++out.stats.cells_evaluated;
        out.stats.quad_evals += slot.report->quad_evals;
        for (auto v : cfg.variants) {
            auto rep = with_variant(*slot.report, v, cfg.eval);
            auto& e = entry_for(cell.theorem, v);
            switch (rep.verdict) {
                case Verdict::holds: ++e.holds; break;
                case Verdict::violated: ++e.violated; break;
                case Verdict::equality: ++e.equality; break;
            }
            const double wm = rep.is_identity() ? -*rep.residual : rep.worst_margin();
            if (!e.worst_margin || wm < *e.worst_margin) {
                e.worst_margin = wm;
                e.worst_report = out.reports.size();
            }
            out.reports.push_back(std::move(rep));
        }
    }
    out.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline nlohmann::ordered_json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

inline nlohmann::ordered_json params_json(const CellParams& p) {
    nlohmann::ordered_json j;
    j["a"] = p.a;
    j["b"] = p.b;
    if (p.alpha) j["alpha"] = *p.alpha;
    if (p.s) j["s"] = *p.s;
    if (p.m) j["m"] = *p.m;
    if (p.q) j["q"] = *p.q;
    return j;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const InequalityReport& r) {
    nlohmann::ordered_json j;
    j["theorem"] = to_string(r.theorem);
    j["variant"] = to_string(r.variant);
    j["f"] = r.f;
    j["inputs"] = detail::params_json(r.inputs);
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& t : r.terms) terms[t.name] = detail::number_or_null(t.value);
    j["terms"] = terms;
    nlohmann::ordered_json margins = nlohmann::ordered_json::array();
    for (double m : r.margins) margins.push_back(detail::number_or_null(m));
    j["margins"] = margins;
    j["verdict"] = to_string(r.verdict);
    j["tol_used"] = detail::number_or_null(r.tol_used);
    if (r.rhs_as_stated) j["rhs_as_stated"] = detail::number_or_null(*r.rhs_as_stated);
    if (r.rhs_proof_consistent)
        j["rhs_proof_consistent"] = detail::number_or_null(*r.rhs_proof_consistent);
    if (r.residual) j["residual"] = detail::number_or_null(*r.residual);
    j["positivity_ok"] = r.positivity_ok;
    j["quad_evals"] = r.quad_evals;
    return j;
}

inline nlohmann::ordered_json to_json(const SweepReport& rep) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json summary = nlohmann::ordered_json::array();
    for (const auto& e : rep.summary) {
        nlohmann::ordered_json s;
        s["theorem"] = to_string(e.theorem);
        s["variant"] = to_string(e.variant);
        s["holds"] = e.holds;
        s["violated"] = e.violated;
        s["equality"] = e.equality;
        if (e.worst_margin) {
            s["worst_margin"] = detail::number_or_null(*e.worst_margin);
            const auto& w = rep.reports[*e.worst_report];
            s["worst_cell"] = {{"report", *e.worst_report},
                               {"f", w.f},
                               {"inputs", detail::params_json(w.inputs)}};
        }
        summary.push_back(s);
    }
    j["summary"] = summary;
    j["stats"] = {{"cells_total", rep.stats.cells_total},
                  {"cells_evaluated", rep.stats.cells_evaluated},
                  {"cells_skipped", rep.stats.cells_skipped},
                  {"cells_errored", rep.stats.cells_errored},
                  {"quad_evals", rep.stats.quad_evals}};
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& r : rep.reports) reports.push_back(to_json(r));
    j["reports"] = reports;
    nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
    for (const auto& s : rep.skipped) {
        skipped.push_back({{"theorem", to_string(s.theorem)},
                           {"f", s.f},
                           {"inputs", detail::params_json(s.params)},
                           {"reason", s.reason},
                           {"error", s.error}});
    }
    j["skipped"] = skipped;
    return j;
}

inline std::string to_json_text(const SweepReport& rep) { return to_json(rep).dump(2) + "\n"; }

/// One row per (theorem, variant, cell). Identity rows put lhs_identity and
/// rhs_identity in the lhs and rhs columns.
inline std::string to_csv(const SweepReport& rep) {
    std::ostringstream out;
    out << "theorem,variant,f,a,b,alpha,s,m,q,lhs,mid,rhs,margin_1,margin_2,verdict,tol_used,"
           "rhs_as_stated,rhs_proof_consistent,residual,positivity_ok\n";
    auto num = [](double v) { return detail::format_real(v); };
    auto opt = [&](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
    auto quoted = [](const std::string& s) {
        return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
    };
    for (const auto& r : rep.reports) {
        const auto& p = r.inputs;
        const bool three = r.terms.size() == 3;
        out << to_string(r.theorem) << ',' << to_string(r.variant) << ',' << quoted(r.f) << ','
            << num(p.a) << ',' << num(p.b) << ',' << opt(p.alpha) << ',' << opt(p.s) << ','
            << opt(p.m) << ',' << opt(p.q) << ',' << num(r.terms.front().value) << ','
            << (three ? num(r.terms[1].value) : std::string()) << ','
            << num(r.terms.back().value) << ',' << num(r.margins.at(0)) << ','
            << (r.margins.size() > 1 ? num(r.margins[1]) : std::string()) << ','
            << to_string(r.verdict) << ',' << num(r.tol_used) << ',' << opt(r.rhs_as_stated)
            << ',' << opt(r.rhs_proof_consistent) << ',' << opt(r.residual) << ','
            << (r.positivity_ok ? "true" : "false") << '\n';
    }
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// Sharpness search

struct SharpnessRequest {
    TheoremId theorem = TheoremId::e13;
    std::string family;  ///< FuncSpec text; fields named alpha/s/m/q are substituted
    BoundVariant variant = BoundVariant::as_stated;
    Interval interval{0.0, 1.0};
    std::vector<double> alpha_grid;
    std::vector<double> s_grid;
    std::vector<double> m_grid;
    std::vector<double> q_grid;
    EvalOptions eval;
};

struct SharpnessPoint {
    std::string f;
    CellParams params;
    double rhs_margin;
};

struct SharpnessRecord {
    std::vector<SharpnessPoint> points;  ///< grid order
    std::size_t argmin = 0;

    double min_margin() const { return points.at(argmin).rhs_margin; }
};

/// Replaces parameter fields of a FuncSpec template ("power:s") by values.
inline std::string instantiate_family(const std::string& family, const CellParams& p) {
    const auto colon = family.find(':');
    if (colon == std::string::npos) return family;
    const auto at = family.find('@');
    const std::string head = family.substr(0, colon + 1);
    const std::string body =
        family.substr(colon + 1, at == std::string::npos ? std::string::npos : at - colon - 1);
    const std::string tail = at == std::string::npos ? std::string() : family.substr(at);

    std::string out = head;
    std::size_t start = 0;
    bool first = true;
    while (start <= body.size()) {
        const auto comma = body.find(',', start);
        const std::string field = body.substr(start, comma - start);
        std::optional<double> value;
        if (field == "alpha") value = p.alpha;
        if (field == "s") value = p.s;
        if (field == "m") value = p.m;
        if (field == "q") value = p.q;
        if ((field == "alpha" || field == "s" || field == "m" || field == "q") && !value) {
            throw ConfigError("family '" + family + "' references " + field +
                              " which the theorem does not sweep");
        }
        if (!first) out += ',';
        out += value ? detail::format_real(*value) : field;
        first = false;
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out + tail;
}

/// Evaluates the last (upper-bound) margin over the grid and locates its
/// minimum.
inline SharpnessRecord sharpness_search(const SharpnessRequest& req) {
    if (req.theorem == TheoremId::L1) {
        throw ConfigError("sharpness: L1 is an identity and has no bound margin");
    }
    const auto use = params_of(req.theorem);
    const std::vector<double> none{std::numeric_limits<double>::quiet_NaN()};
    auto grid = [&](bool used, const std::vector<double>& g, const char* name)
        -> const std::vector<double>& {
        if (!used) return none;
        if (g.empty()) throw ConfigError(std::string("sharpness: ") + name + " grid is empty");
        return g;
    };
    auto opt = [](bool used, double v) { return used ? std::optional<double>(v) : std::nullopt; };

    SharpnessRecord rec;
    for (double alpha : grid(use.alpha, req.alpha_grid, "alpha")) {
        for (double s : grid(use.s, req.s_grid, "s")) {
            for (double m : grid(use.m, req.m_grid, "m")) {
                for (double q : grid(use.q, req.q_grid, "q")) {
                    CellParams p{req.interval.a, req.interval.b};
                    p.alpha = opt(use.alpha, alpha);
                    p.s = opt(use.s, s);
                    p.m = opt(use.m, m);
                    p.q = opt(use.q, q);
                    const auto f = FuncSpec::parse(instantiate_family(req.family, p));
                    const auto rep = evaluate(req.theorem, f, p, req.variant, req.eval);
                    rec.points.push_back({f.to_string(), p, rep.margins.back()});
                    if (rec.points.back().rhs_margin < rec.points[rec.argmin].rhs_margin) {
                        rec.argmin = rec.points.size() - 1;
                    }
                }
            }
        }
    }
    return rec;
}

}  // namespace hhfrac
