#pragma once

// Command-line front end: eval, sweep, sharpness and convexity subcommands.
//
// Exit codes: 0 success; 1 when --strict is set and an as-stated bound is
// violated; 2 on usage, configuration or runtime errors.

#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhfrac/bounds.hpp"
#include "hhfrac/convexity.hpp"
#include "hhfrac/harness.hpp"

namespace hhfrac {

namespace detail {

inline std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string describe_inputs(const std::string& f, const CellParams& p) {
    std::string out = "f=" + f + "  [" + fmt_num(p.a) + ", " + fmt_num(p.b) + "]";
    if (p.alpha) out += "  alpha=" + fmt_num(*p.alpha);
    if (p.s) out += "  s=" + fmt_num(*p.s);
    if (p.m) out += "  m=" + fmt_num(*p.m);
    if (p.q) out += "  q=" + fmt_num(*p.q);
    return out;
}

inline void print_report(std::ostream& out, const InequalityReport& r) {
    out << "  " << to_string(r.variant) << ": " << to_string(r.verdict)
        << " (tol " << fmt_num(r.tol_used) << ")\n";
    for (const auto& t : r.terms) out << "    " << t.name << " = " << fmt_num(t.value) << '\n';
    out << "    margins =";
    for (std::size_t i = 0; i < r.margins.size(); ++i) {
        out << (i ? ", " : " ") << fmt_num(r.margins[i]);
    }
    out << '\n';
    if (r.residual) out << "    residual = " << fmt_num(*r.residual) << '\n';
    if (!r.positivity_ok) out << "    note: f takes negative values on the interval\n";
}

inline std::vector<BoundVariant> variants_from(const std::string& text) {
    if (text == "both") return {BoundVariant::as_stated, BoundVariant::proof_consistent};
    return {parse_variant(text)};
}

}  // namespace detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Riemann-Liouville fractional integrals and Hermite-Hadamard bound audits",
                 "hhfrac"};
    app.require_subcommand(1);

    double tol_abs = 1e-12;
    double tol_rel = 1e-12;
    bool strict = false;

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one theorem at one parameter point");
    std::string theorem_text, f_text, variant_text = "both";
    double a = 0.0, b = 1.0;
    std::optional<double> alpha, s, m, q;
    eval_cmd->add_option("--theorem", theorem_text, "E1, e13, e14, T1, L1, T2, h1, kk or h2")
        ->required();
    eval_cmd->add_option("--f", f_text, "Function spec, e.g. power:0.5")->required();
    eval_cmd->add_option("--a", a, "Left end")->required();
    eval_cmd->add_option("--b", b, "Right end")->required();
    eval_cmd->add_option("--alpha", alpha, "Fractional order");
    eval_cmd->add_option("--s", s, "s-convexity index");
    eval_cmd->add_option("--m", m, "m-convexity index");
    eval_cmd->add_option("--q", q, "Power q >= 1");
    eval_cmd->add_option("--variant", variant_text, "as-stated, proof-consistent or both")
        ->capture_default_str();
    eval_cmd->add_option("--tol-abs", tol_abs, "Quadrature absolute tolerance");
    eval_cmd->add_option("--tol-rel", tol_rel, "Quadrature relative tolerance");
    eval_cmd->add_flag("--strict", strict, "Exit 1 if an as-stated bound is violated");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a configured parameter sweep");
    std::string config_path;
    std::optional<std::string> json_path, csv_path;
    std::optional<unsigned> workers;
    std::optional<std::uint64_t> seed;
    std::optional<double> sweep_tol_abs, sweep_tol_rel;
    sweep_cmd->add_option("--config", config_path, "JSON sweep configuration")->required();
    sweep_cmd->add_option("--out", json_path, "JSON report path");
    sweep_cmd->add_option("--csv", csv_path, "CSV report path");
    sweep_cmd->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
    sweep_cmd->add_option("--seed", seed, "Certifier seed");
    sweep_cmd->add_option("--tol-abs", sweep_tol_abs, "Quadrature absolute tolerance");
    sweep_cmd->add_option("--tol-rel", sweep_tol_rel, "Quadrature relative tolerance");
    sweep_cmd->add_flag("--strict", strict, "Exit 1 if an as-stated bound is violated");

    // sharpness
    auto* sharp_cmd = app.add_subcommand("sharpness", "Minimize the upper-bound margin over a grid");
    std::string sharp_theorem, sharp_family, sharp_variant = "as-stated";
    double sharp_a = 0.0, sharp_b = 1.0;
    std::vector<double> alpha_grid, s_grid, m_grid, q_grid;
    sharp_cmd->add_option("--theorem", sharp_theorem, "Theorem id")->required();
    sharp_cmd->add_option("--f", sharp_family, "Family template, e.g. power:s")->required();
    sharp_cmd->add_option("--a", sharp_a, "Left end")->capture_default_str();
    sharp_cmd->add_option("--b", sharp_b, "Right end")->capture_default_str();
    sharp_cmd->add_option("--alpha", alpha_grid, "alpha grid")->delimiter(',');
    sharp_cmd->add_option("--s", s_grid, "s grid")->delimiter(',');
    sharp_cmd->add_option("--m", m_grid, "m grid")->delimiter(',');
    sharp_cmd->add_option("--q", q_grid, "q grid")->delimiter(',');
    sharp_cmd->add_option("--variant", sharp_variant, "as-stated or proof-consistent")
        ->capture_default_str();
    sharp_cmd->add_option("--tol-abs", tol_abs, "Quadrature absolute tolerance");
    sharp_cmd->add_option("--tol-rel", tol_rel, "Quadrature relative tolerance");

    // convexity
    auto* conv_cmd = app.add_subcommand("convexity", "Search for convexity counterexamples");
    std::string conv_f, conv_class;
    double conv_a = 0.0, conv_b = 1.0;
    std::optional<double> conv_s, conv_m;
    int grid_n = 33;
    std::size_t samples = 10000;
    std::uint64_t conv_seed = 0;
    conv_cmd->add_option("--f", conv_f, "Function spec")->required();
    conv_cmd->add_option("--class", conv_class, "s-convex, m-convex or convex")
        ->required()
        ->check(CLI::IsMember({"s-convex", "m-convex", "convex"}));
    conv_cmd->add_option("--s", conv_s, "s for s-convex");
    conv_cmd->add_option("--m", conv_m, "m for m-convex");
    conv_cmd->add_option("--a", conv_a, "Left end")->capture_default_str();
    conv_cmd->add_option("--b", conv_b, "Right end")->capture_default_str();
    conv_cmd->add_option("--grid", grid_n, "Grid points per axis")->capture_default_str();
    conv_cmd->add_option("--samples", samples, "Random triples")->capture_default_str();
    conv_cmd->add_option("--seed", conv_seed, "Random stream seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) {
            EvalOptions opt;
            opt.quad.abs_tol = tol_abs;
            opt.quad.rel_tol = tol_rel;
            const auto id = parse_theorem(theorem_text);
            const auto f = FuncSpec::parse(f_text);
            CellParams p{a, b, alpha, s, m, q};
            const auto use = params_of(id);
            if (!use.alpha) p.alpha.reset();
            if (!use.s) p.s.reset();
            if (!use.m) p.m.reset();
            if (!use.q) p.q.reset();

            out << "theorem " << to_string(id) << "  " << detail::describe_inputs(f.to_string(), p)
                << '\n';
            bool stated_violated = false;
            const auto first = evaluate(id, f, p, BoundVariant::as_stated, opt);
            for (auto v : detail::variants_from(variant_text)) {
                const auto rep = with_variant(first, v, opt);
                detail::print_report(out, rep);
                if (v == BoundVariant::as_stated && rep.verdict == Verdict::violated)
                    stated_violated = true;
            }
            if (strict && with_variant(first, BoundVariant::as_stated, opt).verdict ==
                              Verdict::violated)
                stated_violated = true;
            return strict && stated_violated ? 1 : 0;
        }

        if (*sweep_cmd) {
            auto cfg = load_sweep_config(config_path);
            if (json_path) cfg.json_out = json_path;
            if (csv_path) cfg.csv_out = csv_path;
            if (workers) cfg.workers = *workers;
            if (seed) cfg.seed = *seed;
            if (sweep_tol_abs) cfg.eval.quad.abs_tol = *sweep_tol_abs;
            if (sweep_tol_rel) cfg.eval.quad.rel_tol = *sweep_tol_rel;
            const auto rep = run_sweep(cfg);
            if (cfg.json_out) write_text_file(*cfg.json_out, to_json_text(rep));
            if (cfg.csv_out) write_text_file(*cfg.csv_out, to_csv(rep));

            out << "theorem  variant           holds  violated  equality  worst_margin\n";
            bool stated_violated = false;
            for (const auto& e : rep.summary) {
                char line[160];
                std::snprintf(line, sizeof line, "%-8s %-17s %6zu %9zu %9zu  %s\n",
                              to_string(e.theorem).c_str(), to_string(e.variant).c_str(), e.holds,
                              e.violated, e.equality,
                              e.worst_margin ? detail::fmt_num(*e.worst_margin).c_str() : "-");
                out << line;
                if (e.variant == BoundVariant::as_stated && e.violated > 0) stated_violated = true;
            }
            out << "cells: " << rep.stats.cells_total << " total, " << rep.stats.cells_evaluated
                << " evaluated, " << rep.stats.cells_skipped << " skipped, "
                << rep.stats.cells_errored << " errored; " << rep.stats.quad_evals
                << " integrand evaluations; " << detail::fmt_num(rep.stats.wall_seconds) << " s\n";
            if (cfg.json_out) out << "wrote " << *cfg.json_out << '\n';
            if (cfg.csv_out) out << "wrote " << *cfg.csv_out << '\n';
            return strict && stated_violated ? 1 : 0;
        }

        if (*sharp_cmd) {
            SharpnessRequest req;
            req.theorem = parse_theorem(sharp_theorem);
            req.family = sharp_family;
            req.variant = parse_variant(sharp_variant);
            req.interval = Interval(sharp_a, sharp_b);
            req.alpha_grid = alpha_grid;
            req.s_grid = s_grid;
            req.m_grid = m_grid;
            req.q_grid = q_grid;
            req.eval.quad.abs_tol = tol_abs;
            req.eval.quad.rel_tol = tol_rel;
            const auto rec = sharpness_search(req);
            for (const auto& pt : rec.points) {
                out << detail::describe_inputs(pt.f, pt.params)
                    << "  rhs_margin=" << detail::fmt_num(pt.rhs_margin) << '\n';
            }
            const auto& best = rec.points[rec.argmin];
            out << "minimum rhs margin " << detail::fmt_num(best.rhs_margin) << " at "
                << detail::describe_inputs(best.f, best.params) << '\n';
            return 0;
        }

        if (*conv_cmd) {
            const auto f = FuncSpec::parse(conv_f);
            const Interval dom(conv_a, conv_b);
            CertifierOptions copt;
            copt.grid_n = grid_n;
            copt.random_samples = samples;
            ConvexityVerdict v;
            const char* weight_name = "lambda";
            if (conv_class == "s-convex") {
                if (!conv_s) throw ConfigError("--class s-convex needs --s");
                v = check_s_convex(f, *conv_s, dom, grid_n, conv_seed, copt);
            } else if (conv_class == "m-convex") {
                if (!conv_m) throw ConfigError("--class m-convex needs --m");
                v = check_m_convex(f, *conv_m, dom, grid_n, conv_seed, copt);
                weight_name = "t";
            } else {
                v = check_convex(f, dom, grid_n, conv_seed, copt);
            }
            if (v.holds) {
                out << "holds (grid " << grid_n << "³ + " << samples << " random)\n";
            } else {
                const auto& w = *v.witness;
                out << "violated at x=" << detail::fmt_num(w.x) << " y=" << detail::fmt_num(w.y)
                    << ' ' << weight_name << '=' << detail::fmt_num(w.weight)
                    << ": lhs=" << detail::fmt_num(w.lhs) << " rhs=" << detail::fmt_num(w.rhs)
                    << " violation=" << detail::fmt_num(w.violation) << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace hhfrac
