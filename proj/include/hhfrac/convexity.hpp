#pragma once

/**
 * @file convexity.hpp
 * @brief Closed-form test functions and empirical certifiers for
 *        s-convexity (second sense) and m-convexity.
 *
 * A FuncSpec is one of a handful of closed-form families with an analytic
 * derivative. Families also carry conservative class labels: a label of
 * Label::yes is backed by a known sufficient condition, Label::no by a known
 * counterexample, and Label::unknown means "run the certifier".
 *
 * The certifiers only ever falsify. A verdict with holds == true says that no
 * violation was found on the tensor grid plus the seeded random triples; it is
 * not a proof.
 *
 * Text form, used by configuration files and the command line:
 *
 *     power:p              x^p                 p > 0
 *     abs-power:p[,c]      |x - c|^p           p > 0, c defaults to 0
 *     affine:c0,c1         c0 + c1 x
 *     quadratic:c0,c1,c2   c0 + c1 x + c2 x^2
 *     exp:k                exp(k x)
 *     poly:c0,c1,...       sum c_i x^i         (alias custom-polynomial)
 *
 * Any spec may end in "@lo,hi" to restrict its domain; the default domain
 * is the half-line [0, inf).
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhfrac/core.hpp"

namespace hhfrac {

enum class Family { power, abs_power, affine, quadratic, exponential, polynomial };

enum class Label { yes, no, unknown };

namespace detail {

inline std::string format_real(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

inline double parse_real(std::string_view text, std::string_view context) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() ||
        !std::isfinite(v)) {
        throw ConfigError("cannot parse number '" + std::string(text) + "' in '" +
                          std::string(context) + "'");
    }
    return v;
}

inline std::vector<double> parse_list(std::string_view text, std::string_view context) {
    std::vector<double> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma - start), context));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Closed-form test function with analytic derivative and declared domain.
class FuncSpec {
public:
    static FuncSpec power(double p) {
        if (!(p > 0.0)) throw DomainError("power: exponent must be positive");
        return FuncSpec(Family::power, {p});
    }
    static FuncSpec abs_power(double p, double center = 0.0) {
        if (!(p > 0.0)) throw DomainError("abs-power: exponent must be positive");
        return FuncSpec(Family::abs_power, {p, center});
    }
    static FuncSpec affine(double c0, double c1) { return FuncSpec(Family::affine, {c0, c1}); }
    static FuncSpec quadratic(double c0, double c1, double c2) {
        return FuncSpec(Family::quadratic, {c0, c1, c2});
    }
    static FuncSpec exponential(double k) { return FuncSpec(Family::exponential, {k}); }
    static FuncSpec polynomial(std::vector<double> coeffs) {
        if (coeffs.empty()) throw DomainError("poly: needs at least one coefficient");
        return FuncSpec(Family::polynomial, std::move(coeffs));
    }

    /// Parses the text form documented at the top of this header.
    static FuncSpec parse(std::string_view text) {
        const std::string_view whole = text;
        std::optional<Interval> restrict_to;
        if (const auto at = text.find('@'); at != std::string_view::npos) {
            const auto bounds = detail::parse_list(text.substr(at + 1), whole);
            if (bounds.size() != 2) throw ConfigError("domain suffix needs lo,hi in '" + std::string(whole) + "'");
            if (bounds[0] < 0.0) throw ConfigError("domain must lie in [0, inf) in '" + std::string(whole) + "'");
            try {
                restrict_to = Interval(bounds[0], bounds[1]);
            } catch (const DomainError& e) {
                throw ConfigError(e.what());
            }
            text = text.substr(0, at);
        }
        const auto colon = text.find(':');
        const std::string_view name = text.substr(0, colon);
        const auto params = colon == std::string_view::npos
                                ? std::vector<double>{}
                                : detail::parse_list(text.substr(colon + 1), whole);

        auto need = [&](std::size_t lo, std::size_t hi) {
            if (params.size() < lo || params.size() > hi) {
                throw ConfigError("wrong number of parameters in '" + std::string(whole) + "'");
            }
        };

        FuncSpec f = [&] {
            try {
                if (name == "power") {
                    need(1, 1);
                    return power(params[0]);
                }
                if (name == "abs-power") {
                    need(1, 2);
                    return abs_power(params[0], params.size() > 1 ? params[1] : 0.0);
                }
                if (name == "affine") {
                    need(2, 2);
                    return affine(params[0], params[1]);
                }
                if (name == "quadratic") {
                    need(3, 3);
                    return quadratic(params[0], params[1], params[2]);
                }
                if (name == "exp") {
                    need(1, 1);
                    return exponential(params[0]);
                }
                if (name == "poly" || name == "custom-polynomial") {
                    need(1, 64);
                    return polynomial(params);
                }
            } catch (const DomainError& e) {
                throw ConfigError(std::string(e.what()) + " in '" + std::string(whole) + "'");
            }
            throw ConfigError("unknown function family '" + std::string(name) + "'");
        }();
        if (restrict_to) f.domain_ = *restrict_to;
        return f;
    }

    Family family() const noexcept { return family_; }
    std::span<const double> params() const noexcept { return params_; }
    const Interval& domain() const noexcept { return domain_; }

    /// Canonical text form; parse(to_string()) reproduces *this.
    std::string to_string() const {
        std::string out = family_name();
        out += ':';
        for (std::size_t i = 0; i < params_.size(); ++i) {
            if (i) out += ',';
            out += detail::format_real(params_[i]);
        }
        if (!(domain_ == Interval::half_line())) {
            out += '@' + detail::format_real(domain_.a) + ',' + detail::format_real(domain_.b);
        }
        return out;
    }

    double operator()(double x) const {
        switch (family_) {
            case Family::power: return std::pow(x, params_[0]);
            case Family::abs_power: return std::pow(std::abs(x - params_[1]), params_[0]);
            case Family::affine: return params_[0] + params_[1] * x;
            case Family::quadratic: return params_[0] + x * (params_[1] + x * params_[2]);
            case Family::exponential: return std::exp(params_[0] * x);
            case Family::polynomial: {
                double acc = 0.0;
                for (auto it = params_.rbegin(); it != params_.rend(); ++it) acc = acc * x + *it;
                return acc;
            }
        }
        return std::numeric_limits<double>::quiet_NaN();
    }

    bool has_derivative() const noexcept {
        // |x - c| with exponent <= 1 has no derivative at c.
        return !(family_ == Family::abs_power && params_[0] <= 1.0 &&
                 domain_.contains(params_[1]));
    }

    /// f'(x). Infinite where the derivative blows up (x^p, p < 1, at 0).
    double derivative(double x) const {
        if (!has_derivative()) {
            throw CapabilityError("function " + to_string() + " has no analytic derivative");
        }
        switch (family_) {
            case Family::power: {
                const double p = params_[0];
                if (p == 1.0) return 1.0;
                if (x == 0.0) return p > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
                return p * std::pow(x, p - 1.0);
            }
            case Family::abs_power: {
                const double p = params_[0];
                const double d = x - params_[1];
                if (d == 0.0) return 0.0;
                return p * std::pow(std::abs(d), p - 1.0) * (d > 0.0 ? 1.0 : -1.0);
            }
            case Family::affine: return params_[1];
            case Family::quadratic: return params_[1] + 2.0 * params_[2] * x;
            case Family::exponential: return params_[0] * std::exp(params_[0] * x);
            case Family::polynomial: {
                double acc = 0.0;
                for (std::size_t i = params_.size(); i-- > 1;) {
                    acc = acc * x + static_cast<double>(i) * params_[i];
                }
                return acc;
            }
        }
        return std::numeric_limits<double>::quiet_NaN();
    }

    /// True when f' exists and is bounded on the closed interval.
    bool derivative_bounded_on(const Interval& iv) const {
        if (!has_derivative() || !iv.bounded()) return false;
        switch (family_) {
            case Family::power: return params_[0] >= 1.0 || iv.a > 0.0;
            case Family::abs_power: return params_[0] >= 1.0 || !iv.contains(params_[1]);
            default: return true;
        }
    }

    // ----- class labels ----------------------------------------------------

    Label convex_on(const Interval& iv) const {
        require_bounded(iv);
        switch (family_) {
            case Family::power:
            case Family::abs_power: return params_[0] >= 1.0 ? Label::yes : Label::no;
            case Family::affine:
            case Family::exponential: return Label::yes;
            case Family::quadratic: return params_[2] >= 0.0 ? Label::yes : Label::no;
            case Family::polynomial:
                if (params_.size() <= 2) return Label::yes;
                if (params_.size() == 3) return params_[2] >= 0.0 ? Label::yes : Label::no;
                return Label::unknown;
        }
        return Label::unknown;
    }

    Label nonnegative_on(const Interval& iv) const {
        require_bounded(iv);
        switch (family_) {
            case Family::power:
            case Family::abs_power:
            case Family::exponential: return Label::yes;
            case Family::affine:
                return std::min((*this)(iv.a), (*this)(iv.b)) >= 0.0 ? Label::yes : Label::no;
            case Family::quadratic: {
                double lo = std::min((*this)(iv.a), (*this)(iv.b));
                if (params_[2] != 0.0) {
                    const double vertex = -params_[1] / (2.0 * params_[2]);
                    if (iv.contains(vertex)) lo = std::min(lo, (*this)(vertex));
                }
                return lo >= 0.0 ? Label::yes : Label::no;
            }
            case Family::polynomial: return Label::unknown;
        }
        return Label::unknown;
    }

    /// s-convexity in the second sense restricted to iv (iv.a >= 0).
    Label s_convex_on(double s, const Interval& iv) const {
        require_bounded(iv);
        if (s == 1.0) return convex_on(iv);
        if (convex_on(iv) == Label::yes && nonnegative_on(iv) == Label::yes) return Label::yes;
        if (family_ == Family::power) {
            // x^p is s-convex on [0, inf) iff p >= s; the witness for p < s
            // is y = 0.
            if (params_[0] >= s) return Label::yes;
            if (iv.a == 0.0) return Label::no;
        }
        return Label::unknown;
    }

    /// m-convexity on iv = [0, B].
    Label m_convex_on(double m, const Interval& iv) const {
        require_bounded(iv);
        if (iv.a != 0.0) throw DomainError("m-convexity is defined on intervals [0, b]");
        if (m == 1.0) return convex_on(iv);
        // t = 0, x = y = 0 gives f(0) <= m f(0), so f(0) must be <= 0.
        const double f0 = (*this)(0.0);
        if (f0 > 0.0) return Label::no;
        if (convex_on(iv) == Label::yes) return Label::yes;
        // Concave powers: x = y, t = 0 gives (m x)^p <= m x^p, false for p < 1.
        if (family_ == Family::power && params_[0] < 1.0) return Label::no;
        return Label::unknown;
    }

    /// s-convexity of |f'|^q on iv.
    Label abs_derivative_pow_s_convex_on(double q, double s, const Interval& iv) const {
        require_bounded(iv);
        if (!derivative_bounded_on(iv)) return Label::no;
        switch (family_) {
            case Family::affine:
            case Family::quadratic:
            case Family::exponential:
                // constant, |linear|^q or exponential: convex and nonnegative.
                return Label::yes;
            case Family::power: {
                const double p = params_[0];
                if (p == 1.0) return Label::yes;
                if (p < 1.0) return Label::yes;  // iv.a > 0 here: x^(negative) is convex
                const double r = (p - 1.0) * q;
                if (r >= 1.0 || r >= s) return Label::yes;
                return iv.a == 0.0 ? Label::no : Label::unknown;
            }
            case Family::abs_power: {
                const double p = params_[0];
                if (p == 1.0) return Label::yes;  // constant away from the kink
                if (p > 1.0 && (p - 1.0) * q >= 1.0) return Label::yes;
                return Label::unknown;
            }
            case Family::polynomial: return Label::unknown;
        }
        return Label::unknown;
    }

    std::string family_name() const {
        switch (family_) {
            case Family::power: return "power";
            case Family::abs_power: return "abs-power";
            case Family::affine: return "affine";
            case Family::quadratic: return "quadratic";
            case Family::exponential: return "exp";
            case Family::polynomial: return "poly";
        }
        return "?";
    }

private:
    FuncSpec(Family fam, std::vector<double> params)
        : family_(fam), params_(std::move(params)), domain_(Interval::half_line()) {
        for (double v : params_) {
            if (!std::isfinite(v)) throw DomainError("function parameters must be finite");
        }
    }

    static void require_bounded(const Interval& iv) {
        if (!iv.bounded()) throw DomainError("class labels need a bounded interval");
    }

    Family family_;
    std::vector<double> params_;
    Interval domain_;
};

// ---------------------------------------------------------------------------
// Certifiers

struct Witness {
    double x;
    double y;
    double weight;  ///< lambda for s-convexity, t for m-convexity
    double lhs;
    double rhs;
    double violation;  ///< lhs - rhs
};

struct ConvexityVerdict {
    bool holds = true;
    std::optional<Witness> witness;  ///< worst violation found
    std::size_t samples_checked = 0;
};

struct CertifierOptions {
    int grid_n = 33;
    std::size_t random_samples = 10000;
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based uniform on [0, 1): stream `seed`, position `counter`.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(mix64(mix64(seed) ^ counter) >> 11) * 0x1.0p-53;
}

// Shared falsification loop. `Ineq` maps (x, y, w) to {lhs, rhs}.
template <class Ineq>
ConvexityVerdict falsify(const Ineq& ineq, const Interval& dom, int grid_n, std::uint64_t seed,
                         const CertifierOptions& opt) {
    ConvexityVerdict verdict;
    double worst = 0.0;
    auto probe = [&](double x, double y, double w) {
        const auto [lhs, rhs] = ineq(x, y, w);
        ++verdict.samples_checked;
        const double violation = lhs - rhs;
        const double tol = opt.abs_tol + opt.rel_tol * std::abs(rhs);
        if (violation > tol && violation > worst) {
            worst = violation;
            verdict.holds = false;
            verdict.witness = Witness{x, y, w, lhs, rhs, violation};
        }
    };

    const double span = dom.length();
    const double step = 1.0 / static_cast<double>(grid_n - 1);
    for (int i = 0; i < grid_n; ++i) {
        const double x = i + 1 == grid_n ? dom.b : dom.a + span * (i * step);
        for (int j = 0; j < grid_n; ++j) {
            const double y = j + 1 == grid_n ? dom.b : dom.a + span * (j * step);
            for (int k = 0; k < grid_n; ++k) {
                probe(x, y, k + 1 == grid_n ? 1.0 : k * step);
            }
        }
    }
    for (std::size_t n = 0; n < opt.random_samples; ++n) {
        const double x = dom.a + span * counter_uniform(seed, 3 * n);
        const double y = dom.a + span * counter_uniform(seed, 3 * n + 1);
        probe(x, y, counter_uniform(seed, 3 * n + 2));
    }
    return verdict;
}

inline void check_certifier_domain(const FuncSpec& f, const Interval& dom, int grid_n) {
    if (!dom.bounded()) throw DomainError("certifier needs a bounded interval");
    if (dom.a < 0.0) throw DomainError("certifier interval must lie in [0, inf)");
    if (!f.domain().contains(dom)) {
        throw DomainError("certifier interval leaves the domain of " + f.to_string());
    }
    if (grid_n < 3) throw DomainError("certifier grid_n must be at least 3");
}

}  // namespace detail

/// f(lx + (1-l)y) <= l^s f(x) + (1-l)^s f(y) on a grid over (x, y, l) plus
/// seeded random triples.
inline ConvexityVerdict check_s_convex(const FuncSpec& f, double s, const Interval& dom,
                                       int grid_n = 33, std::uint64_t seed = 0,
                                       const CertifierOptions& opt = {}) {
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("check_s_convex: s must lie in (0, 1]");
    detail::check_certifier_domain(f, dom, grid_n);
    auto ineq = [&](double x, double y, double lam) {
        const double mu = 1.0 - lam;
        const double wl = s == 1.0 ? lam : std::pow(lam, s);
        const double wm = s == 1.0 ? mu : std::pow(mu, s);
        return std::pair{f(lam * x + mu * y), wl * f(x) + wm * f(y)};
    };
    return detail::falsify(ineq, dom, grid_n, seed, opt);
}

/// f(tx + m(1-t)y) <= t f(x) + m(1-t) f(y) on dom = [0, b].
inline ConvexityVerdict check_m_convex(const FuncSpec& f, double m, const Interval& dom,
                                       int grid_n = 33, std::uint64_t seed = 0,
                                       const CertifierOptions& opt = {}) {
    if (!(m > 0.0 && m <= 1.0)) throw DomainError("check_m_convex: m must lie in (0, 1]");
    if (dom.a != 0.0) throw DomainError("check_m_convex: interval must be [0, b]");
    detail::check_certifier_domain(f, dom, grid_n);
    auto ineq = [&](double x, double y, double t) {
        const double w = m * (1.0 - t);
        return std::pair{f(t * x + w * y), t * f(x) + w * f(y)};
    };
    return detail::falsify(ineq, dom, grid_n, seed, opt);
}

/// Ordinary convexity on the same grid and random stream.
inline ConvexityVerdict check_convex(const FuncSpec& f, const Interval& dom, int grid_n = 33,
                                     std::uint64_t seed = 0, const CertifierOptions& opt = {}) {
    detail::check_certifier_domain(f, dom, grid_n);
    auto ineq = [&](double x, double y, double lam) {
        const double mu = 1.0 - lam;
        return std::pair{f(lam * x + mu * y), lam * f(x) + mu * f(y)};
    };
    return detail::falsify(ineq, dom, grid_n, seed, opt);
}

}  // namespace hhfrac
