#pragma once

/**
 * @file quadrature.hpp
 * @brief One-dimensional adaptive quadrature, endpoint-singular kernels and a
 *        slow independent reference integrator.
 *
 * integrate() is a globally adaptive Gauss-Kronrod (7/15) scheme: the panel
 * with the largest local error estimate is bisected until the summed estimate
 * meets max(abs_tol, rel_tol * |value|).
 *
 * integrate_singular() handles the algebraic kernels (b-t)^(alpha-1) and
 * (t-a)^(alpha-1) of Riemann-Liouville operators. For alpha < 1 the endpoint
 * singularity is removed by the substitution u = (b-t)^alpha (resp.
 * u = (t-a)^alpha), which turns the integral into
 *
 *     (1/alpha) * int_0^{(b-a)^alpha} f(b - u^{1/alpha}) du
 *
 * with a bounded integrand.
 *
 * reference_integrate() is composite midpoint + Richardson extrapolation. It
 * shares no code with integrate() and serves as an oracle in tests.
 *
 * Integrands must be side-effect free; every routine here is pure and may be
 * called concurrently.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "hhfrac/core.hpp"

namespace hhfrac {

template <class F>
concept RealFunction = std::invocable<const F&, double> &&
                       std::convertible_to<std::invoke_result_t<const F&, double>, double>;

struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::size_t max_evals = 200000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
            throw DomainError("tolerance: abs_tol and rel_tol must be positive");
        }
        if (max_evals < 15) {
            throw DomainError("tolerance: max_evals must be at least 15");
        }
    }
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t n_evals = 0;
};

/// Thrown when the evaluation budget runs out. Carries the best estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_(best) {}

    const QuadResult& best() const noexcept { return best_; }

private:
    QuadResult best_;
};

enum class KernelSide {
    left,   ///< weight (b - t)^(alpha - 1), singular at t = b
    right,  ///< weight (t - a)^(alpha - 1), singular at t = a
};

namespace detail {

// Kronrod abscissae on [0, 1] of the half rule; xgk[1], xgk[3], xgk[5] are
// the Gauss 7-point nodes. Values from QUADPACK qk15.
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> gk15_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> g7_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double err;
    bool roundoff_limited;

    bool operator<(const Panel& other) const noexcept { return err < other.err; }
};

template <class F>
double sample(const F& f, double x) {
    const double y = static_cast<double>(f(x));
    if (!std::isfinite(y)) {
        throw DomainError("integrand is not finite at x = " + std::to_string(x));
    }
    return y;
}

template <class F>
Panel gauss_kronrod_15(const F& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();

    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = sample(f, center);
    double resk = fc * gk15_weights[7];
    double resg = fc * g7_weights[3];
    double resabs = std::abs(resk);

    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * gk15_nodes[j];
        f1[j] = sample(f, center - dx);
        f2[j] = sample(f, center + dx);
        const double s = f1[j] + f2[j];
        resk += gk15_weights[j] * s;
        resabs += gk15_weights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) {
            resg += g7_weights[j / 2] * s;
        }
    }

    const double reskh = 0.5 * resk;
    double resasc = gk15_weights[7] * std::abs(fc - reskh);
    for (std::size_t j = 0; j < 7; ++j) {
        resasc += gk15_weights[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
    }

    const double ah = std::abs(half);
    resk *= half;
    resabs *= ah;
    resasc *= ah;

    double err = std::abs((resk - resg * half));
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    bool floored = false;
    if (resabs > uflow / (50.0 * eps)) {
        const double floor = 50.0 * eps * resabs;
        if (err <= floor) {
            err = floor;
            floored = true;
        }
    }
    return {a, b, resk, err, floored};
}

inline constexpr std::size_t evals_per_panel = 15;

}  // namespace detail

/// Adaptive Gauss-Kronrod integral of f over [a, b].
template <RealFunction F>
QuadResult integrate(const F& f, double a, double b, const Tolerance& tol = {}) {
    tol.validate();
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate: requires finite a < b");
    }

    std::priority_queue<detail::Panel> heap;
    heap.push(detail::gauss_kronrod_15(f, a, b));
    std::size_t evals = detail::evals_per_panel;
    double total = heap.top().value;
    double total_err = heap.top().err;

    auto finish = [&]() {
        // Re-sum from the panels so the result does not carry drift from the
        // incremental updates.
        double value = 0.0;
        double err = 0.0;
        auto panels = std::move(heap);
        while (!panels.empty()) {
            value += panels.top().value;
            err += panels.top().err;
            panels.pop();
        }
        return QuadResult{value, err, evals};
    };

    while (true) {
        const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
        if (total_err <= target || heap.top().roundoff_limited) {
            return finish();
        }
        if (evals + 2 * detail::evals_per_panel > tol.max_evals) {
            const auto best = finish();
            throw ConvergenceError("integrate: evaluation budget exhausted (err estimate " +
                                       std::to_string(best.err_estimate) + ")",
                                   best);
        }

        const detail::Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            const auto best = finish();
            throw ConvergenceError("integrate: panel width reached machine resolution", best);
        }
        heap.pop();
        const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        evals += 2 * detail::evals_per_panel;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
}

/// int_a^b w(t) f(t) dt with w(t) = (b-t)^(alpha-1) for KernelSide::left and
/// (t-a)^(alpha-1) for KernelSide::right.
template <RealFunction F>
QuadResult integrate_singular(const F& f, double a, double b, PositiveReal alpha, KernelSide side,
                              const Tolerance& tol = {}) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_singular: requires finite a < b");
    }
    const double order = alpha.value();

    if (order >= 1.0) {
        const double power = order - 1.0;
        if (side == KernelSide::left) {
            return integrate(
                [&](double t) { return std::pow(b - t, power) * static_cast<double>(f(t)); }, a,
                b, tol);
        }
        return integrate(
            [&](double t) { return std::pow(t - a, power) * static_cast<double>(f(t)); }, a, b,
            tol);
    }

    const double inv = 1.0 / order;
    const double upper = std::pow(b - a, order);
    QuadResult r;
    if (side == KernelSide::left) {
        r = integrate(
            [&](double u) {
                const double t = std::max(a, b - std::pow(u, inv));
                return static_cast<double>(f(t));
            },
            0.0, upper, tol);
    } else {
        r = integrate(
            [&](double u) {
                const double t = std::min(b, a + std::pow(u, inv));
                return static_cast<double>(f(t));
            },
            0.0, upper, tol);
    }
    r.value *= inv;
    r.err_estimate *= inv;
    return r;
}

/// Composite midpoint rule on 2^levels panels, Richardson-extrapolated over
/// the last three levels. Independent of integrate(); use as an oracle for
/// smooth integrands.
template <RealFunction F>
double reference_integrate(const F& f, double a, double b, int levels) {
    if (!(a < b)) {
        throw DomainError("reference_integrate: requires a < b");
    }
    if (levels < 3 || levels > 26) {
        throw DomainError("reference_integrate: levels must lie in [3, 26]");
    }

    auto midpoint = [&](std::size_t panels) {
        const double h = (b - a) / static_cast<double>(panels);
        // Neumaier summation
        double sum = 0.0;
        double comp = 0.0;
        for (std::size_t i = 0; i < panels; ++i) {
            const double y = static_cast<double>(f(a + (static_cast<double>(i) + 0.5) * h));
            if (!std::isfinite(y)) {
                throw DomainError("reference_integrate: non-finite sample");
            }
            const double t = sum + y;
            comp += std::abs(sum) >= std::abs(y) ? (sum - t) + y : (y - t) + sum;
            sum = t;
        }
        return (sum + comp) * h;
    };

    const std::size_t n = std::size_t{1} << levels;
    const double m0 = midpoint(n / 4);
    const double m1 = midpoint(n / 2);
    const double m2 = midpoint(n);
    const double r0 = (4.0 * m1 - m0) / 3.0;
    const double r1 = (4.0 * m2 - m1) / 3.0;
    return (16.0 * r1 - r0) / 15.0;
}

}  // namespace hhfrac
