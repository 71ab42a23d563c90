#pragma once

// Riemann-Liouville fractional integrals
//
//   left  (J_{a+}^alpha f)(x) = 1/Gamma(alpha) int_a^x (x-t)^(alpha-1) f(t) dt,  x > a
//   right (J_{b-}^alpha f)(x) = 1/Gamma(alpha) int_x^b (t-x)^(alpha-1) f(t) dt,  x < b
//
// Order zero is the identity operator and is evaluated as f(x) directly.

#include <cmath>
#include <string>

#include "hhfrac/core.hpp"
#include "hhfrac/quadrature.hpp"
#include "hhfrac/specfun.hpp"

namespace hhfrac {

/// Order of a fractional integral. Positive, or the distinguished identity
/// order 0 obtained through FracOrder::identity().
class FracOrder {
public:
    FracOrder(double alpha) : alpha_(alpha) {  // NOLINT(google-explicit-constructor)
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw DomainError("fractional order must be positive and finite, got " +
                              std::to_string(alpha));
        }
    }

    static FracOrder identity() noexcept { return FracOrder(); }

    bool is_identity() const noexcept { return alpha_ == 0.0; }
    double value() const noexcept { return alpha_; }

private:
    FracOrder() noexcept : alpha_(0.0) {}
    double alpha_;
};

/// Left operator with the quadrature diagnostics, scaled by 1/Gamma(alpha).
template <RealFunction F>
QuadResult rl_left_detailed(const F& f, double a, FracOrder alpha, double x,
                            const Tolerance& tol = {}) {
    if (alpha.is_identity()) {
        return {static_cast<double>(f(x)), 0.0, 1};
    }
    if (!(x > a)) {
        throw DomainError("rl_left: evaluation point must exceed the base point a");
    }
    auto r = integrate_singular(f, a, x, alpha.value(), KernelSide::left, tol);
    const double g = gamma_fn(alpha.value());
    r.value /= g;
    r.err_estimate /= g;
    return r;
}

/// Right operator with the quadrature diagnostics, scaled by 1/Gamma(alpha).
template <RealFunction F>
QuadResult rl_right_detailed(const F& f, double b, FracOrder alpha, double x,
                             const Tolerance& tol = {}) {
    if (alpha.is_identity()) {
        return {static_cast<double>(f(x)), 0.0, 1};
    }
    if (!(x < b)) {
        throw DomainError("rl_right: evaluation point must lie below the base point b");
    }
    auto r = integrate_singular(f, x, b, alpha.value(), KernelSide::right, tol);
    const double g = gamma_fn(alpha.value());
    r.value /= g;
    r.err_estimate /= g;
    return r;
}

/// (J_{a+}^alpha f)(x).
template <RealFunction F>
double rl_left(const F& f, double a, FracOrder alpha, double x, const Tolerance& tol = {}) {
    return rl_left_detailed(f, a, alpha, x, tol).value;
}

/// (J_{b-}^alpha f)(x).
template <RealFunction F>
double rl_right(const F& f, double b, FracOrder alpha, double x, const Tolerance& tol = {}) {
    return rl_right_detailed(f, b, alpha, x, tol).value;
}

}  // namespace hhfrac
