#pragma once

// Shared error types and small value types used across hhfrac.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hhfrac {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation needs something the function model does not provide
/// (e.g. an analytic derivative).
class CapabilityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed configuration or command-line input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A strictly positive, finite real. Converts implicitly from double and
/// throws DomainError on construction when the invariant fails.
class PositiveReal {
public:
    PositiveReal(double v) : value_(v) {  // NOLINT(google-explicit-constructor)
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("expected a positive finite real, got " + std::to_string(v));
        }
    }

    double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; }  // NOLINT

private:
    double value_;
};

/// Closed interval [a, b] with a < b. The upper end may be +infinity to
/// denote the half-line [a, inf).
struct Interval {
    double a;
    double b;

    Interval(double lo, double hi) : a(lo), b(hi) {
        if (!(lo < hi) || std::isnan(lo) || std::isnan(hi) || std::isinf(lo)) {
            throw DomainError("interval requires finite a < b, got [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
        }
    }

    static Interval half_line() { return {0.0, std::numeric_limits<double>::infinity()}; }

    double length() const noexcept { return b - a; }
    bool bounded() const noexcept { return std::isfinite(b); }
    bool contains(double x) const noexcept { return x >= a && x <= b; }
    bool contains(const Interval& other) const noexcept { return other.a >= a && other.b <= b; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace hhfrac
