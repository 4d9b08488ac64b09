#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ris {

/// Evaluation hit a pole of a closed-form profile. Carries the offending
/// surface coordinate so sweeps can record the point instead of clamping it.
class SingularPointError : public std::runtime_error {
public:
    SingularPointError(const std::string& what, double x)
        : std::runtime_error(what + " at x = " + std::to_string(x)), x_(x) {}

    double where() const noexcept { return x_; }

private:
    double x_;
};

/// Quadrature ran out of its node budget before reaching the requested
/// tolerance. The best estimate so far and the achieved error are kept.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, std::complex<double> best, double err)
        : std::runtime_error(what), best_(best), err_(err) {}

    std::complex<double> best_estimate() const noexcept { return best_; }
    double achieved_error() const noexcept { return err_; }

private:
    std::complex<double> best_;
    double err_;
};

/// An asymptotic formula was requested outside its regime of validity
/// (e.g. the stationary point lies outside the aperture).
class RegimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ris
