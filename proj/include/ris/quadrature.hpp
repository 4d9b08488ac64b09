#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>

namespace ris {

/// 16-point Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussRule16 {
    std::array<double, 16> node;
    std::array<double, 16> weight;
};

/// Nodes and weights computed once by Newton iteration on P_16.
const GaussRule16& gauss_rule16();

struct QuadratureOptions {
    int initial_panels = 4;
    double rel_tol = 1e-9;
    double abs_tol = 0.0;                  // extra absolute floor on the error
    std::size_t max_nodes = std::size_t(1) << 20;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // |last refinement step|
    std::size_t nodes = 0;
    int panels = 0;
};

struct ComplexQuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    std::size_t nodes = 0;
    int panels = 0;
};

/// Composite 16-node Gauss-Legendre over [a, b] with panel doubling until
/// successive estimates differ by less than max(rel_tol*|I|, abs_tol).
/// Throws QuadratureError when the node budget runs out first.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b,
                           const QuadratureOptions& opt = {});

ComplexQuadratureResult integrate(const std::function<std::complex<double>(double)>& f,
                                  double a, double b,
                                  const QuadratureOptions& opt = {});

/// Single non-adaptive pass with a fixed panel count (diagnostics, oracles).
double integrate_fixed(const std::function<double(double)>& f,
                       double a, double b, int panels);
std::complex<double> integrate_fixed(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, int panels);

} // namespace ris
