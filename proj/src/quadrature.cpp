#include "ris/quadrature.hpp"

#include <cmath>

#include "ris/errors.hpp"
#include "ris/wave.hpp"

namespace ris {

namespace {

GaussRule16 compute_rule16() {
    GaussRule16 rule{};
    const int n = 16;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n, starting from the Chebyshev estimate.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.node[i] = -z;
        rule.node[n - 1 - i] = z;
        rule.weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weight[n - 1 - i] = rule.weight[i];
    }
    return rule;
}

template <typename T>
T panel_sum(const std::function<T(double)>& f, double a, double b, int panels) {
    const GaussRule16& rule = gauss_rule16();
    const double h = (b - a) / panels;
    T total{};
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        T acc{};
        for (int i = 0; i < 16; ++i)
            acc += rule.weight[i] * f(mid + half * rule.node[i]);
        total += half * acc;
    }
    return total;
}

template <typename T, typename Result>
Result integrate_impl(const std::function<T(double)>& f, double a, double b,
                      const QuadratureOptions& opt) {
    int panels = opt.initial_panels < 1 ? 1 : opt.initial_panels;
    T prev = panel_sum(f, a, b, panels);
    std::size_t nodes = std::size_t(panels) * 16;

    while (true) {
        const int next = panels * 2;
        const T cur = panel_sum(f, a, b, next);
        nodes += std::size_t(next) * 16;
        const double err = std::abs(cur - prev);
        const double tol = std::max(opt.rel_tol * std::abs(cur), opt.abs_tol);
        if (err <= tol) {
            Result r;
            r.value = cur;
            r.error_estimate = err;
            r.nodes = nodes;
            r.panels = next;
            return r;
        }
        if (std::size_t(next) * 32 > opt.max_nodes)
            throw QuadratureError("quadrature: node budget exhausted",
                                  std::complex<double>(cur), err);
        panels = next;
        prev = cur;
    }
}

} // namespace

const GaussRule16& gauss_rule16() {
    static const GaussRule16 rule = compute_rule16();
    return rule;
}

QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, const QuadratureOptions& opt) {
    return integrate_impl<double, QuadratureResult>(f, a, b, opt);
}

ComplexQuadratureResult integrate(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, const QuadratureOptions& opt) {
    return integrate_impl<std::complex<double>, ComplexQuadratureResult>(f, a, b, opt);
}

double integrate_fixed(const std::function<double(double)>& f,
                       double a, double b, int panels) {
    return panel_sum(f, a, b, panels);
}

std::complex<double> integrate_fixed(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, int panels) {
    return panel_sum(f, a, b, panels);
}

} // namespace ris
