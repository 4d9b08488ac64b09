#include "ris/power.hpp"

#include <cmath>
#include <stdexcept>

#include "ris/quadrature.hpp"

namespace ris {

const char* to_string(PowerClass c) {
    switch (c) {
    case PowerClass::locally_passive: return "LOCALLY_PASSIVE";
    case PowerClass::globally_passive_only: return "GLOBALLY_PASSIVE";
    case PowerClass::globally_active: return "GLOBALLY_ACTIVE";
    case PowerClass::unitary_efficiency: return "UNITARY_EFFICIENCY";
    }
    return "?";
}

namespace {

double period_average(const RealProfile& f, const SurfacePeriod& period) {
    if (!period.is_periodic())
        return f(0.0); // local flow is constant for uniform profiles

    // Absolute floor on the error so pure-oscillation integrands whose
    // average is an exact zero still converge.
    double scale = 0.0;
    for (int i = 0; i <= 8; ++i)
        scale = std::max(scale, std::abs(f(period.length * i / 8.0)));
    const QuadratureOptions opt{.initial_panels = 16, .rel_tol = 1e-9,
                                .abs_tol = 1e-14 * scale + 1e-300};
    const QuadratureResult res = integrate(f, 0.0, period.length, opt);
    return res.value / period.length;
}

PowerClass classify_impl(const RealProfile& local, double global, const SurfacePeriod& period,
                         double tol_local, double tol_global, int grid_points) {
    if (std::abs(global) <= tol_global)
        return PowerClass::unitary_efficiency;

    const double span = period.is_periodic() ? period.length : 1.0;
    bool local_gain = false;
    for (int i = 0; i < grid_points; ++i) {
        const double x = span * i / grid_points;
        if (local(x) > tol_local) {
            local_gain = true;
            break;
        }
    }
    if (!local_gain)
        return PowerClass::locally_passive;
    if (global > tol_global)
        return PowerClass::globally_active;
    return PowerClass::globally_passive_only;
}

} // namespace

PowerReport pnet_direct(const TangentialSurfaceFields& fields, const SurfacePeriod& period,
                        double p0) {
    const ComplexProfile e_i = fields.incident.e_y;
    const ComplexProfile e_r = fields.reflected.e_y;
    const ComplexProfile h_i = fields.incident.h_x;
    const ComplexProfile h_r = fields.reflected.h_x;

    PowerReport report;
    report.period = period;
    report.p0 = p0;
    report.pnet_local = [=](double x) {
        const cdouble e_par = e_i(x) + e_r(x);
        const cdouble h_par = h_i(x) + h_r(x);
        return -0.5 * std::real(e_par * std::conj(h_par));
    };
    report.pnet_global = period_average(report.pnet_local, period);
    report.classification = classify(report);
    return report;
}

PowerReport pnet_benchmark(const ReflectorGeometry& geom, const MediumVacuum& medium) {
    geom.validate();
    const double p0 = geom.p0;
    const double cos_i = std::cos(geom.theta_i);
    const double cos_r = std::cos(geom.theta_r);
    const double ar = geom.ar;
    const double kdsin = medium.wavenumber * (std::sin(geom.theta_r) - std::sin(geom.theta_i));

    PowerReport report;
    report.period = surface_period(geom, medium);
    report.p0 = p0;
    report.pnet_local = [=](double x) {
        return p0 * ar * ar * cos_r - p0 * cos_i
             + p0 * ar * (cos_r - cos_i) * std::cos(kdsin * x);
    };
    report.pnet_global = p0 * (ar * ar * cos_r - cos_i);
    report.classification = classify(report);
    return report;
}

PowerReport pnet_from_reflection(const ReflectionProfile& profile) {
    const ReflectorGeometry geom = profile.geom;
    geom.validate();
    const double p0 = geom.p0;
    const double cos_i = std::cos(geom.theta_i);
    const double r = r_factor(profile.kind, geom);
    const ComplexProfile value = profile.value;

    PowerReport report;
    report.period = profile.period;
    report.p0 = p0;
    report.pnet_local = [=](double x) {
        const cdouble rx = value(x);
        return p0 * cos_i * (r * std::norm(rx) - 1.0 - (1.0 - r) * std::real(rx));
    };

    const RealProfile r_squared = [=](double x) { return std::norm(value(x)); };
    report.pnet_global = p0 * r * cos_i * period_average(r_squared, profile.period)
                       - p0 * cos_i;
    report.classification = classify(report);
    return report;
}

double ar_unitary_em(double theta_i, double theta_r) {
    const double cos_i = std::cos(theta_i);
    const double cos_r = std::cos(theta_r);
    if (!(cos_r > 0.0) || !(cos_i > 0.0))
        throw std::domain_error("ar_unitary_em: grazing geometry");
    return std::sqrt(cos_i / cos_r);
}

double ar_unitary_z(double theta_i, double theta_r) {
    const double cos_i = std::cos(theta_i);
    const double cos_r = std::cos(theta_r);
    if (!(cos_r > 0.0) || !(cos_i > 0.0))
        throw std::domain_error("ar_unitary_z: grazing geometry");
    const double c = cos_r / cos_i;
    return std::sqrt(2.0 / (1.0 + c * c));
}

PowerClass classify(const PowerReport& report, double tol_local, double tol_global,
                    int grid_points) {
    if (tol_local < 0.0) tol_local = 1e-9 * report.p0;
    if (tol_global < 0.0) tol_global = 1e-9 * report.p0;
    return classify_impl(report.pnet_local, report.pnet_global, report.period,
                         tol_local, tol_global, grid_points);
}

} // namespace ris
