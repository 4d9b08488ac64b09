#include "ris/synthesis.hpp"

#include <cmath>

#include "ris/errors.hpp"

namespace ris {

namespace {

constexpr double kDenomFloor = 1e-12;

// chi = scale * (t - i - r) / (t + i + r), shared by all four components.
ComplexProfile jump_over_sum(ComplexProfile num_t, ComplexProfile num_i, ComplexProfile num_r,
                             ComplexProfile den_t, ComplexProfile den_i, ComplexProfile den_r,
                             cdouble scale, double den_scale, const char* name) {
    return [=](double x) {
        const cdouble den = den_t(x) + den_i(x) + den_r(x);
        if (std::abs(den) < kDenomFloor * den_scale)
            throw SingularPointError(std::string(name) + ": vanishing field sum", x);
        return scale * (num_t(x) - num_i(x) - num_r(x)) / den;
    };
}

} // namespace

SusceptibilityQuad susceptibilities_from_fields(const TangentialSurfaceFields& f,
                                                const MediumVacuum& medium) {
    const cdouble inv_jwe = cdouble(0.0, -2.0) / (medium.angular_frequency * medium.permittivity);
    const cdouble inv_jwm = cdouble(0.0, -2.0) / (medium.angular_frequency * medium.permeability);

    // Denominator floors are scaled to the natural field magnitudes so the
    // singularity test is insensitive to the choice of P0.
    const double e_scale = std::max(std::abs(f.incident.e_y(0.0)) + std::abs(f.incident.e_x(0.0)), 1.0);
    const double h_scale = std::max(std::abs(f.incident.h_x(0.0)) + std::abs(f.incident.h_y(0.0)), 1.0);

    SusceptibilityQuad q;
    q.chi_ee_xx = jump_over_sum(f.transmitted.h_y, f.incident.h_y, f.reflected.h_y,
                                f.transmitted.e_x, f.incident.e_x, f.reflected.e_x,
                                -inv_jwe, e_scale, "chi_ee_xx");
    q.chi_ee_yy = jump_over_sum(f.transmitted.h_x, f.incident.h_x, f.reflected.h_x,
                                f.transmitted.e_y, f.incident.e_y, f.reflected.e_y,
                                inv_jwe, e_scale, "chi_ee_yy");
    q.chi_mm_xx = jump_over_sum(f.transmitted.e_y, f.incident.e_y, f.reflected.e_y,
                                f.transmitted.h_x, f.incident.h_x, f.reflected.h_x,
                                inv_jwm, h_scale, "chi_mm_xx");
    q.chi_mm_yy = jump_over_sum(f.transmitted.e_x, f.incident.e_x, f.reflected.e_x,
                                f.transmitted.h_y, f.incident.h_y, f.reflected.h_y,
                                -inv_jwm, h_scale, "chi_mm_yy");
    return q;
}

cdouble phase_walk(const ReflectorGeometry& geom, const MediumVacuum& medium, double x) {
    const double dsin = std::sin(geom.theta_r) - std::sin(geom.theta_i);
    return std::exp(cdouble(0.0, -medium.wavenumber * dsin * x));
}

ComplexProfile reflector_susceptibility(const ReflectorGeometry& geom,
                                        const MediumVacuum& medium) {
    geom.validate();
    const double k = medium.wavenumber;
    const double cos_i = std::cos(geom.theta_i);
    const double cos_r = std::cos(geom.theta_r);
    const double ar = geom.ar;
    return [=](double x) {
        const cdouble phi = phase_walk(geom, medium, x);
        const cdouble den = 1.0 + ar * phi;
        if (std::abs(den) < kDenomFloor)
            throw SingularPointError("reflector_susceptibility: 1 + A_r Phi(x) = 0", x);
        return cdouble(0.0, 2.0 / k) * (cos_i - ar * cos_r * phi) / den;
    };
}

SurfacePeriod surface_period(const ReflectorGeometry& geom, const MediumVacuum& medium) {
    geom.validate();
    const double dsin = std::abs(std::sin(geom.theta_r) - std::sin(geom.theta_i));
    if (dsin == 0.0)
        return SurfacePeriod::uniform();
    return SurfacePeriod::periodic(2.0 * kPi / (medium.wavenumber * dsin));
}

} // namespace ris
