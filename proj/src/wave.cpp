#include "ris/wave.hpp"

#include <cmath>
#include <stdexcept>

namespace ris {

MediumVacuum vacuum_params(double frequency_hz) {
    if (!(frequency_hz > 0.0))
        throw std::domain_error("vacuum_params: frequency must be positive");

    MediumVacuum m;
    m.frequency = frequency_hz;
    m.wavelength = kSpeedOfLight / frequency_hz;
    m.wavenumber = 2.0 * kPi / m.wavelength;
    m.angular_frequency = 2.0 * kPi * frequency_hz;
    m.permeability = kVacuumPermeability;
    m.permittivity = 1.0 / (kVacuumPermeability * kSpeedOfLight * kSpeedOfLight);
    m.impedance = kVacuumPermeability * kSpeedOfLight;
    return m;
}

void ReflectorGeometry::validate() const {
    if (!(std::abs(theta_i) < kPi / 2.0) || !(std::abs(theta_r) < kPi / 2.0))
        throw std::domain_error("ReflectorGeometry: angles must satisfy |theta| < pi/2");
    if (!(p0 > 0.0))
        throw std::domain_error("ReflectorGeometry: P0 must be positive");
    if (!(ar > 0.0))
        throw std::domain_error("ReflectorGeometry: A_r must be positive");
}

TangentialSurfaceFields te_plane_wave_fields(const ReflectorGeometry& geom,
                                             const MediumVacuum& medium) {
    geom.validate();

    const double k = medium.wavenumber;
    const double eta = medium.impedance;
    const double e0 = std::sqrt(2.0 * eta * geom.p0);
    const double h0 = std::sqrt(2.0 * geom.p0 / eta);
    const double sin_i = std::sin(geom.theta_i);
    const double sin_r = std::sin(geom.theta_r);
    const double cos_i = std::cos(geom.theta_i);
    const double cos_r = std::cos(geom.theta_r);
    const double ar = geom.ar;

    const ComplexProfile zero = [](double) { return cdouble(0.0, 0.0); };

    TangentialSurfaceFields f;
    f.incident.e_x = zero;
    f.incident.e_y = [=](double x) { return e0 * std::exp(cdouble(0.0, -k * sin_i * x)); };
    f.incident.h_x = [=](double x) { return h0 * cos_i * std::exp(cdouble(0.0, -k * sin_i * x)); };
    f.incident.h_y = zero;

    f.reflected.e_x = zero;
    f.reflected.e_y = [=](double x) { return e0 * ar * std::exp(cdouble(0.0, -k * sin_r * x)); };
    f.reflected.h_x = [=](double x) { return -h0 * ar * cos_r * std::exp(cdouble(0.0, -k * sin_r * x)); };
    f.reflected.h_y = zero;

    f.transmitted.e_x = zero;
    f.transmitted.e_y = zero;
    f.transmitted.h_x = zero;
    f.transmitted.h_y = zero;
    return f;
}

double fraunhofer_distance(double largest_dimension, const MediumVacuum& medium) {
    if (!(largest_dimension > 0.0))
        throw std::domain_error("fraunhofer_distance: dimension must be positive");
    return 2.0 * largest_dimension * largest_dimension / medium.wavelength;
}

} // namespace ris
