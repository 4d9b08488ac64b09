#include "ris/reflection.hpp"

#include <cmath>

#include "ris/errors.hpp"

namespace ris {

namespace {
constexpr double kDenomFloor = 1e-12;

bool ar_is_em_unitary(const ReflectorGeometry& geom) {
    const double ar_em = std::sqrt(std::cos(geom.theta_i) / std::cos(geom.theta_r));
    return std::abs(geom.ar - ar_em) <= 1e-12 * ar_em;
}
} // namespace

double r_factor(ReflectionKind kind, const ReflectorGeometry& geom) {
    if (kind == ReflectionKind::em)
        return std::cos(geom.theta_r) / std::cos(geom.theta_i);
    return 1.0;
}

ReflectionProfile r_em_profile(const ReflectorGeometry& geom, const MediumVacuum& medium) {
    geom.validate();
    ReflectionProfile p;
    p.kind = ReflectionKind::em;
    p.geom = geom;
    p.period = surface_period(geom, medium);
    const double ar = geom.ar;
    p.value = [=](double x) { return ar * phase_walk(geom, medium, x); };
    return p;
}

ReflectionProfile r_z_profile(const ReflectorGeometry& geom, const MediumVacuum& medium) {
    geom.validate();
    ReflectionProfile p;
    p.kind = ReflectionKind::z;
    p.geom = geom;
    p.period = surface_period(geom, medium);
    const double cos_i = std::cos(geom.theta_i);
    const double cos_r = std::cos(geom.theta_r);
    const double ar = geom.ar;
    p.value = [=](double x) {
        const cdouble phi = phase_walk(geom, medium, x);
        const cdouble den = 2.0 * cos_i - ar * (cos_r - cos_i) * phi;
        if (std::abs(den) < kDenomFloor)
            throw SingularPointError("r_z_profile: vanishing denominator", x);
        return ar * (cos_r + cos_i) * phi / den;
    };
    return p;
}

ReflectionProfile r_from_susceptibility(ComplexProfile chi_ee_yy, ReflectionKind kind,
                                        const ReflectorGeometry& geom,
                                        const MediumVacuum& medium) {
    geom.validate();
    ReflectionProfile p;
    p.kind = kind;
    p.geom = geom;
    p.period = surface_period(geom, medium);
    const double g = medium.wavenumber / (2.0 * std::cos(geom.theta_i));
    const double r = r_factor(kind, geom);
    p.value = [=](double x) {
        const cdouble jg_chi = cdouble(0.0, g) * chi_ee_yy(x);
        const cdouble den = r - jg_chi;
        if (std::abs(den) < kDenomFloor)
            throw SingularPointError("r_from_susceptibility: vanishing denominator", x);
        return (1.0 + jg_chi) / den;
    };
    return p;
}

ComplexProfile susceptibility_from_r(const ReflectionProfile& profile,
                                     const MediumVacuum& medium) {
    const double k = medium.wavenumber;
    const double cos_i = std::cos(profile.geom.theta_i);
    const double r = r_factor(profile.kind, profile.geom);
    const ComplexProfile value = profile.value;
    return [=](double x) {
        const cdouble rx = value(x);
        const cdouble den = 1.0 + rx;
        if (std::abs(den) < kDenomFloor)
            throw SingularPointError("susceptibility_from_r: R(x) = -1", x);
        return cdouble(0.0, 2.0 / k) * cos_i * (1.0 - r * rx) / den;
    };
}

WaveImpedances wave_impedances(const ReflectorGeometry& geom, const MediumVacuum& medium,
                               ReflectionKind kind) {
    geom.validate();
    WaveImpedances z;
    z.z_incident = medium.impedance / std::cos(geom.theta_i);
    if (kind == ReflectionKind::em)
        z.z_reflected = -medium.impedance / std::cos(geom.theta_r);
    else
        z.z_reflected = -medium.impedance / std::cos(geom.theta_i);
    return z;
}

ImpedanceTriple z1_profile(const ReflectorGeometry& geom, const MediumVacuum& medium) {
    geom.validate();
    ImpedanceTriple t;
    t.geom = geom;
    const double eta = medium.impedance;
    const double cos_i = std::cos(geom.theta_i);
    const double cos_r = std::cos(geom.theta_r);
    const double ar = geom.ar;

    if (ar_is_em_unitary(geom)) {
        const double sqi = std::sqrt(cos_i);
        const double sqr = std::sqrt(cos_r);
        t.z1 = [=](double x) {
            const cdouble phi = phase_walk(geom, medium, x);
            const cdouble den = sqi - sqr * phi;
            if (std::abs(den) < kDenomFloor)
                throw SingularPointError("z1_profile: vanishing denominator", x);
            return eta / (sqi * sqr) * (sqr + sqi * phi) / den;
        };
    } else {
        t.z1 = [=](double x) {
            const cdouble phi = phase_walk(geom, medium, x);
            const cdouble den = cos_i - ar * cos_i * phi;
            if (std::abs(den) < kDenomFloor)
                throw SingularPointError("z1_profile: vanishing denominator", x);
            return eta * (1.0 + ar * phi) / den;
        };
    }
    t.z2 = [](double) { return cdouble(0.0, 0.0); };
    t.z3 = [](double) { return cdouble(0.0, 0.0); };
    return t;
}

double z1_form_discrepancy(const ReflectorGeometry& geom, const MediumVacuum& medium,
                           int samples) {
    geom.validate();
    const double eta = medium.impedance;
    const double cos_i = std::cos(geom.theta_i);
    const double cos_r = std::cos(geom.theta_r);
    const double sqi = std::sqrt(cos_i);
    const double sqr = std::sqrt(cos_r);
    const double ar = geom.ar;

    const SurfacePeriod period = surface_period(geom, medium);
    const double span = period.is_periodic() ? period.length : medium.wavelength;

    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = span * (i + 0.5) / samples;
        const cdouble phi = phase_walk(geom, medium, x);
        const cdouble den_plain = cos_i - ar * cos_i * phi;
        const cdouble den_sqrt = sqi - sqr * phi;
        if (std::abs(den_plain) < kDenomFloor || std::abs(den_sqrt) < kDenomFloor)
            continue;
        const cdouble plain = eta * (1.0 + ar * phi) / den_plain;
        const cdouble root = eta / (sqi * sqr) * (sqr + sqi * phi) / den_sqrt;
        worst = std::max(worst, std::abs(plain - root) / std::abs(root));
    }
    return worst;
}

ReflectionProfile r_from_impedance(const ImpedanceTriple& triple, const MediumVacuum& medium) {
    const ReflectorGeometry geom = triple.geom;
    geom.validate();
    ReflectionProfile p;
    p.kind = ReflectionKind::z;
    p.geom = geom;
    p.period = surface_period(geom, medium);
    const double z_i = medium.impedance / std::cos(geom.theta_i);
    const ComplexProfile z1 = triple.z1;
    p.value = [=](double x) {
        const cdouble z = z1(x);
        const cdouble den = z + z_i;
        if (std::abs(den) < kDenomFloor * z_i)
            throw SingularPointError("r_from_impedance: Z1 + Z_i = 0", x);
        return (z - z_i) / den;
    };
    return p;
}

} // namespace ris
