#pragma once

#include "ris/wave.hpp"

namespace ris {

/// The four surface susceptibility functions of a monoanisotropic, uniaxial
/// sheet (cross terms fixed to zero). Values are in meters.
///
/// Built for perfect reflection they obey
///   chi_ee_yy(x) * chi_mm_xx(x) = -4 / k^2
/// pointwise, so a single independent function describes the reflector.
struct SusceptibilityQuad {
    ComplexProfile chi_ee_xx;
    ComplexProfile chi_ee_yy;
    ComplexProfile chi_mm_xx;
    ComplexProfile chi_mm_yy;
};

/// Spatial period of a surface profile along x. Uniform covers the specular
/// case sin(theta_r) = sin(theta_i), where the period is infinite.
struct SurfacePeriod {
    enum class Kind { periodic, uniform };

    Kind kind = Kind::uniform;
    double length = 0.0; // m, meaningful only when periodic

    static SurfacePeriod periodic(double len) { return {Kind::periodic, len}; }
    static SurfacePeriod uniform() { return {Kind::uniform, 0.0}; }
    bool is_periodic() const { return kind == Kind::periodic; }
};

/// Susceptibilities from a specified field transformation, each component the
/// ratio of a tangential-field jump to a tangential-field sum:
///   chi_ee_xx = -(2/(j w eps)) (H_y^t - H_y^i - H_y^r) / (E_x^t + E_x^i + E_x^r)
///   chi_ee_yy =  (2/(j w eps)) (H_x^t - H_x^i - H_x^r) / (E_y^t + E_y^i + E_y^r)
///   chi_mm_xx =  (2/(j w mu )) (E_y^t - E_y^i - E_y^r) / (H_x^t + H_x^i + H_x^r)
///   chi_mm_yy = -(2/(j w mu )) (E_x^t - E_x^i - E_x^r) / (H_y^t + H_y^i + H_y^r)
/// Each evaluator throws SingularPointError where its denominator vanishes.
SusceptibilityQuad susceptibilities_from_fields(const TangentialSurfaceFields& fields,
                                                const MediumVacuum& medium);

/// Closed form for the perfect anomalous reflector:
///   chi_ee_yy(x) = (2j/k) (cos(theta_i) - A_r cos(theta_r) Phi(x)) / (1 + A_r Phi(x))
/// with Phi(x) = exp(-j k (sin(theta_r) - sin(theta_i)) x).
/// Singular only when A_r = 1 and Phi(x) = -1.
ComplexProfile reflector_susceptibility(const ReflectorGeometry& geom,
                                        const MediumVacuum& medium);

/// Period of the reflector profile: Pi = 2 pi / (k |sin(theta_r) - sin(theta_i)|),
/// Uniform when the sines coincide.
SurfacePeriod surface_period(const ReflectorGeometry& geom, const MediumVacuum& medium);

/// Phase walk of the reflector profile, Phi(x) = exp(-j k (sin r - sin i) x).
cdouble phase_walk(const ReflectorGeometry& geom, const MediumVacuum& medium, double x);

} // namespace ris
