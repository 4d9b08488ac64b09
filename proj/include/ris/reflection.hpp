#pragma once

#include "ris/synthesis.hpp"
#include "ris/wave.hpp"

namespace ris {

/// The two rival definitions of the surface-averaged reflection coefficient.
/// They share one parametrization and differ only in the factor r_{i,r}
/// linking the reflected magnetic field to the incident one:
///   EM: r = cos(theta_r)/cos(theta_i)  (field-ratio view, wireless design)
///   Z:  r = 1                          (impedance-mismatch view, metasurface design)
enum class ReflectionKind { em, z };

double r_factor(ReflectionKind kind, const ReflectorGeometry& geom);

struct ReflectionProfile {
    ReflectionKind kind = ReflectionKind::em;
    ComplexProfile value; // R(x), dimensionless
    ReflectorGeometry geom;
    SurfacePeriod period;
};

/// R_EM(x) = A_r exp(-j k (sin(theta_r) - sin(theta_i)) x); |R_EM| = A_r.
ReflectionProfile r_em_profile(const ReflectorGeometry& geom, const MediumVacuum& medium);

/// R_Z(x) = A_r (cos(theta_r) + cos(theta_i)) Phi(x)
///          / (2 cos(theta_i) - A_r (cos(theta_r) - cos(theta_i)) Phi(x)).
/// Equals R_EM only for specular reflection.
ReflectionProfile r_z_profile(const ReflectorGeometry& geom, const MediumVacuum& medium);

/// R(x) = (1 + j g chi(x)) / (r - j g chi(x)) with g = k / (2 cos(theta_i)).
ReflectionProfile r_from_susceptibility(ComplexProfile chi_ee_yy, ReflectionKind kind,
                                        const ReflectorGeometry& geom,
                                        const MediumVacuum& medium);

/// Inverse map: chi(x) = (2j/k) cos(theta_i) (1 - r R(x)) / (1 + R(x)).
ComplexProfile susceptibility_from_r(const ReflectionProfile& profile,
                                     const MediumVacuum& medium);

/// Wave impedances seen by the incident and reflected waves, Ohm.
struct WaveImpedances {
    double z_incident = 0.0;  // eta / cos(theta_i)
    double z_reflected = 0.0; // -eta / cos(theta_r) for EM, -eta / cos(theta_i) for Z
};

WaveImpedances wave_impedances(const ReflectorGeometry& geom, const MediumVacuum& medium,
                               ReflectionKind kind);

/// T-circuit representation of the sheet. Z3 is identically zero, which
/// decouples Z2 from every observable; Z2 is fixed to zero as well so the
/// triple has a concrete value.
struct ImpedanceTriple {
    ComplexProfile z1; // Ohm
    ComplexProfile z2;
    ComplexProfile z3;
    ReflectorGeometry geom;
};

/// Sheet impedance Z1(x) = (E_y^i + E_y^r) / (H_x^i + H_x^r).
///
/// Two printed forms of the closed form exist; they disagree for
/// theta_r != theta_i. When A_r equals the unitary-efficiency amplitude
/// sqrt(cos(theta_i)/cos(theta_r)) the square-root form
///   Z1 = eta/sqrt(ci cr) (sqrt(cr) + sqrt(ci) Phi) / (sqrt(ci) - sqrt(cr) Phi)
/// is used, which keeps r_from_impedance consistent with r_z_profile.
/// For any other A_r the plain form with cos(theta_i) in both denominator
/// terms is kept as printed; z1_form_discrepancy quantifies the difference.
ImpedanceTriple z1_profile(const ReflectorGeometry& geom, const MediumVacuum& medium);

/// Max pointwise |Z1_plain - Z1_sqrt| / |Z1_sqrt| over one period, sampled.
/// Nonzero for theta_r != theta_i; reported as a diagnostic, never resolved
/// silently.
double z1_form_discrepancy(const ReflectorGeometry& geom, const MediumVacuum& medium,
                           int samples = 512);

/// r(x) = (Z1(x) - eta/cos(theta_i)) / (Z1(x) + eta/cos(theta_i)); kind Z.
ReflectionProfile r_from_impedance(const ImpedanceTriple& triple, const MediumVacuum& medium);

} // namespace ris
