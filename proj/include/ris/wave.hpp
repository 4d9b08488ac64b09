#pragma once

#include <complex>
#include <functional>

namespace ris {

using cdouble = std::complex<double>;

/// Complex-valued function of the surface coordinate x (m).
using ComplexProfile = std::function<cdouble(double)>;
/// Real-valued function of the surface coordinate x (m).
using RealProfile = std::function<double(double)>;

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kVacuumPermeability = 4.0 * kPi * 1e-7; // H/m

/// Frequency-derived constants of the vacuum background.
///
/// Permittivity is derived as 1/(mu c^2) so that k = omega sqrt(mu eps)
/// and k = 2 pi / lambda agree to machine precision.
struct MediumVacuum {
    double frequency = 0.0;         // Hz
    double wavelength = 0.0;        // m
    double wavenumber = 0.0;        // rad/m
    double angular_frequency = 0.0; // rad/s
    double impedance = 0.0;         // Ohm, eta = sqrt(mu/eps)
    double permittivity = 0.0;      // F/m
    double permeability = 0.0;      // H/m
};

/// Builds the vacuum constants for a carrier frequency.
/// Throws std::domain_error for a non-positive frequency.
MediumVacuum vacuum_params(double frequency_hz);

/// Parameters of the anomalous-reflector benchmark transformation:
/// a TE plane wave incident at theta_i, fully reflected towards theta_r
/// with real positive amplitude ar, carrying power density p0.
struct ReflectorGeometry {
    double theta_i = 0.0; // rad, |theta_i| < pi/2
    double theta_r = 0.0; // rad, |theta_r| < pi/2
    double p0 = 1.0;      // W/m^2, incident power density
    double ar = 1.0;      // reflected amplitude, real > 0

    /// Throws std::domain_error if any invariant is violated.
    void validate() const;
};

/// Tangential field components of one side (incident/reflected/transmitted)
/// evaluated on the sheet, as functions of the surface coordinate x.
struct FieldTrace {
    ComplexProfile e_x; // V/m
    ComplexProfile e_y; // V/m
    ComplexProfile h_x; // A/m
    ComplexProfile h_y; // A/m
};

struct TangentialSurfaceFields {
    FieldTrace incident;
    FieldTrace reflected;
    FieldTrace transmitted;
};

/// Benchmark TE plane-wave transformation on the sheet:
///   E_y^i(x) =  sqrt(2 eta P0)            exp(-j k sin(theta_i) x)
///   E_y^r(x) =  sqrt(2 eta P0) A_r        exp(-j k sin(theta_r) x)
///   H_x^i(x) =  sqrt(2 P0/eta) cos(theta_i) exp(-j k sin(theta_i) x)
///   H_x^r(x) = -sqrt(2 P0/eta) A_r cos(theta_r) exp(-j k sin(theta_r) x)
/// E_x and H_y vanish on both sides; the transmitted side is identically
/// zero (perfect reflection).
TangentialSurfaceFields te_plane_wave_fields(const ReflectorGeometry& geom,
                                             const MediumVacuum& medium);

/// Conventional near-field/far-field boundary d_F = 2 D^2 / lambda.
double fraunhofer_distance(double largest_dimension, const MediumVacuum& medium);

} // namespace ris
