#pragma once

#include "ris/reflection.hpp"
#include "ris/synthesis.hpp"
#include "ris/wave.hpp"

namespace ris {

/// Passivity classification of a sheet from its net power flow.
///   locally_passive:       P_net(x) <= tol_local at every sampled x
///   unitary_efficiency:    |P_net| <= tol_global, incident power fully re-radiated
///   globally_active:       P_net > tol_global, the sheet injects power
///   globally_passive_only: net absorption with local gain regions
enum class PowerClass {
    locally_passive,
    globally_passive_only,
    globally_active,
    unitary_efficiency,
};

const char* to_string(PowerClass c);

struct PowerReport {
    RealProfile pnet_local;   // W/m^2, net flow entering the sheet at x
    double pnet_global = 0.0; // W/m^2, period average of pnet_local
    PowerClass classification = PowerClass::unitary_efficiency;
    SurfacePeriod period;
    double p0 = 1.0; // W/m^2, reference incident power density
};

/// Net power flow from the Poynting vector of the total tangential fields:
///   P_net(x) = -1/2 Re{ E_par(x) H_par(x)* },  E_par = E_y^i + E_y^r,
/// averaged over one period by quadrature (pointwise for Uniform profiles).
PowerReport pnet_direct(const TangentialSurfaceFields& fields, const SurfacePeriod& period,
                        double p0 = 1.0);

/// Closed form for the benchmark plane-wave transformation:
///   P_net(x) = P0 A_r^2 cos(theta_r) - P0 cos(theta_i)
///            + P0 A_r (cos(theta_r) - cos(theta_i)) cos(phi(x))
///   P_net    = P0 (A_r^2 cos(theta_r) - cos(theta_i))
/// with phi(x) = k (sin(theta_r) - sin(theta_i)) x.
PowerReport pnet_benchmark(const ReflectorGeometry& geom, const MediumVacuum& medium);

/// Net power flow of fields reconstructed from a reflection coefficient:
///   P_net(x) = P0 cos(theta_i) (r |R(x)|^2 - 1 - (1 - r) Re{R(x)})
///   P_net    = (P0 r cos(theta_i)/Pi) Int |R(x)|^2 dx - P0 cos(theta_i)
PowerReport pnet_from_reflection(const ReflectionProfile& profile);

/// Amplitude that makes the benchmark transformation globally passive with
/// unitary efficiency: A_r = sqrt(cos(theta_i)/cos(theta_r)).
double ar_unitary_em(double theta_i, double theta_r);

/// Amplitude that gives unit period-average |R_Z|^2, i.e. unitary efficiency
/// when R_Z is read as a field coefficient:
///   A_r = sqrt(2 / (1 + (cos(theta_r)/cos(theta_i))^2)).
double ar_unitary_z(double theta_i, double theta_r);

/// Re-derives the classification of a report. Negative tolerances select the
/// defaults tol = 1e-9 * P0. The local test samples grid_points per period.
PowerClass classify(const PowerReport& report, double tol_local = -1.0,
                    double tol_global = -1.0, int grid_points = 512);

} // namespace ris
