#pragma once

#include "ris/linalg.hpp"
#include "ris/wave.hpp"

namespace ris {

/// Full bianisotropic susceptibility point: four 2x2 complex matrices with
/// entries chi_ab^{uv}, u,v in {x,y}. No structural constraint is imposed.
struct SusceptibilityTensors {
    CMat2 chi_ee;
    CMat2 chi_em;
    CMat2 chi_me;
    CMat2 chi_mm;
};

/// Incident tangential fields, ordered (E_x^i, E_y^i, H_x^i, H_y^i).
using FieldVec4 = CVec<4>;

/// Scattered tangential fields, ordered
/// (E_x^r, E_x^t, E_y^r, E_y^t, H_x^r, H_x^t, H_y^r, H_y^t).
using FieldVec8 = CVec<8>;

/// Indices into FieldVec8.
enum ZIndex : int {
    kExR = 0, kExT, kEyR, kEyT, kHxR, kHxT, kHyR, kHyT,
};

/// The sheet-transition system M Z = W F. M and W are assembled from the
/// scaled susceptibility blocks
///   A = (j w eps / 2) chi_ee,  B = (j w sqrt(mu eps) / 2) chi_em,
///   C = (j w mu / 2) chi_mm,   D = (j w sqrt(mu eps) / 2) chi_me.
/// Note: rows 3 and 4 of W both couple to the off-diagonal entry C3; the
/// matrix is transcribed as adopted even though a C2 in row 3 would restore
/// the symmetry. The chi = 0 continuity case is insensitive to the choice.
struct GstcSystem {
    CMat<4, 8> m;
    CMat<4, 4> w;
};

GstcSystem assemble(const SusceptibilityTensors& tensors, const MediumVacuum& medium);

struct SurfaceSolution {
    FieldVec8 z{};
    double residual = 0.0; // ||M z - W f||_2
};

/// Minimum-norm solution of the underdetermined system via the SVD
/// pseudo-inverse (rank tolerance sigma_max * 1e-12).
SurfaceSolution solve_surface_fields(const GstcSystem& system, const FieldVec4& f);

/// Square solve with one scattered block pinned to zero, matching the
/// perfect-reflection / perfect-transmission closed forms.
enum class PinnedBlock { transmitted, reflected };
SurfaceSolution solve_surface_fields_pinned(const GstcSystem& system, const FieldVec4& f,
                                            PinnedBlock zero_block);

/// P = pinv(M) W. Row i gives the four coefficients that combine the
/// incident tangential components into scattered component i; E-rows are the
/// sigma coefficients and H-rows the xi coefficients.
struct ScatteringCoefficients {
    CMat<8, 4> p;

    FieldVec8 apply(const FieldVec4& f) const { return p * f; }
    cdouble coefficient(ZIndex output, int input) const { return p(int(output), input); }
};

ScatteringCoefficients extract_coefficients(const GstcSystem& system);

/// Reflected fields for the perfect-reflection family H_x^r = e(x,y) E_y^r:
///   E_y^r = (-a E_y^i - H_x^i) / (e + a),  H_x^r = e E_y^r,
/// with a = (j w eps / 2) chi_ee_yy.
struct ReflectedPair {
    cdouble e_y;
    cdouble h_x;
};
ReflectedPair reflected_fields_closed_form(cdouble chi_ee_yy, cdouble e_coupling,
                                           cdouble e_y_i, cdouble h_x_i,
                                           const MediumVacuum& medium);

/// Transmitted fields for perfect transmission (no reflected fields):
///   E_y^t = ((1 + a c) E_y^i + 2 c H_x^i) / (1 - a c)
///   H_x^t = (2 a E_y^i + (1 + a c) H_x^i) / (1 - a c)
/// with a = (j w eps / 2) chi_ee_yy and c = (j w mu / 2) chi_mm_xx.
struct TransmittedPair {
    cdouble e_y;
    cdouble h_x;
};
TransmittedPair transmitted_fields_closed_form(cdouble chi_ee_yy, cdouble chi_mm_xx,
                                               cdouble e_y_i, cdouble h_x_i,
                                               const MediumVacuum& medium);

} // namespace ris
