#include "ris/gstc.hpp"

#include <cmath>

#include "ris/errors.hpp"

namespace ris {

namespace {

CMat2 scaled(const CMat2& chi, cdouble factor) {
    CMat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = factor * chi(i, j);
    return out;
}

} // namespace

GstcSystem assemble(const SusceptibilityTensors& tensors, const MediumVacuum& medium) {
    const double w = medium.angular_frequency;
    const double eps = medium.permittivity;
    const double mu = medium.permeability;
    const cdouble jw_eps = cdouble(0.0, 0.5 * w * eps);
    const cdouble jw_mu = cdouble(0.0, 0.5 * w * mu);
    const cdouble jw_mix = cdouble(0.0, 0.5 * w * std::sqrt(mu * eps));

    const CMat2 A = scaled(tensors.chi_ee, jw_eps);
    const CMat2 B = scaled(tensors.chi_em, jw_mix);
    const CMat2 C = scaled(tensors.chi_mm, jw_mu);
    const CMat2 D = scaled(tensors.chi_me, jw_mix);

    const cdouble a1 = A(0, 0), a2 = A(0, 1), a3 = A(1, 0), a4 = A(1, 1);
    const cdouble b1 = B(0, 0), b2 = B(0, 1), b3 = B(1, 0), b4 = B(1, 1);
    const cdouble c1 = C(0, 0), c2 = C(0, 1), c3 = C(1, 0), c4 = C(1, 1);
    const cdouble d1 = D(0, 0), d2 = D(0, 1), d3 = D(1, 0), d4 = D(1, 1);

    GstcSystem s;
    const cdouble m_rows[4][8] = {
        {a1, a1, a2, a2, b1, b1, b2 - 1.0, b2 + 1.0},
        {a3, a3, a4, a4, b3 + 1.0, b3 - 1.0, b4, b4},
        {d1, d1, d2 + 1.0, d2 - 1.0, c1, c1, c2, c2},
        {d3 - 1.0, d3 + 1.0, d4, d4, c3, c3, c4, c4},
    };
    const cdouble w_rows[4][4] = {
        {-a1, -a2, -b1, 1.0 - b2},
        {-a3, -a4, -1.0 - b3, -b4},
        {-d1, -1.0 - d2, -c1, -c3},
        {1.0 - d3, -d4, -c3, -c4},
    };
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 8; ++j) s.m(i, j) = m_rows[i][j];
        for (int j = 0; j < 4; ++j) s.w(i, j) = w_rows[i][j];
    }
    return s;
}

SurfaceSolution solve_surface_fields(const GstcSystem& system, const FieldVec4& f) {
    const CMat<8, 4> pinv = pseudo_inverse(system.m);
    SurfaceSolution sol;
    sol.z = pinv * (system.w * f);
    sol.residual = norm2(sub(system.m * sol.z, system.w * f));
    return sol;
}

SurfaceSolution solve_surface_fields_pinned(const GstcSystem& system, const FieldVec4& f,
                                            PinnedBlock zero_block) {
    // Z interleaves (r, t) per component; keep one block's columns.
    const int offset = zero_block == PinnedBlock::transmitted ? 0 : 1;
    CMat<4, 4> m_free;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m_free(i, j) = system.m(i, 2 * j + offset);

    // The square block can be rank-deficient (the perfect-reflection
    // constraint makes two rows dependent), so use the pseudo-inverse.
    const CVec<4> rhs = system.w * f;
    const CVec<4> x = pseudo_inverse(m_free) * rhs;

    SurfaceSolution sol;
    for (int j = 0; j < 4; ++j) sol.z[2 * j + offset] = x[j];
    sol.residual = norm2(sub(system.m * sol.z, rhs));
    return sol;
}

ScatteringCoefficients extract_coefficients(const GstcSystem& system) {
    ScatteringCoefficients c;
    c.p = pseudo_inverse(system.m) * system.w;
    return c;
}

ReflectedPair reflected_fields_closed_form(cdouble chi_ee_yy, cdouble e_coupling,
                                           cdouble e_y_i, cdouble h_x_i,
                                           const MediumVacuum& medium) {
    const cdouble a = cdouble(0.0, 0.5 * medium.angular_frequency * medium.permittivity) * chi_ee_yy;
    const cdouble den = e_coupling + a;
    if (std::abs(den) < 1e-12 * (std::abs(e_coupling) + std::abs(a) + 1.0))
        throw SingularPointError("reflected_fields_closed_form: e + (jw eps/2) chi = 0", 0.0);
    ReflectedPair out;
    out.e_y = (-a * e_y_i - h_x_i) / den;
    out.h_x = e_coupling * out.e_y;
    return out;
}

TransmittedPair transmitted_fields_closed_form(cdouble chi_ee_yy, cdouble chi_mm_xx,
                                               cdouble e_y_i, cdouble h_x_i,
                                               const MediumVacuum& medium) {
    const cdouble a = cdouble(0.0, 0.5 * medium.angular_frequency * medium.permittivity) * chi_ee_yy;
    const cdouble c = cdouble(0.0, 0.5 * medium.angular_frequency * medium.permeability) * chi_mm_xx;
    const cdouble den = 1.0 - a * c;
    if (std::abs(den) < 1e-12)
        throw SingularPointError("transmitted_fields_closed_form: 1 - a c = 0", 0.0);
    TransmittedPair out;
    out.e_y = ((1.0 + a * c) * e_y_i + 2.0 * c * h_x_i) / den;
    out.h_x = (2.0 * a * e_y_i + (1.0 + a * c) * h_x_i) / den;
    return out;
}

} // namespace ris
