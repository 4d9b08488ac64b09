#pragma once

// Fixed-size complex matrices sized for the sheet-transition system
// (4x8 constitutive matrix and friends), with a one-sided Jacobi SVD.
// The matrices are tiny, so everything is header-only and allocation-free.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace ris {

template <int Rows, int Cols>
struct CMat {
    std::array<std::complex<double>, std::size_t(Rows) * Cols> a{};

    std::complex<double>& operator()(int r, int c) { return a[std::size_t(r) * Cols + c]; }
    const std::complex<double>& operator()(int r, int c) const { return a[std::size_t(r) * Cols + c]; }

    static constexpr int rows() { return Rows; }
    static constexpr int cols() { return Cols; }

    static CMat identity() {
        static_assert(Rows == Cols);
        CMat m;
        for (int i = 0; i < Rows; ++i) m(i, i) = 1.0;
        return m;
    }
};

template <int N>
using CVec = std::array<std::complex<double>, std::size_t(N)>;

using CMat2 = CMat<2, 2>;

template <int R, int K, int C>
CMat<R, C> operator*(const CMat<R, K>& lhs, const CMat<K, C>& rhs) {
    CMat<R, C> out;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) {
            std::complex<double> acc = 0.0;
            for (int k = 0; k < K; ++k) acc += lhs(i, k) * rhs(k, j);
            out(i, j) = acc;
        }
    return out;
}

template <int R, int C>
CVec<R> operator*(const CMat<R, C>& m, const CVec<C>& v) {
    CVec<R> out{};
    for (int i = 0; i < R; ++i) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < C; ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

template <int R, int C>
CMat<C, R> adjoint(const CMat<R, C>& m) {
    CMat<C, R> out;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

template <int N>
double norm2(const CVec<N>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

template <int N>
CVec<N> sub(const CVec<N>& a, const CVec<N>& b) {
    CVec<N> out;
    for (int i = 0; i < N; ++i) out[i] = a[i] - b[i];
    return out;
}

template <int R, int C>
double max_abs(const CMat<R, C>& m) {
    double s = 0.0;
    for (const auto& z : m.a) s = std::max(s, std::abs(z));
    return s;
}

/// Thin SVD of a tall matrix (Rows >= Cols): A = U diag(sigma) V^H with
/// U Rows x Cols, sigma descending, V Cols x Cols unitary.
template <int Rows, int Cols>
struct Svd {
    CMat<Rows, Cols> u;
    std::array<double, Cols> sigma{};
    CMat<Cols, Cols> v;
};

/// One-sided Jacobi: rotates column pairs of A until they are mutually
/// orthogonal, accumulating the rotations in V. Deterministic sweep order.
template <int Rows, int Cols>
Svd<Rows, Cols> jacobi_svd(CMat<Rows, Cols> m, int max_sweeps = 60) {
    static_assert(Rows >= Cols, "jacobi_svd expects a tall matrix");
    using cd = std::complex<double>;

    CMat<Cols, Cols> v = CMat<Cols, Cols>::identity();
    const double tol = 1e-28; // on |a_p^H a_q|^2 relative to ||a_p||^2 ||a_q||^2

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < Cols - 1; ++p) {
            for (int q = p + 1; q < Cols; ++q) {
                double app = 0.0, aqq = 0.0;
                cd apq = 0.0;
                for (int i = 0; i < Rows; ++i) {
                    app += std::norm(m(i, p));
                    aqq += std::norm(m(i, q));
                    apq += std::conj(m(i, p)) * m(i, q);
                }
                const double off = std::norm(apq);
                if (off <= tol * app * aqq || off == 0.0) continue;
                rotated = true;

                // De-phase column q so the pair correlation is real, then
                // apply the classic symmetric Jacobi rotation.
                const cd phase = apq / std::abs(apq);
                const double g = std::abs(apq);
                const double tau = (aqq - app) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;

                for (int i = 0; i < Rows; ++i) {
                    const cd mp = m(i, p);
                    const cd mq = m(i, q) * std::conj(phase);
                    m(i, p) = cs * mp - sn * mq;
                    m(i, q) = sn * mp + cs * mq;
                }
                for (int i = 0; i < Cols; ++i) {
                    const cd vp = v(i, p);
                    const cd vq = v(i, q) * std::conj(phase);
                    v(i, p) = cs * vp - sn * vq;
                    v(i, q) = sn * vp + cs * vq;
                }
            }
        }
        if (!rotated) break;
    }

    Svd<Rows, Cols> out;
    std::array<int, Cols> order{};
    std::array<double, Cols> norms{};
    for (int j = 0; j < Cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < Rows; ++i) s += std::norm(m(i, j));
        norms[j] = std::sqrt(s);
        order[j] = j;
    }
    for (int i = 0; i < Cols - 1; ++i) // selection sort, descending sigma
        for (int j = i + 1; j < Cols; ++j)
            if (norms[order[j]] > norms[order[i]]) std::swap(order[i], order[j]);

    for (int j = 0; j < Cols; ++j) {
        const int src = order[j];
        out.sigma[j] = norms[src];
        const double inv = norms[src] > 0.0 ? 1.0 / norms[src] : 0.0;
        for (int i = 0; i < Rows; ++i) out.u(i, j) = m(i, src) * inv;
        for (int i = 0; i < Cols; ++i) out.v(i, j) = v(i, src);
    }
    return out;
}

/// Moore-Penrose pseudo-inverse. Singular values below
/// sigma_max * rank_tol are zeroed rather than inverted.
template <int Rows, int Cols>
CMat<Cols, Rows> pseudo_inverse(const CMat<Rows, Cols>& m, double rank_tol = 1e-12) {
    if constexpr (Rows >= Cols) {
        const Svd<Rows, Cols> f = jacobi_svd(m);
        const double cutoff = f.sigma[0] * rank_tol;
        // pinv = V S^+ U^H
        CMat<Cols, Rows> out;
        for (int i = 0; i < Cols; ++i)
            for (int j = 0; j < Rows; ++j) {
                std::complex<double> acc = 0.0;
                for (int k = 0; k < Cols; ++k) {
                    if (f.sigma[k] <= cutoff || f.sigma[k] == 0.0) continue;
                    acc += f.v(i, k) * std::conj(f.u(j, k)) / f.sigma[k];
                }
                out(i, j) = acc;
            }
        return out;
    } else {
        // Wide matrix: pinv(A) = pinv(A^H)^H.
        return adjoint(pseudo_inverse(adjoint(m), rank_tol));
    }
}

/// Solves a square complex system by partial-pivot Gaussian elimination.
/// Used as the independent oracle route and for the pinned 4x4 solves.
template <int N>
CVec<N> solve_gauss(CMat<N, N> a, CVec<N> b) {
    for (int col = 0; col < N; ++col) {
        int piv = col;
        for (int r = col + 1; r < N; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (piv != col) {
            for (int c = 0; c < N; ++c) std::swap(a(col, c), a(piv, c));
            std::swap(b[col], b[piv]);
        }
        const std::complex<double> d = a(col, col);
        for (int r = col + 1; r < N; ++r) {
            if (a(r, col) == std::complex<double>(0.0)) continue;
            const std::complex<double> factor = a(r, col) / d;
            for (int c = col; c < N; ++c) a(r, c) -= factor * a(col, c);
            b[r] -= factor * b[col];
        }
    }
    CVec<N> x{};
    for (int r = N - 1; r >= 0; --r) {
        std::complex<double> acc = b[r];
        for (int c = r + 1; c < N; ++c) acc -= a(r, c) * x[c];
        x[r] = acc / a(r, r);
    }
    return x;
}

} // namespace ris
