#pragma once

// A concrete matrix realization of the algebra's channel products that
// behaves as the Dirac matrices: construction from Pauli tensor products,
// the full relation battery, plane-wave residuals, the quadratic-symbol
// factorization into the Klein-Gordon operator, and minimal electromagnetic
// coupling.  The matrices are used as matrices throughout; they are never
// reinstalled as a basis product table (their product algebra is associative
// while the channel product itself is not).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "mixture/errors.hpp"
#include "mixture/fd.hpp"
#include "mixture/fields.hpp"
#include "mixture/linalg.hpp"
#include "mixture/suite_report.hpp"

namespace mixture {

using Spinor = std::array<cplx, 4>;

struct DiracSet {
    std::array<Mat4, 4> eta; // channel matrices; eta[0] is the identity
    Mat4 H;                  // mass-channel matrix, squares to identity
    Mat4 Hhat;               // adjoint-side partner (= -H for the Pauli set)
    cplx N = 1.0;            // mass scale multiplying H in the wave operator
};

struct PlaneWave {
    Spinor amplitude{};
    double omega = 0.0;
    std::array<double, 3> k{};
};

namespace detail {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

// left factor indexes the coarse 2x2 blocks
inline Mat4 kron2(const Mat2& a, const Mat2& b) {
    Mat4 m = mat4_zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
    return m;
}

inline Mat2 pauli(int n) {
    const cplx i(0.0, 1.0);
    switch (n) {
        case 0: return {{{1.0, 0.0}, {0.0, 1.0}}};
        case 1: return {{{0.0, 1.0}, {1.0, 0.0}}};
        case 2: return {{{0.0, -i}, {i, 0.0}}};
        default: return {{{1.0, 0.0}, {0.0, -1.0}}};
    }
}

} // namespace detail

inline DiracSet dirac_set_from_pauli() {
    using detail::kron2;
    using detail::pauli;
    DiracSet d;
    d.eta[0] = mat4_identity();
    d.eta[1] = kron2(pauli(1), pauli(2));
    d.eta[2] = kron2(pauli(2), pauli(0));
    d.eta[3] = kron2(pauli(1), pauli(1));
    d.H = kron2(pauli(1), pauli(3));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d.Hhat[i][j] = -d.H[i][j];
    d.N = 1.0;
    return d;
}

namespace detail {

inline Mat4 mat4_sub(const Mat4& a, const Mat4& b) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a[i][j] - b[i][j];
    return m;
}

inline Mat4 mat4_add(const Mat4& a, const Mat4& b) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a[i][j] + b[i][j];
    return m;
}

} // namespace detail

// the full relation battery; every residual is exactly zero for the Pauli
// set (its entries are exact small Gaussian integers)
inline SuiteResult verify_dirac_conditions(const DiracSet& d) {
    using detail::mat4_add;
    using detail::mat4_sub;
    SuiteResult r;
    r.suite = "dirac-conditions";
    const Mat4 id = mat4_identity();
    const double exact = 1e-300; // nonzero residuals from these entries are >= 1

    r.add("unit-square", "channel-0 matrix squares to the identity",
          mat4_max_abs(detail::mat4_sub(mat4_mul(d.eta[0], d.eta[0]), id)), exact);
    for (int i = 1; i < 4; ++i)
        r.add("space-square-" + std::to_string(i),
              "spatial channel matrix squares to the identity",
              mat4_max_abs(mat4_sub(mat4_mul(d.eta[i], d.eta[i]), id)), exact);
    r.add("mass-square", "mass-channel matrix squares to the identity",
          mat4_max_abs(mat4_sub(mat4_mul(d.H, d.H), id)), exact);

    for (int i = 1; i < 4; ++i)
        r.add("unit-commutator-" + std::to_string(i),
              "channel-0 matrix commutes with the spatial matrices",
              mat4_max_abs(mat4_sub(mat4_mul(d.eta[0], d.eta[i]),
                                    mat4_mul(d.eta[i], d.eta[0]))),
              exact);
    r.add("unit-mass-commutator", "channel-0 matrix commutes with the mass matrix",
          mat4_max_abs(
              mat4_sub(mat4_mul(d.eta[0], d.H), mat4_mul(d.H, d.eta[0]))),
          exact);

    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            r.add("pair-anticommutator-" + std::to_string(i) + std::to_string(j),
                  "distinct spatial matrices anticommute",
                  mat4_max_abs(mat4_add(mat4_mul(d.eta[i], d.eta[j]),
                                        mat4_mul(d.eta[j], d.eta[i]))),
                  exact);
    for (int i = 1; i < 4; ++i)
        r.add("mass-anticommutator-" + std::to_string(i),
              "spatial matrices anticommute with the mass matrix",
              mat4_max_abs(
                  mat4_add(mat4_mul(d.eta[i], d.H), mat4_mul(d.H, d.eta[i]))),
              exact);

    r.add("adjoint-mass-unit", "adjoint mass partner cancels against channel 0",
          mat4_max_abs(mat4_add(mat4_mul(d.Hhat, d.eta[0]), mat4_mul(d.eta[0], d.H))),
          exact);
    for (int i = 1; i < 4; ++i)
        r.add("adjoint-mass-space-" + std::to_string(i),
              "adjoint mass partner balances the spatial matrices",
              mat4_max_abs(mat4_sub(mat4_mul(d.Hhat, d.eta[i]),
                                    mat4_mul(d.eta[i], d.H))),
              exact);
    return r;
}

// wave-operator symbol on a e^{-i(w t - k.x)}: the time derivative
// contributes -i w, the space derivatives +i k_j with the adjoint's sign
// flip, and the mass term -i M H
inline Mat4 dirac_symbol(const DiracSet& d, const PlaneWave& w, double mass) {
    const cplx mi(0.0, -1.0);
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx v = w.omega * d.eta[0][r][c] - mass * d.H[r][c];
            for (int j = 0; j < 3; ++j) v += w.k[j] * d.eta[j + 1][r][c];
            m[r][c] = mi * v;
        }
    return m;
}

// the partner factor with the spatial and mass signs flipped; the product of
// the two symbols is the scalar Klein-Gordon symbol times the identity
inline Mat4 dirac_symbol_partner(const DiracSet& d, const PlaneWave& w, double mass) {
    const cplx mi(0.0, -1.0);
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx v = w.omega * d.eta[0][r][c] + mass * d.H[r][c];
            for (int j = 0; j < 3; ++j) v -= w.k[j] * d.eta[j + 1][r][c];
            m[r][c] = mi * v;
        }
    return m;
}

inline Spinor dirac_residual(const DiracSet& d, const PlaneWave& w, double mass) {
    return mat4_apply(dirac_symbol(d, w, mass), w.amplitude);
}

inline cplx klein_gordon_residual(const PlaneWave& w, double mass) {
    double k2 = 0.0;
    for (double kj : w.k) k2 += kj * kj;
    return cplx(-w.omega * w.omega + k2 + mass * mass);
}

// product of the two first-order symbols minus the scalar wave symbol times
// the identity; the cross terms cancel exactly through the relation battery
inline SuiteResult factorization_check(const DiracSet& d, const PlaneWave& w,
                                       double mass) {
    SuiteResult r;
    r.suite = "dirac-factorization";
    const Mat4 prod =
        mat4_mul(dirac_symbol_partner(d, w, mass), dirac_symbol(d, w, mass));
    const cplx kg = klein_gordon_residual(w, mass);
    Mat4 diff = prod;
    for (int i = 0; i < 4; ++i) diff[i][i] -= kg;
    r.add("second-order-factorization",
          "first-order symbol pair multiplies to the scalar wave symbol",
          mat4_max_abs(diff), 1e-12);
    return r;
}

// minimal-coupling symbol: the frequency shifts by -e*phi and each momentum
// component by -e*A_j; zero charge reduces to the free symbol bitwise
inline Mat4 em_coupled_symbol(const DiracSet& d, const PlaneWave& w, double mass,
                              double charge, double phi,
                              const std::array<double, 3>& A) {
    PlaneWave shifted = w;
    shifted.omega = w.omega - charge * phi;
    for (int j = 0; j < 3; ++j) shifted.k[j] = w.k[j] - charge * A[j];
    return dirac_symbol(d, shifted, mass);
}

inline Spinor em_coupled_residual(const DiracSet& d, const PlaneWave& w, double mass,
                                  double charge, double phi,
                                  const std::array<double, 3>& A) {
    return mat4_apply(em_coupled_symbol(d, w, mass, charge, phi, A), w.amplitude);
}

// closed-form kernel of the on-shell symbol: with X = k.eta - M H and
// X^2 = (k^2 + M^2) 1, the nonzero columns of (X - w 1) are annihilated by
// (X + w 1) whenever w^2 = k^2 + M^2
inline std::vector<Spinor> dirac_kernel_basis(const DiracSet& d, const PlaneWave& w,
                                              double mass, double drop_tol = 1e-9) {
    Mat4 x = mat4_zero();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx v = -mass * d.H[r][c];
            for (int j = 0; j < 3; ++j) v += w.k[j] * d.eta[j + 1][r][c];
            x[r][c] = v;
        }
    for (int i = 0; i < 4; ++i) x[i][i] -= w.omega;

    // modified Gram-Schmidt over the columns (largest first) keeps one
    // representative per independent direction (on shell the columns span a
    // two-dimensional space, so two survive)
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> colnorm{};
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) colnorm[c] += std::norm(x[r][c]);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return colnorm[a] > colnorm[b]; });

    std::vector<Spinor> basis;
    for (int c : order) {
        Spinor col{};
        for (int r = 0; r < 4; ++r) col[r] = x[r][c];
        for (const Spinor& q : basis) {
            cplx proj = 0.0;
            for (int r = 0; r < 4; ++r) proj += std::conj(q[r]) * col[r];
            for (int r = 0; r < 4; ++r) col[r] -= proj * q[r];
        }
        double norm2 = 0.0;
        for (int r = 0; r < 4; ++r) norm2 += std::norm(col[r]);
        if (norm2 < drop_tol * drop_tol) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < 4; ++r) col[r] *= inv;
        basis.push_back(col);
    }
    return basis;
}

// residual of the phase-shift derivative identity: conjugating a derivative
// by a pure phase adds -i (d phase) to the derivative
inline double phase_shift_residual(const MVField& f, const ScalarField& phase,
                                   const Point4& z, const Fd& fd) {
    const cplx i(0.0, 1.0);
    MVField wrapped = [&](const Point4& p) {
        return std::exp(-i * phase(p)) * f(p);
    };
    double worst = 0.0;
    for (int a = 0; a < 4; ++a) {
        const MultiVector lhs =
            std::exp(i * phase(z)) * fd_partial(wrapped, z, a, fd);
        const double dphase = fd_partial(phase, z, a, fd);
        const MultiVector rhs = fd_partial(f, z, a, fd) - i * dphase * f(z);
        worst = std::max(worst, mv_max_abs(lhs - rhs));
    }
    return worst;
}

} // namespace mixture
