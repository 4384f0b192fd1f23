#pragma once

// The derivative that transforms properly under frame changes, the
// analyticity condition it induces, path integrals (naive and corrected),
// residue absorption in the two-channel plane, and steepest-descent path
// conditions.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "mixture/contour.hpp"
#include "mixture/exponential.hpp"
#include "mixture/fd.hpp"
#include "mixture/fields.hpp"
#include "mixture/mixture_tensor.hpp"
#include "mixture/multivector.hpp"
#include "mixture/quadrature.hpp"

namespace mixture {

// real coordinate point under a (real-coordinate) contour position
inline Point4 contour_point(const MultiVector& z) {
    return Point4{z[0].real(), z[1].real(), z[2].real(), z[3].real()};
}

// H^g_a = sum_{l,b} upper[l][g][b] Gamma^l_{ab}: the connection by-product
// that rides along with the proper derivative
inline Mat4 proper_derivative_h_matrix(const Algebra& alg, const Tensor3& gamma) {
    Mat4 H = mat4_zero();
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a)
            for (int l = 0; l < 4; ++l)
                for (int b = 0; b < 4; ++b)
                    H[g][a] += alg.upper[l][g][b] * gamma[l][a][b];
    return H;
}

// (df)^g = (1/n) sum_{a,b} upper[a][g][b] (d_b f^a + Gamma^a_{lb} f^l)
// with n the algebra's channel count, so the derivative of the identity map
// is the unit scalar in every admissible restriction
inline MultiVector proper_derivative(const Algebra& alg, const MVField& f,
                                     const Tensor3& gamma, const Point4& z,
                                     const Fd& fd, const Box* box = nullptr) {
    const double n = static_cast<double>(algebra_channel_count(alg));
    const MultiVector fz = f(z);
    MultiVector out;
    for (int b = 0; b < 4; ++b) {
        MultiVector cov = fd_partial(f, z, b, fd, box);
        for (int a = 0; a < 4; ++a)
            for (int l = 0; l < 4; ++l) cov[a] += gamma[a][l][b] * fz[l];
        for (int g = 0; g < 4; ++g)
            for (int a = 0; a < 4; ++a) out[g] += alg.upper[a][g][b] * cov[a];
    }
    return (1.0 / n) * out;
}

// res^g = sum_{a,b} M_b upper[a][g][b] (d_b f^a + Gamma^a_{lb} f^l); the
// mirror weights realize the adjoint's index action.  Zero in every channel
// exactly when f is analytic at z under the given connection; in the
// two-channel restriction these are the Cauchy-Riemann equations.
inline MultiVector analyticity_residual(const Algebra& alg, const MVField& f,
                                        const Tensor3& gamma, const Point4& z,
                                        const Fd& fd, const Box* box = nullptr) {
    const MultiVector fz = f(z);
    MultiVector out;
    for (int b = 0; b < 4; ++b) {
        MultiVector cov = fd_partial(f, z, b, fd, box);
        for (int a = 0; a < 4; ++a)
            for (int l = 0; l < 4; ++l) cov[a] += gamma[a][l][b] * fz[l];
        for (int g = 0; g < 4; ++g)
            for (int a = 0; a < 4; ++a)
                out[g] += alg.mirror_weight[b] * alg.upper[a][g][b] * cov[a];
    }
    return out;
}

namespace detail {

// integrate a parameter function over the contour, splitting at breakpoints
template <class F>
MultiVector integrate_over(const Contour& c, F&& integrand) {
    std::vector<double> cuts{c.s_begin};
    for (double bp : c.breakpoints)
        if ((bp > c.s_begin && bp < c.s_end) || (bp < c.s_begin && bp > c.s_end))
            cuts.push_back(bp);
    cuts.push_back(c.s_end);
    std::sort(cuts.begin(), cuts.end());
    if (c.s_end < c.s_begin) std::reverse(cuts.begin(), cuts.end());
    MultiVector total;
    const double share = c.tolerance / static_cast<double>(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total = total + adaptive_quadrature(integrand, cuts[i], cuts[i + 1], share);
    return total;
}

} // namespace detail

// naive directed integral: int (dz/ds) g(z(s)) ds with the differential on
// the left of the product; path dependent in general
inline MultiVector path_integral(const Algebra& alg, const MVField& g,
                                 const Contour& c) {
    return detail::integrate_over(c, [&](double s) {
        return mv_mul(alg, contour_velocity(c, s), g(contour_point(c.position(s))));
    });
}

// symmetrized integral int (dz e^b d_b f + e^b dz d_b f) ds; for fields whose
// two-sided expansion closes, the integrand is an exact differential and the
// result depends only on the endpoints
inline MultiVector corrected_path_integral(const Algebra& alg, const MVField& f,
                                           const Contour& c, const Fd& fd) {
    return detail::integrate_over(c, [&](double s) {
        const MultiVector vel = contour_velocity(c, s);
        const Point4 p = contour_point(c.position(s));
        MultiVector left_sum;  // sum_b e_b (d_b f)
        MultiVector right_sum; // sum_b (e_b dz) (d_b f)
        for (int b = 0; b < 4; ++b) {
            const MultiVector db = fd_partial(f, p, b, fd);
            left_sum = left_sum + mv_mul(alg, mv_basis(b), db);
            right_sum = right_sum + mv_mul(alg, mv_mul(alg, mv_basis(b), vel), db);
        }
        return mv_mul(alg, vel, left_sum) + right_sum;
    });
}

struct ResiduePair {
    cplx i_z;    // closed integral of dz / z
    cplx i_conj; // closed integral of dz* / z*
    cplx sum;
};

// both residue integrals for a closed contour in the two-channel coordinate
// plane w = z^0 + i z^1; counterclockwise unit winding gives (2 pi i, -2 pi i)
inline ResiduePair residue_pair(const Contour& c) {
    auto w_of = [&](double s) {
        const MultiVector p = c.position(s);
        return cplx(p[0].real(), p[1].real());
    };
    auto dw_of = [&](double s) {
        const MultiVector v = contour_velocity(c, s);
        return cplx(v[0].real(), v[1].real());
    };
    ResiduePair out;
    out.i_z = adaptive_quadrature(
        [&](double s) { return dw_of(s) / w_of(s); }, c.s_begin, c.s_end, c.tolerance);
    out.i_conj = adaptive_quadrature(
        [&](double s) { return std::conj(dw_of(s)) / std::conj(w_of(s)); }, c.s_begin,
        c.s_end, c.tolerance);
    out.sum = out.i_z + out.i_conj;
    return out;
}

struct DescentParts {
    MultiVector re_part; // zero <=> the path is pure oscillation at s0
    MultiVector im_part; // zero <=> the path is pure descent at s0
    bool has_axis = false;
    MultiVector axis; // split axis of the exponent at s0 (when non-scalar)
};

// splits d(phi)/ds at s0 on the span of e0 and the exponent's split axis:
// re_part + i im_part reproduces that projection with real coefficients
inline DescentParts descent_conditions(const Algebra& alg,
                                       const std::function<MultiVector(double)>& phi,
                                       double s0, double h = 1e-5) {
    const MultiVector X = (phi(s0 + h) - phi(s0 - h)) / cplx(2.0 * h);
    const ExpSplit split = exp_split(alg, phi(s0));

    DescentParts out;
    out.re_part[0] = X[0].real();
    out.im_part[0] = X[0].imag();
    if (!split.trivial) {
        out.has_axis = true;
        out.axis = split.axis;
        MultiVector xvec = X;
        xvec[0] = 0.0;
        const cplx lambda = mv_mul(alg, xvec, split.axis)[0];
        out.re_part = out.re_part + lambda.real() * split.axis;
        out.im_part = out.im_part + lambda.imag() * split.axis;
    }
    return out;
}

} // namespace mixture
