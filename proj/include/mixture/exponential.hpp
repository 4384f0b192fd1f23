#pragma once

#include <cmath>
#include <complex>

#include "errors.hpp"
#include "involution.hpp"
#include "mixture_tensor.hpp"
#include "multivector.hpp"

namespace mixture {

// plain power series with a hard term budget; the argument sizes this
// library produces stay far inside the budget, and anything larger is
// reported rather than silently mis-summed
inline MultiVector mv_exp(const Algebra& alg, const MultiVector& phi, int max_terms = 64,
                          double tail_tol = 1e-18) {
    mv_require_finite(phi, "mv_exp");
    MultiVector sum = mv_basis(0);
    MultiVector term = mv_basis(0);
    for (int k = 1; k <= max_terms; ++k) {
        term = (cplx(1.0 / k)) * mv_mul(alg, term, phi);
        sum = sum + term;
        if (mv_norm2(term) < tail_tol * std::max(1.0, mv_norm2(sum))) {
            mv_require_finite(sum, "mv_exp");
            return sum;
        }
    }
    throw NonConvergence("mv_exp: series tail above bound after max_terms");
}

// factorization of exp(phi) into a growth factor and a unit-magnitude
// oscillation, split along the (generally complex) unit axis of the vector
// part; the two factors commute and multiply back to exp(phi)
struct ExpSplit {
    MultiVector evanescent;  // exp(Re(phi^0) e0 + Im(m) axis)
    MultiVector oscillatory; // exp(i (Im(phi^0) e0 - Re(m) axis)); unit magnitude
    MultiVector axis;        // squares to e0; zero when the vector part vanishes
    cplx m = 0.0;            // scale factor: vector part = -i m axis
    bool trivial = false;    // vector part was zero; split is scalar-only
};

inline ExpSplit exp_split(const Algebra& alg, const MultiVector& phi) {
    mv_require_finite(phi, "exp_split");
    ExpSplit out;
    const cplx phi0 = phi[0];
    const double alpha = phi0.real();
    const double beta = phi0.imag();

    double wmag = 0.0;
    for (int i = 1; i < 4; ++i) wmag = std::max(wmag, std::abs(phi[i]));
    if (wmag == 0.0) {
        out.trivial = true;
        out.evanescent = mv_scalar(std::exp(alpha));
        out.oscillatory = mv_scalar(std::exp(cplx(0.0, beta)));
        return out;
    }

    // vector part w = c + i d with real 3-vectors c, d; the squared scale is
    // -(w.w): m = principal sqrt(d.d - c.c - 2i c.d)
    double cc = 0.0, dd = 0.0, cd = 0.0;
    for (int i = 1; i < 4; ++i) {
        const double cre = phi[i].real(), dim = phi[i].imag();
        cc += cre * cre;
        dd += dim * dim;
        cd += cre * dim;
    }
    const cplx m = std::sqrt(cplx(dd - cc, -2.0 * cd));
    if (std::abs(m) == 0.0)
        throw DegenerateVector("exp_split: nonzero null vector part has no unit axis");
    out.m = m;

    MultiVector axis;
    for (int i = 1; i < 4; ++i) axis[i] = cplx(0.0, 1.0) * phi[i] / m;
    out.axis = axis;

    // phi = (alpha + i beta) e0 + (-i m) axis; exponents commute (both are
    // polynomials in the axis alone)
    const double gt = m.imag();  // growth coefficient along the axis
    const double dt = -m.real(); // oscillation coefficient along the axis
    out.evanescent = mv_exp(alg, mv_scalar(alpha) + gt * axis);
    out.oscillatory = mv_exp(alg, cplx(0.0, 1.0) * (mv_scalar(beta) + dt * axis));
    return out;
}

enum class RotateStyle { OneSided, Sandwich };

// rotation about a coordinate axis (1, 2, or 3) by angle omega: either the
// one-sided right action z exp(i e_a w) or the half-angle sandwich
// exp(-i e_a w/2) z exp(i e_a w/2)
inline MultiVector rotate(const Algebra& alg, const MultiVector& z, int axis, double omega,
                          RotateStyle style) {
    if (axis < 1 || axis > 3) throw Error("rotate: axis must be 1, 2, or 3");
    const cplx I(0.0, 1.0);
    if (style == RotateStyle::OneSided) {
        const MultiVector r = mv_exp(alg, I * omega * mv_basis(axis));
        return mv_mul(alg, z, r);
    }
    const MultiVector half = mv_exp(alg, I * (0.5 * omega) * mv_basis(axis));
    const MultiVector halfneg = mv_exp(alg, I * (-0.5 * omega) * mv_basis(axis));
    return mv_mul(alg, mv_mul(alg, halfneg, z), half);
}

} // namespace mixture
