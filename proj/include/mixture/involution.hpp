#pragma once

#include <complex>

#include "mixture_tensor.hpp"
#include "multivector.hpp"

namespace mixture {

// main involution: flips each channel by its mirror weight; an
// anti-homomorphism, mirror(zw) = mirror(w) mirror(z)
inline MultiVector mirror(const Algebra& alg, const MultiVector& z) {
    MultiVector r;
    for (int i = 0; i < 4; ++i) r[i] = alg.mirror_weight[i] * z[i];
    return r;
}

// channelwise complex conjugation; also an anti-homomorphism here
inline MultiVector conjugate(const MultiVector& z) {
    MultiVector r;
    for (int i = 0; i < 4; ++i) r[i] = std::conj(z[i]);
    return r;
}

// adjoint = mirror of the conjugate; a homomorphism, (zw)^+ = z^+ w^+
inline MultiVector adjoint(const Algebra& alg, const MultiVector& z) {
    return mirror(alg, conjugate(z));
}

// squared magnitude: scalar channel of z * mirror(z); complex-valued in
// general, and zero on null elements such as e0 + e1
inline cplx magnitude_sq(const Algebra& alg, const MultiVector& z) {
    return mv_mul(alg, z, mirror(alg, z))[0];
}

// residual of the claim that z * mirror(z) is purely scalar
inline double magnitude_offchannel(const Algebra& alg, const MultiVector& z) {
    const MultiVector p = mv_mul(alg, z, mirror(alg, z));
    double m = 0.0;
    for (int i = 1; i < 4; ++i) m = std::max(m, std::abs(p[i]));
    return m;
}

} // namespace mixture
