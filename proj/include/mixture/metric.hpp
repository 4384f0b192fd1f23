#pragma once

#include <cmath>

#include "involution.hpp"
#include "linalg.hpp"
#include "mixture_tensor.hpp"

namespace mixture {

// metric read off the symmetrized mirrored product of two basis elements:
//   g_ab = scalar channel of (e_a mirror(e_b) + e_b mirror(e_a)) / 2
// throws NonScalarMetric if any non-scalar channel survives symmetrization
inline Mat4 metric_from_algebra(const Algebra& alg, double tol = 1e-14) {
    Mat4 g = mat4_zero();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const MultiVector p =
                0.5 * (mv_mul(alg, mv_basis(a), mirror(alg, mv_basis(b))) +
                       mv_mul(alg, mv_basis(b), mirror(alg, mv_basis(a))));
            for (int ch = 1; ch < 4; ++ch)
                if (std::abs(p[ch]) > tol)
                    throw NonScalarMetric("symmetrized mirrored basis product has channel " +
                                          std::to_string(ch) + " residue " +
                                          std::to_string(std::abs(p[ch])));
            g[a][b] = p[0];
        }
    return g;
}

// dual-side metric via the same recipe on the dual product; the dual tensor
// already stores output label first, so it drops into the direct slot
inline Mat4 dual_metric_from_algebra(const Algebra& alg, double tol = 1e-14) {
    Algebra dual = alg;
    dual.lower = alg.upper;
    return metric_from_algebra(dual, tol);
}

} // namespace mixture
