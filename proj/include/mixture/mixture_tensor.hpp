#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "errors.hpp"
#include "linalg.hpp"
#include "multivector.hpp"

namespace mixture {

// rank-3 structure-constant block; slot meanings depend on variance:
//   lower[g][a][b] : component g of the product e_a e_b
//   upper[d][a][b] : component pair (a,b) of the dual product carrying lower label d
using Tensor3 = std::array<std::array<std::array<cplx, 4>, 4>, 4>;

inline Tensor3 tensor3_zero() {
    Tensor3 t{};
    return t;
}

inline double tensor3_max_abs_diff(const Tensor3& a, const Tensor3& b) {
    double m = 0.0;
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) m = std::max(m, std::abs(a[g][x][y] - b[g][x][y]));
    return m;
}

// the algebra bundle: both variance forms of the structure tensor plus the
// mirror weights that define the main involution
struct Algebra {
    Tensor3 lower{};
    Tensor3 upper{};
    std::array<double, 4> mirror_weight{1.0, 1.0, 1.0, 1.0};
};

// product table of the four-channel algebra over complex coefficients:
//   e0 is the identity, each axis squares to e0, and a product of two
//   distinct axes is +/- i times the third (cyclic +, anticyclic -)
inline Algebra natural_algebra() {
    Algebra alg;
    const cplx I(0.0, 1.0);
    for (int a = 0; a < 4; ++a) {
        alg.lower[0][a][a] = 1.0;
        alg.lower[a][0][a] = 1.0;
        alg.lower[a][a][0] = 1.0;
    }
    alg.lower[0][0][0] = 1.0; // the three rules above coincide here
    const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& t : cyc) {
        const int a = t[0], b = t[1], g = t[2];
        alg.lower[g][a][b] = I;
        alg.lower[g][b][a] = -I;
    }
    // duals coincide with the direct basis (each axis is its own inverse),
    // and the direct tensor is invariant under cyclic slot rotation, so the
    // dual-variance tensor has identical entries in its own slot convention
    alg.upper = alg.lower;
    alg.mirror_weight = {1.0, -1.0, -1.0, -1.0};
    return alg;
}

// two-channel restriction (1, i) embedded with channels 2 and 3 dead;
// reproduces classical complex-plane calculus (Cauchy-Riemann residuals)
inline Algebra planar_algebra() {
    Algebra alg;
    alg.lower = tensor3_zero();
    alg.lower[0][0][0] = 1.0;
    alg.lower[1][0][1] = 1.0;
    alg.lower[1][1][0] = 1.0;
    alg.lower[0][1][1] = -1.0;
    alg.upper = alg.lower; // dual of i is -i; resulting entries coincide
    alg.mirror_weight = {1.0, -1.0, 1.0, 1.0};
    return alg;
}

inline MultiVector mv_mul(const Algebra& alg, const MultiVector& a, const MultiVector& b) {
    MultiVector r;
    for (int al = 0; al < 4; ++al) {
        if (a[al] == cplx(0.0)) continue;
        for (int be = 0; be < 4; ++be) {
            if (b[be] == cplx(0.0)) continue;
            const cplx ab = a[al] * b[be];
            for (int g = 0; g < 4; ++g) {
                const cplx w = alg.lower[g][al][be];
                if (w != cplx(0.0)) r[g] += w * ab;
            }
        }
    }
    return r;
}

// channel count of the active algebra, read off the dual trace; this is the
// normalization appearing in averaged contractions (4 natural, 2 planar)
inline double algebra_channel_count(const Algebra& alg) {
    cplx n = 0.0;
    for (int b = 0; b < 4; ++b) n += alg.upper[b][0][b];
    return n.real();
}

// signature: sum of mirror weights (-2 for the natural algebra)
inline double algebra_signature(const Algebra& alg) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a) s += alg.mirror_weight[a];
    return s;
}

// well-formedness: product must be associative; checked exactly over all
// basis triples via the two ways of parenthesizing e_a e_b e_g
inline double associativity_residual(const Algebra& alg) {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                const MultiVector left =
                    mv_mul(alg, mv_mul(alg, mv_basis(a), mv_basis(b)), mv_basis(g));
                const MultiVector right =
                    mv_mul(alg, mv_basis(a), mv_mul(alg, mv_basis(b), mv_basis(g)));
                worst = std::max(worst, mv_dist(left, right));
            }
    return worst;
}

// well-formedness of the self-inverse construction (duals equal the direct
// basis): the pairing then demands lower[a][g][b] == upper[b][a][g]
// entrywise; restrictions with non-self-inverse duals need not satisfy it
inline double dual_consistency_residual(const Algebra& alg) {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int g = 0; g < 4; ++g)
            for (int b = 0; b < 4; ++b)
                worst = std::max(worst, std::abs(alg.lower[a][g][b] - alg.upper[b][a][g]));
    return worst;
}

} // namespace mixture
