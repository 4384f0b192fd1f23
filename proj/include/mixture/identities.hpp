#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "involution.hpp"
#include "linalg.hpp"
#include "mixture_tensor.hpp"
#include "multivector.hpp"
#include "rng.hpp"
#include "suite_report.hpp"

// the structure-tensor identity suite: every closed-form relation the two
// variance forms must satisfy, evaluated by direct contraction, plus sampled
// covariance/involution properties; residuals are max-abs deviations

namespace mixture {

namespace detail {

inline double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

inline MultiVector random_mv(Rng& rng) {
    MultiVector z;
    for (int i = 0; i < 4; ++i) z[i] = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return z;
}

} // namespace detail

// three placements of the dual contraction, each equal to the channel count
// times the identity matrix
inline double contraction_inverse_residual(const Algebra& alg, int form) {
    const double n = algebra_channel_count(alg);
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int d = 0; d < 4; ++d) {
            cplx s = 0.0;
            for (int b = 0; b < 4; ++b)
                for (int g = 0; g < 4; ++g) {
                    if (form == 0) s += alg.lower[a][b][g] * alg.upper[d][g][b];
                    else if (form == 1) s += alg.lower[g][d][b] * alg.upper[g][b][a];
                    else s += alg.upper[g][a][b] * alg.lower[g][b][d];
                }
            worst = std::max(worst, std::abs(s - n * detail::kron(a, d)));
        }
    return worst;
}

// both tensors are invariant under cyclic rotation of all three slots
inline double cyclic_residual(const Tensor3& t) {
    double worst = 0.0;
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                worst = std::max(worst, std::abs(t[g][a][b] - t[a][b][g]));
                worst = std::max(worst, std::abs(t[g][a][b] - t[b][g][a]));
            }
    return worst;
}

// swapping the two factor slots conjugates the entry, for either variance
inline double conjugate_reflection_residual(const Tensor3& t) {
    double worst = 0.0;
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                worst = std::max(worst, std::abs(t[g][a][b] - std::conj(t[g][b][a])));
    return worst;
}

// normalized two-tensor pseudo-inverses (channel-count normalization)
inline double pseudo_inverse_residual(const Algebra& alg, int form) {
    const double n = algebra_channel_count(alg);
    double worst = 0.0;
    if (form == 0) {
        for (int g = 0; g < 4; ++g)
            for (int d = 0; d < 4; ++d) {
                cplx s = 0.0;
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) s += alg.lower[g][a][b] * alg.upper[d][b][a];
                worst = std::max(worst, std::abs(s / n - detail::kron(g, d)));
            }
    } else {
        for (int d = 0; d < 4; ++d)
            for (int b = 0; b < 4; ++b) {
                cplx s = 0.0;
                for (int a = 0; a < 4; ++a)
                    for (int g = 0; g < 4; ++g) s += alg.lower[g][a][b] * alg.upper[g][d][a];
                worst = std::max(worst, std::abs(s / n - detail::kron(d, b)));
            }
    }
    return worst;
}

// four single-sum index exchanges between the two variances
inline double exchange_residual(const Algebra& alg, int form) {
    double worst = 0.0;
    for (int b = 0; b < 4; ++b)
        for (int g = 0; g < 4; ++g)
            for (int a = 0; a < 4; ++a)
                for (int d = 0; d < 4; ++d) {
                    cplx lhs = 0.0, rhs = 0.0;
                    for (int l = 0; l < 4; ++l) {
                        switch (form) {
                            case 0:
                                lhs += alg.lower[b][g][l] * alg.upper[d][a][l];
                                rhs += alg.upper[l][a][b] * alg.lower[l][g][d];
                                break;
                            case 1:
                                lhs += alg.lower[b][g][l] * alg.upper[d][l][a];
                                rhs += alg.upper[g][a][l] * alg.lower[b][l][d];
                                break;
                            case 2:
                                lhs += alg.lower[b][l][g] * alg.upper[d][l][a];
                                rhs += alg.upper[l][b][a] * alg.lower[l][d][g];
                                break;
                            default:
                                lhs += alg.lower[b][l][g] * alg.upper[d][a][l];
                                rhs += alg.upper[g][l][a] * alg.lower[b][d][l];
                                break;
                        }
                    }
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

// four triple-product closures: each tensor reproduces itself through a
// double contraction with its two variance forms, divided by channel count
inline double triple_closure_residual(const Algebra& alg, int form) {
    const double n = algebra_channel_count(alg);
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                cplx s = 0.0;
                for (int m = 0; m < 4; ++m)
                    for (int v = 0; v < 4; ++v)
                        for (int w = 0; w < 4; ++w) {
                            switch (form) {
                                case 0:
                                    s += alg.lower[a][m][v] * alg.lower[m][b][w] *
                                         alg.upper[g][v][w];
                                    break;
                                case 1:
                                    s += alg.upper[a][m][v] * alg.upper[m][b][w] *
                                         alg.lower[g][v][w];
                                    break;
                                case 2:
                                    s += alg.lower[a][v][m] * alg.lower[m][w][b] *
                                         alg.upper[g][w][v];
                                    break;
                                default:
                                    s += alg.upper[a][v][m] * alg.upper[m][w][b] *
                                         alg.lower[g][w][v];
                                    break;
                            }
                        }
                const cplx want = (form == 0)   ? alg.lower[a][b][g]
                                  : (form == 1) ? alg.upper[a][b][g]
                                  : (form == 2) ? alg.lower[a][g][b]
                                                : alg.upper[a][g][b];
                worst = std::max(worst, std::abs(s / n - want));
            }
    return worst;
}

// mirror-weighted contraction: normalizing by the signature instead of the
// channel count, with one summed index mirror-flipped
inline double signature_inverse_residual(const Algebra& alg) {
    const double s = algebra_signature(alg);
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int d = 0; d < 4; ++d) {
            cplx acc = 0.0;
            for (int b = 0; b < 4; ++b)
                for (int g = 0; g < 4; ++g)
                    acc += alg.lower[a][b][g] * alg.mirror_weight[g] * alg.upper[d][g][b];
            worst = std::max(worst, std::abs(acc / s - detail::kron(a, d)));
        }
    return worst;
}

// the mirror map conjugated by any invertible channel transformation is
// again an involution, and intertwines the two frames
inline double mirror_covariance_residual(const Algebra& alg, Rng& rng, int samples) {
    Mat4 M = mat4_zero();
    for (int i = 0; i < 4; ++i) M[i][i] = alg.mirror_weight[i];
    double worst = 0.0;
    for (int t = 0; t < samples; ++t) {
        // conjugation error scales with the square of the conditioning, so
        // ill-conditioned draws are rejected to keep the check meaningful
        Mat4 L;
        double cond = 0.0;
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    L[i][j] = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            try {
                cond = mat4_cond_estimate(L);
            } catch (const SingularMatrix&) {
                cond = 1e18;
            }
        } while (cond > 30.0);
        const Mat4 Linv = mat4_inverse(L);
        const Mat4 Mp = mat4_mul(mat4_mul(L, M), Linv);
        // involution survives conjugation
        const Mat4 MpMp = mat4_mul(Mp, Mp);
        const Mat4 id = mat4_identity();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                worst = std::max(worst, std::abs(MpMp[i][j] - id[i][j]));
        // intertwining on a random element
        const MultiVector z = detail::random_mv(rng);
        const auto lhs = mat4_apply(L, mat4_apply(M, z.c));
        const auto rhs = mat4_apply(Mp, mat4_apply(L, z.c));
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    }
    return worst;
}

inline double involution_property_residual(const Algebra& alg, Rng& rng, int samples,
                                           int which) {
    double worst = 0.0;
    for (int t = 0; t < samples; ++t) {
        const MultiVector z = detail::random_mv(rng);
        const MultiVector w = detail::random_mv(rng);
        const MultiVector zw = mv_mul(alg, z, w);
        switch (which) {
            case 0:
                worst = std::max(
                    worst, mv_dist(conjugate(zw), mv_mul(alg, conjugate(w), conjugate(z))));
                break;
            case 1:
                worst = std::max(worst, mv_dist(adjoint(alg, zw),
                                                mv_mul(alg, adjoint(alg, z), adjoint(alg, w))));
                break;
            default:
                worst = std::max(worst, std::abs(magnitude_sq(alg, zw) -
                                                 magnitude_sq(alg, z) * magnitude_sq(alg, w)));
                break;
        }
    }
    return worst;
}

inline SuiteResult run_identity_suite(const Algebra& alg, std::uint64_t seed,
                                      int samples = 1000, double tol = 1e-12) {
    SuiteResult r;
    r.suite = "algebra-identities";
    r.seed = seed;
    Rng rng(seed);

    static const char* forms[] = {"a", "b", "c", "d"};
    for (int f = 0; f < 3; ++f)
        r.add(std::string("contraction-inverse-") + forms[f],
              "dual contraction equals channel count times identity",
              contraction_inverse_residual(alg, f), tol);
    r.add("cyclic-direct", "direct tensor invariant under cyclic slot rotation",
          cyclic_residual(alg.lower), tol);
    r.add("cyclic-dual", "dual tensor invariant under cyclic slot rotation",
          cyclic_residual(alg.upper), tol);
    r.add("conjugate-reflection-direct", "factor swap conjugates direct entries",
          conjugate_reflection_residual(alg.lower), tol);
    r.add("conjugate-reflection-dual", "factor swap conjugates dual entries",
          conjugate_reflection_residual(alg.upper), tol);
    for (int f = 0; f < 2; ++f)
        r.add(std::string("pseudo-inverse-") + forms[f],
              "normalized two-tensor contraction is the identity",
              pseudo_inverse_residual(alg, f), tol);
    for (int f = 0; f < 4; ++f)
        r.add(std::string("exchange-") + forms[f],
              "single-sum index exchange between variances",
              exchange_residual(alg, f), tol);
    for (int f = 0; f < 4; ++f)
        r.add(std::string("triple-closure-") + forms[f],
              "tensor reproduced by normalized double contraction",
              triple_closure_residual(alg, f), tol);
    r.add("signature-inverse",
          "mirror-weighted contraction normalized by signature is the identity",
          signature_inverse_residual(alg), tol);
    r.add("mirror-covariance",
          "conjugated mirror stays an involution and intertwines frames",
          mirror_covariance_residual(alg, rng, samples), tol);
    r.add("conjugate-antihomomorphism", "conjugation reverses products",
          involution_property_residual(alg, rng, samples, 0), tol);
    r.add("adjoint-homomorphism", "adjoint preserves products",
          involution_property_residual(alg, rng, samples, 1), tol);
    r.add("magnitude-multiplicative", "squared magnitude is multiplicative",
          involution_property_residual(alg, rng, samples, 2), tol);
    return r;
}

} // namespace mixture
