#pragma once

#include <array>
#include <cmath>

#include "errors.hpp"
#include "fd.hpp"
#include "fields.hpp"
#include "involution.hpp"
#include "linalg.hpp"
#include "metric.hpp"
#include "mixture_tensor.hpp"
#include "multivector.hpp"

namespace mixture {

using Tensor4 = std::array<Tensor3, 4>; // [first slot][...rest as Tensor3]

// conditioning guard for frame/metric inversions
inline constexpr double kInversionCondLimit = 1e8;

// connection solving e_{a,b} = Gamma^g_{ab} e_g for a frame field
// e_a = L^{a'}_a ehat_{a'}: Gamma_b = L^{-1} (d_b L) as a matrix in (g, a)
inline Tensor3 connection_from_frame(const FrameField& frame, const Point4& z, const Fd& fd,
                                     const Box* box = nullptr) {
    const Mat4 L = frame(z);
    Mat4 Linv;
    try {
        Linv = mat4_inverse(L);
    } catch (const SingularMatrix& e) {
        throw SingularFrame(std::string("connection_from_frame: ") + e.what());
    }
    if (mat4_max_abs(L) * mat4_max_abs(Linv) > kInversionCondLimit)
        throw SingularFrame("connection_from_frame: conditioning beyond threshold");
    Tensor3 gamma{};
    for (int b = 0; b < 4; ++b) {
        const Mat4 dL = fd_partial(frame, z, b, fd, box);
        const Mat4 G = mat4_mul(Linv, dL);
        for (int g = 0; g < 4; ++g)
            for (int a = 0; a < 4; ++a) gamma[g][a][b] = G[g][a];
    }
    return gamma;
}

// the two contracted-connection matrices: the dual-basis derivative sums
//   W^d_a = Gamma^g_{ab} eta_g^{db}   (direct basis)
//   M^a_d = -Gamma^a_{gb} eta_d^{bg}  (dual basis)
inline Mat4 connection_w_matrix(const Algebra& alg, const Tensor3& gamma) {
    Mat4 W = mat4_zero();
    for (int d = 0; d < 4; ++d)
        for (int a = 0; a < 4; ++a)
            for (int g = 0; g < 4; ++g)
                for (int b = 0; b < 4; ++b) W[d][a] += gamma[g][a][b] * alg.upper[g][d][b];
    return W;
}

inline Mat4 connection_m_matrix(const Algebra& alg, const Tensor3& gamma) {
    Mat4 M = mat4_zero();
    for (int a = 0; a < 4; ++a)
        for (int d = 0; d < 4; ++d)
            for (int g = 0; g < 4; ++g)
                for (int b = 0; b < 4; ++b) M[a][d] -= gamma[a][g][b] * alg.upper[d][b][g];
    return M;
}

// symmetric connection from a metric field:
//   Gamma^s_{am} = (1/2) g^{bs} (g_{ab,m} + g_{bm,a} - g_{ma,b})
// symmetric in (a, m) bitwise when the metric callback returns symmetric
// matrices, because the swapped expression reuses identical samples
inline Tensor3 christoffel_from_metric(const MetricField& metric, const Point4& z,
                                       const Fd& fd, const Box* box = nullptr) {
    const Mat4 g = metric(z);
    Mat4 ginv;
    try {
        ginv = mat4_inverse(g);
    } catch (const SingularMatrix& e) {
        throw SingularMetric(std::string("christoffel_from_metric: ") + e.what());
    }
    if (mat4_max_abs(g) * mat4_max_abs(ginv) > kInversionCondLimit)
        throw SingularMetric("christoffel_from_metric: conditioning beyond threshold");
    std::array<Mat4, 4> dg;
    for (int m = 0; m < 4; ++m) dg[m] = fd_partial(metric, z, m, fd, box);
    Tensor3 gamma{};
    for (int s = 0; s < 4; ++s)
        for (int a = 0; a < 4; ++a)
            for (int m = 0; m < 4; ++m) {
                cplx sum = 0.0;
                for (int b = 0; b < 4; ++b)
                    sum += ginv[b][s] * (dg[m][a][b] + dg[a][b][m] - dg[b][m][a]);
                gamma[s][a][m] = 0.5 * sum;
            }
    return gamma;
}

struct Curvature {
    Tensor4 P{}; // P^a_{bvm} = Gamma^a_{sv} Gamma^s_{bm} + d_v Gamma^a_{bm}
    Tensor4 R{}; // R^a_{bvm} = (P^a_{bvm} - P^a_{bmv}) / 2; antisymmetric by construction
    Mat4 ricci{};    // R_{gm} = R^a_{gam}
    cplx scalar = 0.0; // g^{gm} R_{gm} when a metric is supplied
};

inline Curvature curvature(const ConnectionField& conn, const Point4& z, const Fd& fd,
                           const MetricField* metric = nullptr, const Box* box = nullptr) {
    const Tensor3 G = conn(z);
    std::array<Tensor3, 4> dG;
    for (int v = 0; v < 4; ++v) dG[v] = fd_partial(conn, z, v, fd, box);
    Curvature out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int v = 0; v < 4; ++v)
                for (int m = 0; m < 4; ++m) {
                    cplx p = dG[v][a][b][m];
                    for (int s = 0; s < 4; ++s) p += G[a][s][v] * G[s][b][m];
                    out.P[a][b][v][m] = p;
                }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int v = 0; v < 4; ++v)
                for (int m = 0; m < 4; ++m)
                    out.R[a][b][v][m] = 0.5 * (out.P[a][b][v][m] - out.P[a][b][m][v]);
    for (int g = 0; g < 4; ++g)
        for (int m = 0; m < 4; ++m) {
            cplx s = 0.0;
            for (int a = 0; a < 4; ++a) s += out.R[a][g][a][m];
            out.ricci[g][m] = s;
        }
    if (metric) {
        const Mat4 ginv = mat4_inverse((*metric)(z));
        for (int g = 0; g < 4; ++g)
            for (int m = 0; m < 4; ++m) out.scalar += ginv[g][m] * out.ricci[g][m];
    }
    return out;
}

// curvature built from a coefficient matrix K through the two-tensor pattern
//   R^a_{gvm} = K_{gb} eta_l^{ab} eta^l_{mv}
// whose trace is (channel count) * K; the symmetrized-pattern residue in the
// last two slots is reported alongside, not asserted
struct RicciAnsatz {
    Tensor4 R{};
    double trace_residual = 0.0; // max |R^a_{gam} - n K_{gm}|
    double sym_residual = 0.0;   // max |K_{gb} eta_l^{ab} eta^l_{(mv)}|
};

inline RicciAnsatz ricci_ansatz_check(const Algebra& alg, const Mat4& K) {
    const double n = algebra_channel_count(alg);
    RicciAnsatz out;
    for (int a = 0; a < 4; ++a)
        for (int g = 0; g < 4; ++g)
            for (int v = 0; v < 4; ++v)
                for (int m = 0; m < 4; ++m) {
                    cplx s = 0.0;
                    for (int l = 0; l < 4; ++l)
                        for (int b = 0; b < 4; ++b)
                            s += K[g][b] * alg.upper[l][a][b] * alg.lower[l][m][v];
                    out.R[a][g][v][m] = s;
                }
    for (int g = 0; g < 4; ++g)
        for (int m = 0; m < 4; ++m) {
            cplx tr = 0.0;
            for (int a = 0; a < 4; ++a) tr += out.R[a][g][a][m];
            out.trace_residual = std::max(out.trace_residual, std::abs(tr - n * K[g][m]));
        }
    for (int a = 0; a < 4; ++a)
        for (int g = 0; g < 4; ++g)
            for (int v = 0; v < 4; ++v)
                for (int m = 0; m < 4; ++m)
                    out.sym_residual = std::max(
                        out.sym_residual,
                        std::abs(0.5 * (out.R[a][g][v][m] + out.R[a][g][m][v])));
    return out;
}

enum class Variance { Vector, Dual };

// covariant derivative as a matrix [component][direction]:
//   vector: f^a_{;b} = f^a_{,b} + f^g Gamma^a_{gb}
//   dual:   f_{a;b} = f_{a,b} - f_g Gamma^g_{ab}
inline Mat4 covariant_derivative(const MVField& f, const Tensor3& gamma, const Point4& z,
                                 Variance variance, const Fd& fd, const Box* box = nullptr) {
    const MultiVector fz = f(z);
    std::array<MultiVector, 4> df;
    for (int b = 0; b < 4; ++b) df[b] = fd_partial(f, z, b, fd, box);
    Mat4 out = mat4_zero();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            cplx s = df[b][a];
            if (variance == Variance::Vector)
                for (int g = 0; g < 4; ++g) s += fz[g] * gamma[a][g][b];
            else
                for (int g = 0; g < 4; ++g) s -= fz[g] * gamma[g][a][b];
            out[a][b] = s;
        }
    return out;
}

// fields induced by a frame over the constant reference algebra
inline MetricField frame_metric_field(const FrameField& frame, const Algebra& alg) {
    const Mat4 g0 = metric_from_algebra(alg);
    return [frame, g0](const Point4& z) {
        const Mat4 L = frame(z);
        Mat4 g = mat4_zero();
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int ap = 0; ap < 4; ++ap)
                    for (int bp = 0; bp < 4; ++bp)
                        g[a][b] += L[ap][a] * L[bp][b] * g0[ap][bp];
        return g;
    };
}

inline Tensor3Field frame_mixture_field(const FrameField& frame, const Algebra& alg) {
    return [frame, alg](const Point4& z) {
        const Mat4 L = frame(z);
        const Mat4 Linv = mat4_inverse(L);
        Tensor3 eta{};
        for (int g = 0; g < 4; ++g)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    cplx s = 0.0;
                    for (int gp = 0; gp < 4; ++gp)
                        for (int ap = 0; ap < 4; ++ap)
                            for (int bp = 0; bp < 4; ++bp)
                                s += L[ap][a] * L[bp][b] * alg.lower[gp][ap][bp] *
                                     Linv[g][gp];
                    eta[g][a][b] = s;
                }
        return eta;
    };
}

// symmetrized mirrored product of frame columns: channel 0 recovers the
// frame metric; the spatial channels vanish for block frames with a unit
// time leg and feed the split residuals below
inline Tensor3Field frame_mirrored_product_field(const FrameField& frame,
                                                 const Algebra& alg) {
    return [frame, alg](const Point4& z) {
        const Mat4 L = frame(z);
        Tensor3 out{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                MultiVector ea, ebbar;
                for (int r = 0; r < 4; ++r) {
                    ea[r] = L[r][a];
                    ebbar[r] = alg.mirror_weight[r] * L[r][b];
                }
                const MultiVector p = mv_mul(alg, ea, ebbar);
                for (int g = 0; g < 4; ++g) out[g][a][b] = p[g];
            }
        // symmetrize the (a, b) pair
        Tensor3 sym{};
        for (int g = 0; g < 4; ++g)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    sym[g][a][b] = 0.5 * (out[g][a][b] + out[g][b][a]);
        return sym;
    };
}

inline ConnectionField frame_connection_field(const FrameField& frame, const Fd& fd,
                                              const Box* box = nullptr) {
    return [frame, fd, box](const Point4& z) {
        return connection_from_frame(frame, z, fd, box);
    };
}

// compatibility residuals of a (metric, mixture, connection) triple
struct CompatibilityResult {
    double metric_residual = 0.0;  // max |g_{ab,m} - Gamma^l_{am} g_{lb} - Gamma^l_{bm} g_{al}|
    double mixture_residual = 0.0; // max |four-term covariant derivative of eta|
    double split_scalar_residual = 0.0; // scalar line of the mirrored-product split
    double split_vector_residual = 0.0; // spatial lines of the mirrored-product split
};

inline CompatibilityResult compatibility_residuals(const MetricField& metric,
                                                   const Tensor3Field& mixture,
                                                   const Tensor3& gamma,
                                                   const Tensor3Field& mirrored_product,
                                                   const Point4& z, const Fd& fd,
                                                   const Box* box = nullptr) {
    CompatibilityResult out;
    const Mat4 g = metric(z);
    const Tensor3 eta = mixture(z);

    for (int m = 0; m < 4; ++m) {
        const Mat4 dg = fd_partial(metric, z, m, fd, box);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                cplx r = dg[a][b];
                for (int l = 0; l < 4; ++l)
                    r -= gamma[l][a][m] * g[l][b] + gamma[l][b][m] * g[a][l];
                out.metric_residual = std::max(out.metric_residual, std::abs(r));
            }

        const Tensor3 de = fd_partial(mixture, z, m, fd, box);
        for (int g4 = 0; g4 < 4; ++g4)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    cplx r = de[g4][a][b];
                    for (int l = 0; l < 4; ++l)
                        r += eta[l][a][b] * gamma[g4][l][m] - eta[g4][l][b] * gamma[l][a][m] -
                             eta[g4][a][l] * gamma[l][b][m];
                    out.mixture_residual = std::max(out.mixture_residual, std::abs(r));
                }

        // split of the mirrored-product derivative against the metric:
        //   channel 0:  g_{ab,m} = d_m(mp^0_{ab}) + g_{ab} Gamma^0_{0m}
        //   channel i:  0 = d_m(mp^i_{ab}) + g_{ab} Gamma^i_{0m}
        const Tensor3 dmp = fd_partial(mirrored_product, z, m, fd, box);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const cplx r0 = dg[a][b] - (dmp[0][a][b] + g[a][b] * gamma[0][0][m]);
                out.split_scalar_residual = std::max(out.split_scalar_residual, std::abs(r0));
                for (int i = 1; i < 4; ++i) {
                    const cplx ri = dmp[i][a][b] + g[a][b] * gamma[i][0][m];
                    out.split_vector_residual =
                        std::max(out.split_vector_residual, std::abs(ri));
                }
            }
    }
    return out;
}

// commutation coefficients and the symmetric/antisymmetric split of Gamma
struct Commutation {
    Tensor3 C{};    // C^d_{ba} = Gamma^d_{ab} - Gamma^d_{ba}
    Tensor3 sym{};  // Gamma^d_{(ab)}
    Tensor3 anti{}; // Gamma^d_{[ab]} = C^d_{ba} / 2
};

inline Commutation commutation_coefficients(const Tensor3& gamma) {
    Commutation out;
    for (int d = 0; d < 4; ++d)
        for (int b = 0; b < 4; ++b)
            for (int a = 0; a < 4; ++a) {
                out.C[d][b][a] = gamma[d][a][b] - gamma[d][b][a];
                out.sym[d][b][a] = 0.5 * (gamma[d][b][a] + gamma[d][a][b]);
                out.anti[d][b][a] = 0.5 * (gamma[d][b][a] - gamma[d][a][b]);
            }
    return out;
}

// direct commutator oracle for frame-induced connections:
//   C^d_{ba} = (L^{-1})^d_{l'} (d_b L^{l'}_a - d_a L^{l'}_b)
inline Tensor3 lie_bracket_coefficients(const FrameField& frame, const Point4& z,
                                        const Fd& fd, const Box* box = nullptr) {
    const Mat4 Linv = mat4_inverse(frame(z));
    std::array<Mat4, 4> dL;
    for (int b = 0; b < 4; ++b) dL[b] = fd_partial(frame, z, b, fd, box);
    Tensor3 C{};
    for (int d = 0; d < 4; ++d)
        for (int b = 0; b < 4; ++b)
            for (int a = 0; a < 4; ++a) {
                cplx s = 0.0;
                for (int lp = 0; lp < 4; ++lp)
                    s += Linv[d][lp] * (dL[b][lp][a] - dL[a][lp][b]);
                C[d][b][a] = s;
            }
    return C;
}

// residual of the second-order relation tying repeated covariant
// derivatives of f to the connection and curvature:
//   bracket T^a_{mv} = f^a_{;[mv]} + f^a_{;g} Gamma^g_{[mv]} - f^g R^a_{gvm}
// with f^a_{;mv} = d_v(f^a_{;m}) + f^g_{;m} Gamma^a_{gv} - f^a_{;g} Gamma^g_{mv};
// returned contracted with mirror weights and the dual tensor:
//   B^a_d = sum_{mv} w_m w_v T^a_{mv} eta_d^{vm}
inline Mat4 second_order_residual(const Algebra& alg, const MVField& f,
                                  const ConnectionField& conn, const Tensor4& R,
                                  const Point4& z, const Fd& fd, const Box* box = nullptr) {
    const Tensor3 G = conn(z);
    const MultiVector fz = f(z);
    auto covd = [&](const Point4& p) {
        return covariant_derivative(f, conn(p), p, Variance::Vector, fd, box);
    };
    const Mat4 cd = covd(z);
    std::array<Mat4, 4> dcd;
    for (int v = 0; v < 4; ++v) dcd[v] = fd_partial(covd, z, v, fd, box);

    // second covariant derivative s[a][m][v]
    Tensor3 s{};
    for (int a = 0; a < 4; ++a)
        for (int m = 0; m < 4; ++m)
            for (int v = 0; v < 4; ++v) {
                cplx x = dcd[v][a][m];
                for (int g = 0; g < 4; ++g)
                    x += cd[g][m] * G[a][g][v] - cd[a][g] * G[g][m][v];
                s[a][m][v] = x;
            }

    Mat4 B = mat4_zero();
    for (int a = 0; a < 4; ++a)
        for (int m = 0; m < 4; ++m)
            for (int v = 0; v < 4; ++v) {
                cplx t = 0.5 * (s[a][m][v] - s[a][v][m]);
                for (int g = 0; g < 4; ++g) {
                    t += cd[a][g] * 0.5 * (G[g][m][v] - G[g][v][m]);
                    t -= fz[g] * R[a][g][v][m];
                }
                t *= alg.mirror_weight[m] * alg.mirror_weight[v];
                for (int d = 0; d < 4; ++d) B[a][d] += t * alg.upper[d][v][m];
            }
    return B;
}

} // namespace mixture
