#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "fd.hpp"
#include "fields.hpp"
#include "geometry.hpp"
#include "linalg.hpp"
#include "metric.hpp"
#include "mixture_tensor.hpp"
#include "multivector.hpp"
#include "suite_report.hpp"

namespace mixture {

// ---------------------------------------------------------------------------
// potentials and field samples
// ---------------------------------------------------------------------------

// time-component potential plus spatial vector potential; components are
// callbacks over coordinate points (axis 0 is time, axes 1..3 are space)
struct FourPotential {
    ScalarField phi;
    std::array<ScalarField, 3> A;
};

struct EMFieldSample {
    double alpha = 0.0;
    std::array<double, 3> E{};
    std::array<double, 3> B{};
};

// channel assembly alpha - E + iB: scalar channel alpha, axis channel k gets
// -E_k + i B_k
inline MultiVector em_multivector(const EMFieldSample& s) {
    MultiVector f;
    f[0] = s.alpha;
    for (int i = 0; i < 3; ++i) f[i + 1] = cplx(-s.E[i], s.B[i]);
    return f;
}

namespace detail {

// Levi-Civita symbol on {0,1,2}
inline constexpr int eps3(int i, int j, int k) {
    return ((i - j) * (j - k) * (k - i)) / 2;
}

} // namespace detail

// first-derivative field combination: alpha = d_t phi + div A,
// E = grad phi + d_t A, B = curl A
inline EMFieldSample em_derivative(const FourPotential& h, const Point4& z, const Fd& fd,
                                   const Box* box = nullptr) {
    EMFieldSample s;
    s.alpha = fd_partial(h.phi, z, 0, fd, box);
    for (int i = 0; i < 3; ++i) s.alpha += fd_partial(h.A[i], z, i + 1, fd, box);
    for (int i = 0; i < 3; ++i)
        s.E[i] = fd_partial(h.phi, z, i + 1, fd, box) + fd_partial(h.A[i], z, 0, fd, box);
    for (int i = 0; i < 3; ++i) {
        double b = 0.0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int e = detail::eps3(i, j, k);
                if (e != 0) b += e * fd_partial(h.A[k], z, j + 1, fd, box);
            }
        s.B[i] = b;
    }
    return s;
}

// residual groups of the source-free field equations, evaluated through
// second-partial stencils of the potentials:
//   gauss_e  = div E + d_t alpha
//   ampere   = curl B + d_t E + grad alpha   (cross products emit a factor i
//              through the mixture; the stripped real value is kept)
//   gauss_b  = div B
//   faraday  = curl E - d_t B
// gauss_b and faraday are derivative-exchange identities of any smooth
// potential; gauss_e and ampere vanish exactly on divergence-free wave
// solutions (alpha = 0 with d'Alembertian-free phi and A)
struct MaxwellResiduals {
    double gauss_e = 0.0;
    std::array<double, 3> ampere{};
    double gauss_b = 0.0;
    std::array<double, 3> faraday{};

    double max_abs() const {
        double m = std::abs(gauss_e);
        m = std::max(m, std::abs(gauss_b));
        for (int i = 0; i < 3; ++i) {
            m = std::max(m, std::abs(ampere[i]));
            m = std::max(m, std::abs(faraday[i]));
        }
        return m;
    }
};

inline MaxwellResiduals maxwell_residuals(const FourPotential& h, const Point4& z, const Fd& fd,
                                          const Box* box = nullptr) {
    // d2phi[a][b] = d_a d_b phi ; d2A[m][a][b] = d_a d_b A_m (axes 0..3)
    std::array<std::array<double, 4>, 4> d2phi{};
    std::array<std::array<std::array<double, 4>, 4>, 3> d2A{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            d2phi[a][b] = fd_second(h.phi, z, a, b, fd, box);
            for (int m = 0; m < 3; ++m) d2A[m][a][b] = fd_second(h.A[m], z, a, b, fd, box);
        }

    MaxwellResiduals r;
    // div E + d_t alpha
    r.gauss_e = d2phi[0][0];
    for (int i = 0; i < 3; ++i)
        r.gauss_e += d2phi[i + 1][i + 1] + d2A[i][i + 1][0] + d2A[i][0][i + 1];
    // curl B + d_t E + grad alpha
    for (int i = 0; i < 3; ++i) {
        double v = d2phi[0][i + 1] + d2A[i][0][0] + d2phi[i + 1][0];
        for (int j = 0; j < 3; ++j) v += d2A[j][i + 1][j + 1];
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    for (int m = 0; m < 3; ++m) {
                        const int e = detail::eps3(i, j, k) * detail::eps3(k, l, m);
                        if (e != 0) v += e * d2A[m][j + 1][l + 1];
                    }
        r.ampere[i] = v;
    }
    // div B
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m) {
                const int e = detail::eps3(i, l, m);
                if (e != 0) r.gauss_b += e * d2A[m][i + 1][l + 1];
            }
    // curl E - d_t B
    for (int i = 0; i < 3; ++i) {
        double v = 0.0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int e = detail::eps3(i, j, k);
                if (e != 0) v += e * (d2phi[j + 1][k + 1] + d2A[k][j + 1][0] - d2A[k][0][j + 1]);
            }
        r.faraday[i] = v;
    }
    return r;
}

// ---------------------------------------------------------------------------
// rank-one connection built from a covector field
// ---------------------------------------------------------------------------

// connection Gamma^mu_{ab} = delta^mu_a h_b turns the covector h into a
// curvature that factors as identity (x) F with F[v][m] = (d_v h_m - d_m h_v)/2;
// the quadratic connection terms cancel exactly under antisymmetrization
struct SimpleFieldCurvature {
    Curvature curv;
    Mat4 F{};                    // F[v][m] = (d_v h_m - d_m h_v) / 2
    double match_residual = 0.0; // max |R^a_{bvm} - delta^a_b F[v][m]|
    double trace_residual = 0.0; // max_a |sum_b Gamma^b_{ab} - h_a|
};

inline SimpleFieldCurvature simple_field_curvature(const MVField& h, const Point4& z,
                                                   const Fd& fd, const Box* box = nullptr) {
    ConnectionField conn = [h](const Point4& p) {
        const MultiVector v = h(p);
        Tensor3 g{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) g[a][a][b] = v[b];
        return g;
    };
    SimpleFieldCurvature out;
    out.curv = curvature(conn, z, fd, nullptr, box);

    std::array<MultiVector, 4> dh;
    for (int v = 0; v < 4; ++v) dh[v] = fd_partial(h, z, v, fd, box);
    for (int v = 0; v < 4; ++v)
        for (int m = 0; m < 4; ++m) out.F[v][m] = 0.5 * (dh[v][m] - dh[m][v]);

    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int v = 0; v < 4; ++v)
                for (int m = 0; m < 4; ++m) {
                    const cplx want = (a == b) ? out.F[v][m] : cplx(0.0);
                    out.match_residual =
                        std::max(out.match_residual, std::abs(out.curv.R[a][b][v][m] - want));
                }

    const Tensor3 G = conn(z);
    const MultiVector hz = h(z);
    for (int a = 0; a < 4; ++a) {
        cplx tr = 0.0;
        for (int b = 0; b < 4; ++b) tr += G[b][a][b];
        out.trace_residual = std::max(out.trace_residual, std::abs(tr - hz[a]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// matrix-valued potentials and their field tensor
// ---------------------------------------------------------------------------

using MatCField = std::function<MatC(const Point4&)>;

struct MatrixPotentialSet {
    int k = 2;                    // matrix dimension
    double eps = 1.0;             // coupling scale
    std::array<MatCField, 4> H{}; // one matrix field per coordinate axis
};

// F[mu][nu], each entry a k-by-k matrix
using YmTensor = std::array<std::array<MatC, 4>, 4>;

// the commutator term of the field tensor comes in two normalizations that
// cannot both hold at once:
//   Imaginary:  F_mn = (d_n H_m - d_m H_n)/2 + i eps (H_m H_n - H_n H_m)/2
//               -- the combination that conjugates exactly under the gauge
//                  shift H'_m = S^-1 H_m S + (i/eps) S^-1 d_m S
//   Real:       F_mn = (d_n H_m - d_m H_n)/2 + eps (H_n H_m - H_m H_n)/2
//               -- the combination matched by the curvature of the matrix
//                  connection G_m = eps H_m (R_nm = eps F_mn)
enum class YmCommutator { Imaginary, Real };

inline YmTensor yang_mills_field_tensor(const MatrixPotentialSet& pot, const Point4& z,
                                        const Fd& fd,
                                        YmCommutator form = YmCommutator::Imaginary,
                                        const Box* box = nullptr) {
    std::array<MatC, 4> Hv;
    std::array<std::array<MatC, 4>, 4> dH; // dH[v][m] = d_v H_m
    for (int m = 0; m < 4; ++m) {
        Hv[m] = pot.H[m](z);
        for (int v = 0; v < 4; ++v) dH[v][m] = fd_partial(pot.H[m], z, v, fd, box);
    }
    const cplx cf = (form == YmCommutator::Imaginary) ? cplx(0.0, pot.eps) : cplx(-pot.eps, 0.0);
    YmTensor F;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            F[mu][nu] = 0.5 * (dH[nu][mu] - dH[mu][nu]) +
                        (0.5 * cf) * (Hv[mu] * Hv[nu] - Hv[nu] * Hv[mu]);
    return F;
}

inline double ym_tensor_distance(const YmTensor& a, const YmTensor& b) {
    double m = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) m = std::max(m, matc_max_abs(a[mu][nu] - b[mu][nu]));
    return m;
}

// curvature of the matrix connection G_m = eps H_m through the antisymmetrized
// product route, reported against eps times the Real-form field tensor; the
// two groupings are algebraically identical, so the residual is roundoff
struct YmCurvatureRelation {
    YmTensor R{};          // R[v][m] = (P_vm - P_mv)/2, P_vm = d_v G_m + G_v G_m
    double residual = 0.0; // max |R[v][m] - eps F_real[m][v]|
};

inline YmCurvatureRelation ym_curvature_relation(const MatrixPotentialSet& pot, const Point4& z,
                                                 const Fd& fd, const Box* box = nullptr) {
    std::array<MatC, 4> G;
    std::array<std::array<MatC, 4>, 4> dG; // dG[v][m] = d_v G_m
    for (int m = 0; m < 4; ++m) {
        G[m] = cplx(pot.eps) * pot.H[m](z);
        MatCField Gm = [f = pot.H[m], e = pot.eps](const Point4& p) { return cplx(e) * f(p); };
        for (int v = 0; v < 4; ++v) dG[v][m] = fd_partial(Gm, z, v, fd, box);
    }
    YmCurvatureRelation out;
    std::array<std::array<MatC, 4>, 4> P;
    for (int v = 0; v < 4; ++v)
        for (int m = 0; m < 4; ++m) P[v][m] = dG[v][m] + G[v] * G[m];
    for (int v = 0; v < 4; ++v)
        for (int m = 0; m < 4; ++m) out.R[v][m] = 0.5 * (P[v][m] - P[m][v]);

    const YmTensor Fr = yang_mills_field_tensor(pot, z, fd, YmCommutator::Real, box);
    for (int v = 0; v < 4; ++v)
        for (int m = 0; m < 4; ++m)
            out.residual =
                std::max(out.residual, matc_max_abs(out.R[v][m] - cplx(pot.eps) * Fr[m][v]));
    return out;
}

// gauge shift of the potentials followed by a recomputation of the field
// tensor; reports the distance to the directly conjugated tensor
inline SuiteResult gauge_covariance_check(const MatrixPotentialSet& pot, const MatCField& S,
                                          const Point4& z, const Fd& fd, double tol = 1e-6,
                                          std::uint64_t seed = 0, const Box* box = nullptr) {
    if (pot.eps == 0.0) throw Error("gauge_covariance_check: coupling must be nonzero");
    MatC Sz;
    MatC Szinv;
    try {
        Sz = S(z);
        Szinv = matc_inverse(Sz);
    } catch (const SingularMatrix& e) {
        throw SingularGauge(std::string("gauge matrix not invertible at the base point: ") +
                            e.what());
    }

    MatrixPotentialSet shifted;
    shifted.k = pot.k;
    shifted.eps = pot.eps;
    for (int m = 0; m < 4; ++m) {
        shifted.H[m] = [H = pot.H[m], S, m, fd, box, eps = pot.eps](const Point4& p) {
            MatC Sp = S(p);
            MatC Spinv;
            try {
                Spinv = matc_inverse(Sp);
            } catch (const SingularMatrix& e) {
                throw SingularGauge(std::string("gauge matrix not invertible at a stencil point: ") +
                                    e.what());
            }
            const MatC dS = fd_partial(S, p, m, fd, box);
            return Spinv * H(p) * Sp + cplx(0.0, 1.0 / eps) * (Spinv * dS);
        };
    }

    const YmTensor F = yang_mills_field_tensor(pot, z, fd, YmCommutator::Imaginary, box);
    const YmTensor Fp = yang_mills_field_tensor(shifted, z, fd, YmCommutator::Imaginary, box);
    YmTensor conj;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) conj[mu][nu] = Szinv * F[mu][nu] * Sz;

    SuiteResult r;
    r.suite = "gauge-covariance";
    r.seed = seed;
    r.add("field-tensor-conjugation",
          "shifting the potentials conjugates the field tensor by the gauge matrix",
          ym_tensor_distance(Fp, conj), tol);
    return r;
}

// ---------------------------------------------------------------------------
// field-strength algebra on the four channels
// ---------------------------------------------------------------------------

using Real4x4 = std::array<std::array<double, 4>, 4>;

// antisymmetric field tensor unpacked into the axis channels as E + iB, then
// folded back; the scaled contraction through the dual tensor recovers the
// input alongside its dual companion
struct FaradayRelations {
    MultiVector eb{};      // E^g + i B^g on the axis channels
    Real4x4 f_round{};     // field tensor recovered from eb
    Real4x4 g_dual{};      // dual companion recovered from eb
    double roundtrip_residual = 0.0;
};

inline FaradayRelations faraday_relations(const Algebra& alg, const Real4x4& F,
                                          double asym_tol = 1e-12) {
    double scale = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) scale = std::max(scale, std::abs(F[a][b]));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (std::abs(F[a][b] + F[b][a]) > asym_tol * std::max(1.0, scale))
                throw AsymmetryError("faraday_relations: input tensor entry (" +
                                     std::to_string(a) + "," + std::to_string(b) +
                                     ") breaks antisymmetry");

    const Mat4 g = metric_from_algebra(alg);
    const Mat4 gu = mat4_inverse(g);

    FaradayRelations out;
    // eb^gamma = -1/2 sum upper[beta][gamma][alpha] g^{beta delta} F[delta][alpha]
    for (int gm = 0; gm < 4; ++gm) {
        cplx s = 0.0;
        for (int be = 0; be < 4; ++be)
            for (int al = 0; al < 4; ++al) {
                const cplx u = alg.upper[be][gm][al];
                if (u == cplx(0.0)) continue;
                for (int de = 0; de < 4; ++de) s += u * gu[be][de] * F[de][al];
            }
        out.eb[gm] = -0.5 * s;
    }
    // T_{ab} = w_a sum_g lower[g][a][b] eb^g = -F_{ab} - i G_{ab}
    double rt = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            cplx t = 0.0;
            for (int gm = 0; gm < 4; ++gm) t += alg.lower[gm][a][b] * out.eb[gm];
            t *= alg.mirror_weight[a];
            out.f_round[a][b] = -t.real();
            out.g_dual[a][b] = -t.imag();
            rt = std::max(rt, std::abs(out.f_round[a][b] - F[a][b]));
        }
    out.roundtrip_residual = rt;
    return out;
}

// direct product route: (E + iB)(E - iB) = (E.E + B.B) e0 + 2 (E x B) . e
inline MultiVector poynting_product(const Algebra& alg, const std::array<double, 3>& E,
                                    const std::array<double, 3>& B) {
    MultiVector a, b;
    for (int i = 0; i < 3; ++i) {
        a[i + 1] = cplx(E[i], B[i]);
        b[i + 1] = cplx(E[i], -B[i]);
    }
    return mv_mul(alg, a, b);
}

// stress-tensor route: assemble F_{0i} = +E_i, F_{ij} = -eps_{ijk} B_k, raise
// indices with diag(1,-1,-1,-1), form
//   T^{ab} = F^{am} F_{ml} g^{lb} + 1/4 g^{ab} F_{mn} F^{mn}
// and contract Q^g = sum T^{ab} lower[g][a][b]
inline MultiVector poynting_stress(const Algebra& alg, const std::array<double, 3>& E,
                                   const std::array<double, 3>& B) {
    Real4x4 F{};
    for (int i = 0; i < 3; ++i) {
        F[0][i + 1] = E[i];
        F[i + 1][0] = -E[i];
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double v = 0.0;
            for (int k = 0; k < 3; ++k) v -= detail::eps3(i, j, k) * B[k];
            F[i + 1][j + 1] = v;
        }
    const std::array<double, 4> gd{1.0, -1.0, -1.0, -1.0};
    Real4x4 Fup{}; // F^{ab} = g^{aa} F_{ab} g^{bb} (diagonal metric)
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) Fup[a][b] = gd[a] * F[a][b] * gd[b];
    double fsq = 0.0; // F_{mn} F^{mn}
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) fsq += F[m][n] * Fup[m][n];
    Real4x4 T{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double v = 0.0;
            for (int m = 0; m < 4; ++m) v += Fup[a][m] * F[m][b] * gd[b];
            if (a == b) v += 0.25 * gd[a] * fsq;
            T[a][b] = v;
        }
    MultiVector q;
    for (int gm = 0; gm < 4; ++gm) {
        cplx s = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) s += T[a][b] * alg.lower[gm][a][b];
        q[gm] = s;
    }
    return q;
}

// returns the product route after checking the stress route agrees
inline MultiVector poynting(const Algebra& alg, const std::array<double, 3>& E,
                            const std::array<double, 3>& B, double tol = 1e-9) {
    const MultiVector q1 = poynting_product(alg, E, B);
    const MultiVector q2 = poynting_stress(alg, E, B);
    double d = 0.0;
    double scale = 1.0;
    for (int i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(q1[i] - q2[i]));
        scale = std::max(scale, std::abs(q1[i]));
    }
    if (d > tol * scale)
        throw Error("poynting: product and stress routes disagree by " + std::to_string(d));
    return q1;
}

// T^{ab} = (rho + p) u^a u^b + p g^{ab} contracted through the direct tensor:
//   sum T^{ab} lower[g][a][b] e_g = (rho + p) u u + p sum g^{ab} lower[g][a][b] e_g
// the metric is the spacelike-positive form diag(-1,1,1,1), fixed by the
// stationary-flow example u = e0 -> (rho + 3p) e0
inline MultiVector perfect_fluid_contraction(const Algebra& alg, double rho, double p,
                                             const MultiVector& u) {
    const std::array<double, 4> gu{-1.0, 1.0, 1.0, 1.0};
    MultiVector q = (rho + p) * mv_mul(alg, u, u);
    for (int gm = 0; gm < 4; ++gm) {
        cplx s = 0.0;
        for (int a = 0; a < 4; ++a) s += gu[a] * alg.lower[gm][a][a];
        q[gm] += p * s;
    }
    return q;
}

} // namespace mixture
