#pragma once
// named check suites behind the command-line runner. Each suite bundles the
// library's verifiable claims for one module into a SuiteResult; the ids and
// reference strings are stable so reports stay byte-comparable across runs
// with the same seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "mixture/analytic.hpp"
#include "mixture/config.hpp"
#include "mixture/contour.hpp"
#include "mixture/dirac.hpp"
#include "mixture/electromag.hpp"
#include "mixture/errors.hpp"
#include "mixture/fd.hpp"
#include "mixture/geometry.hpp"
#include "mixture/identities.hpp"
#include "mixture/linalg.hpp"
#include "mixture/rng.hpp"
#include "mixture/suite_report.hpp"
#include "mixture/weakfield.hpp"

namespace mixture {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int samples = 1000;
    double tolerance = 1e-12;
    Fd fd{1e-3, 2};
    std::string algebra = "natural"; // identity suite only; the physics
                                     // suites need all four channels live
};

inline SuiteOptions suite_options_from_config(const ScenarioConfig& cfg) {
    SuiteOptions o;
    o.seed = seed_from_config(cfg);
    o.samples = config_int(cfg, "samples", o.samples);
    o.tolerance = config_double(cfg, "tolerance", o.tolerance);
    o.fd = fd_from_config(cfg);
    if (const ConfigEntry* e = cfg.find("algebra")) o.algebra = e->tokens[0];
    return o;
}

namespace detail {

// cubic frame with a rigid time leg; the cubic profile makes the
// compatibility residuals order h^2 without being exactly resolved
struct SuiteBlockFrame {
    std::array<Mat4, 4> C{};

    static SuiteBlockFrame random(Rng& rng, double scale) {
        SuiteBlockFrame f;
        for (int k = 0; k < 4; ++k)
            for (int i = 1; i < 4; ++i)
                for (int j = 1; j < 4; ++j) f.C[k][i][j] = scale * rng.uniform(-1, 1);
        return f;
    }

    FrameField field() const {
        auto self = *this;
        return [self](const Point4& z) {
            Mat4 L = mat4_identity();
            for (int k = 0; k < 4; ++k) {
                const double zk3 = z[k] * z[k] * z[k];
                for (int i = 1; i < 4; ++i)
                    for (int j = 1; j < 4; ++j) L[i][j] += self.C[k][i][j] * zk3;
            }
            return L;
        };
    }
};

inline MatC suite_pauli(int a) {
    const cplx I(0.0, 1.0);
    MatC s(2);
    switch (a) {
        case 0: return MatC::identity(2);
        case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
        case 2: s(0, 1) = -I; s(1, 0) = I; break;
        default: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    }
    return s;
}

inline MatC suite_su2_exp(double t1, double t2, double t3) {
    const cplx I(0.0, 1.0);
    const MatC x =
        I * (cplx(t1) * suite_pauli(1) + cplx(t2) * suite_pauli(2) + cplx(t3) * suite_pauli(3));
    return matc_exp(x);
}

// rectangle (0,-1) -> (c,-1) -> (c,1) -> (0,1) in the (1,2) coordinate plane
inline Contour suite_rectangle_path(double c) {
    auto pt = [](double x, double y) {
        MultiVector p;
        p[1] = x;
        p[2] = y;
        return p;
    };
    return polyline_contour({pt(0, -1), pt(c, -1), pt(c, 1), pt(0, 1)});
}

inline Contour suite_half_circle_path() {
    const double pi = std::numbers::pi;
    return arc_contour(MultiVector(), 1.0, 1, 2, -pi / 2.0, pi / 2.0);
}

} // namespace detail

// ---------------------------------------------------------------------------
// algebra-identities: the randomized identity battery plus the full product
// table of the four basis channels against its closed form
// ---------------------------------------------------------------------------
inline SuiteResult run_algebra_suite(const SuiteOptions& opt) {
    const Algebra alg = (opt.algebra == "planar") ? planar_algebra() : natural_algebra();
    SuiteResult r = run_identity_suite(alg, opt.seed, opt.samples, opt.tolerance);

    if (opt.algebra != "planar") {
        // expected basis products: e0 is the unit, equal channels square to
        // e0, and the cyclic triples multiply to +i/-i times the third channel
        const cplx I(0.0, 1.0);
        Mat4 table{}; // table[a][b] = coefficient; chan[a][b] = output channel
        std::array<std::array<int, 4>, 4> chan{};
        for (int a = 0; a < 4; ++a) {
            table[0][a] = 1.0; chan[0][a] = a;
            table[a][0] = 1.0; chan[a][0] = a;
            table[a][a] = 1.0; chan[a][a] = 0;
        }
        const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
        for (const auto& t : cyc) {
            table[t[0]][t[1]] = I;  chan[t[0]][t[1]] = t[2];
            table[t[1]][t[0]] = -I; chan[t[1]][t[0]] = t[2];
        }
        double worst = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                MultiVector expected;
                expected[chan[a][b]] = table[a][b];
                worst = std::max(worst, mv_dist(mv_mul(alg, mv_basis(a), mv_basis(b)), expected));
            }
        r.add("product-table", "all sixteen basis products match their closed form exactly",
              worst, 1e-300);
    }
    return r;
}

// ---------------------------------------------------------------------------
// geometry-compatibility: the connection induced by a seeded frame preserves
// the frame metric and the frame mixture; a foreign connection does not
// ---------------------------------------------------------------------------
inline SuiteResult run_geometry_suite(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "geometry-compatibility";
    r.seed = opt.seed;

    const Algebra alg = natural_algebra();
    Rng rng(opt.seed);
    const detail::SuiteBlockFrame bf = detail::SuiteBlockFrame::random(rng, 0.1);
    const FrameField frame = bf.field();
    const Point4 z{0.3, 0.2, -0.2, 0.15};

    const MetricField gf = frame_metric_field(frame, alg);
    const Tensor3Field ef = frame_mixture_field(frame, alg);
    const Tensor3Field mf = frame_mirrored_product_field(frame, alg);

    const Tensor3 gamma = connection_from_frame(frame, z, opt.fd);
    const CompatibilityResult res = compatibility_residuals(gf, ef, gamma, mf, z, opt.fd);
    r.add("metric-compatibility",
          "covariant derivative of the frame metric vanishes to stencil order",
          res.metric_residual, 1e-6);
    r.add("mixture-compatibility",
          "four-term covariant derivative of the frame mixture vanishes to stencil order",
          res.mixture_residual, 1e-6);
    r.add("split-scalar", "scalar line of the mirrored-product split transports covariantly",
          res.split_scalar_residual, 1e-6);
    r.add("split-vector", "spatial lines of the mirrored-product split transport covariantly",
          res.split_vector_residual, 1e-6);

    Fd fine = opt.fd;
    fine.h = opt.fd.h / 2.0;
    const Tensor3 gamma_f = connection_from_frame(frame, z, fine);
    const CompatibilityResult res_f = compatibility_residuals(gf, ef, gamma_f, mf, z, fine);
    const double ratio = res.mixture_residual / std::max(res_f.mixture_residual, 1e-300);
    r.add("refinement-order", "halving the stencil step divides the residual by about four",
          std::abs(ratio - 4.0), 1.0);

    const detail::SuiteBlockFrame other = detail::SuiteBlockFrame::random(rng, 0.1);
    const Tensor3 gamma_mis = connection_from_frame(other.field(), z, opt.fd);
    const CompatibilityResult mis = compatibility_residuals(gf, ef, gamma_mis, mf, z, opt.fd);
    r.add("mismatch-control",
          "a connection from an unrelated frame misses compatibility by a wide margin",
          10.0 * std::max(res.metric_residual, 1e-12) /
              std::max(mis.metric_residual, 1e-300),
          1.0);

    const ConnectionField cf = frame_connection_field(frame, opt.fd);
    const Curvature cur = curvature(cf, z, opt.fd, &gf);
    double asym = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int v = 0; v < 4; ++v)
                for (int m = 0; m < 4; ++m)
                    asym = std::max(asym, std::abs(cur.R[a][b][v][m] + cur.R[a][b][m][v]));
    r.add("curvature-antisymmetry",
          "the averaged field tensor is antisymmetric in its derivative slots exactly",
          asym, 1e-300);
    return r;
}

// ---------------------------------------------------------------------------
// analytic-paths: path dependence of the naive directed integral, path
// independence of the symmetrized one, and the paired residue integrals
// ---------------------------------------------------------------------------
inline SuiteResult run_analytic_suite(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "analytic-paths";
    r.seed = opt.seed;

    const Algebra nat = natural_algebra();
    const double pi = std::numbers::pi;

    const MVField radius_sq = [](const Point4& p) {
        return mv_scalar(p[1] * p[1] + p[2] * p[2]);
    };
    const MVField cubic_field = [](const Point4& p) {
        MultiVector f;
        f[1] = p[1] * p[1] * p[1] / 3.0;
        f[2] = p[2] * p[2] * p[2] / 3.0;
        return f;
    };

    const struct { const char* name; double c; } widths[] = {
        {"half", 0.5}, {"unit", 1.0}, {"double", 2.0}};
    for (const auto& w : widths) {
        MultiVector expected;
        expected[2] = 2.0 * (w.c * w.c + 1.0 / 3.0);
        const MultiVector got =
            path_integral(nat, radius_sq, detail::suite_rectangle_path(w.c));
        r.add(std::string("naive-rectangle-") + w.name,
              "directed integral over the rectangle matches its closed form",
              mv_dist(got, expected), 1e-6);
    }
    {
        MultiVector expected;
        expected[2] = 2.0;
        const MultiVector got =
            path_integral(nat, radius_sq, detail::suite_half_circle_path());
        r.add("naive-arc", "directed integral over the half circle matches its closed form",
              mv_dist(got, expected), 1e-6);
    }

    // the correction terms need high-order stencils so the endpoint value,
    // not the derivative error, dominates the residual
    const Fd corrected_fd{1e-5, 4};
    MultiVector corrected_expected;
    corrected_expected[2] = 4.0 / 3.0;
    for (const auto& w : widths) {
        const MultiVector got = corrected_path_integral(
            nat, cubic_field, detail::suite_rectangle_path(w.c), corrected_fd);
        r.add(std::string("corrected-rectangle-") + w.name,
              "symmetrized integral depends only on the endpoints",
              mv_dist(got, corrected_expected), 1e-6);
    }
    {
        const MultiVector got = corrected_path_integral(
            nat, cubic_field, detail::suite_half_circle_path(), corrected_fd);
        r.add("corrected-arc", "symmetrized integral depends only on the endpoints",
              mv_dist(got, corrected_expected), 1e-6);
    }

    const struct { const char* suffix; double radius; } circles[] = {
        {"", 1.0}, {"-wide", 5.0}};
    for (const auto& c : circles) {
        const Contour loop = arc_contour(MultiVector(), c.radius, 0, 1, 0.0, 2.0 * pi);
        const ResiduePair rp = residue_pair(loop);
        r.add(std::string("residue-direct") + c.suffix,
              "closed loop integral of dz/z carries one positive winding",
              std::abs(rp.i_z - cplx(0.0, 2.0 * pi)), 1e-8);
        r.add(std::string("residue-conjugate") + c.suffix,
              "closed loop integral of dz*/z* carries one negative winding",
              std::abs(rp.i_conj + cplx(0.0, 2.0 * pi)), 1e-8);
        r.add(std::string("residue-sum") + c.suffix,
              "the paired residue integrals cancel", std::abs(rp.sum), 1e-8);
    }
    return r;
}

// ---------------------------------------------------------------------------
// dirac: the relation battery for the matrix set, the second-order
// factorization over random modes, and the on-shell kernel
// ---------------------------------------------------------------------------
inline SuiteResult run_dirac_suite(const SuiteOptions& opt) {
    const DiracSet d = dirac_set_from_pauli();
    SuiteResult r = verify_dirac_conditions(d);
    r.suite = "dirac";
    r.seed = opt.seed;

    Rng rng(opt.seed);
    const int modes = std::max(1, opt.samples / 10);
    double worst_fact = 0.0;
    double worst_det = 0.0;
    for (int n = 0; n < modes; ++n) {
        PlaneWave w;
        w.omega = rng.uniform(-2, 2);
        for (int j = 0; j < 3; ++j) w.k[j] = rng.uniform(-2, 2);
        const double mass = rng.uniform(0.1, 2);
        const cplx kg = klein_gordon_residual(w, mass);

        Mat4 prod = mat4_mul(dirac_symbol_partner(d, w, mass), dirac_symbol(d, w, mass));
        for (int i = 0; i < 4; ++i) prod[i][i] -= kg;
        worst_fact = std::max(worst_fact, mat4_max_abs(prod));

        const double det = std::abs(mat4_det(dirac_symbol(d, w, mass)));
        const double kg2 = std::norm(kg); // |kg|^2
        worst_det = std::max(worst_det, std::abs(det - kg2) / std::max(1.0, kg2));
    }
    r.add("symbol-factorization",
          "partner-symbol product equals the scalar wave symbol across random modes",
          worst_fact, 1e-12);
    r.add("symbol-determinant",
          "symbol determinant has the squared scalar-wave magnitude", worst_det, 1e-10);

    PlaneWave on;
    for (int j = 0; j < 3; ++j) on.k[j] = rng.uniform(-1, 1);
    const double mass = rng.uniform(0.2, 1.5);
    double k2 = 0.0;
    for (double kj : on.k) k2 += kj * kj;
    on.omega = std::sqrt(k2 + mass * mass);

    const std::vector<Spinor> basis = dirac_kernel_basis(d, on, mass);
    r.add("kernel-dimension", "the on-shell symbol annihilates a two-dimensional space",
          std::abs(static_cast<double>(basis.size()) - 2.0), 0.5);

    double worst_on = 0.0;
    for (const Spinor& b : basis) {
        PlaneWave w = on;
        w.amplitude = b;
        const Spinor res = dirac_residual(d, w, mass);
        for (const cplx& c : res) worst_on = std::max(worst_on, std::abs(c));
    }
    r.add("on-shell-residual", "kernel amplitudes solve the first-order wave equation",
          worst_on, 1e-12);

    {
        PlaneWave w;
        w.omega = 1.3;
        w.k = {0.4, -0.7, 0.2};
        const Mat4 free = dirac_symbol(d, w, 0.9);
        const Mat4 coupled = em_coupled_symbol(d, w, 0.9, 0.0, 0.7, {0.1, -0.4, 0.25});
        Mat4 diff{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) diff[i][j] = coupled[i][j] - free[i][j];
        r.add("zero-charge-shift",
              "the minimally coupled symbol reduces to the free symbol at zero charge",
              mat4_max_abs(diff), 1e-300);
    }
    return r;
}

// ---------------------------------------------------------------------------
// maxwell: the four residual groups on exact and non-solutions, with the
// stencil-order refinement of the transcendental wave
// ---------------------------------------------------------------------------
inline SuiteResult run_maxwell_suite(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "maxwell";
    r.seed = opt.seed;

    // polynomial wave: quadratic potentials on a dyadic grid make the
    // second-difference stencils exact in binary floating point
    {
        FourPotential h;
        h.phi = [](const Point4& p) { return p[1] * p[0]; };
        h.A = {[](const Point4& p) { return -0.5 * p[1] * p[1] - 0.5 * p[0] * p[0]; },
               [](const Point4&) { return 0.0; }, [](const Point4&) { return 0.0; }};
        const Point4 dyadic{0.25, 0.5, 0.125, 0.0625};
        const MaxwellResiduals mr = maxwell_residuals(h, dyadic, Fd{0.001953125, 2});
        r.add("polynomial-wave", "all four residual groups vanish on the polynomial wave",
              mr.max_abs(), 1e-10);
    }

    FourPotential wave;
    wave.phi = [](const Point4& p) { return std::sin(p[1] - p[0]); };
    wave.A = {[](const Point4& p) { return std::sin(p[1] - p[0]); },
              [](const Point4& p) { return std::cos(p[3] - p[0]); },
              [](const Point4&) { return 0.0; }};
    const Point4 z{0.3, 0.7, 0.2, -0.4};

    const double r1 = maxwell_residuals(wave, z, opt.fd).max_abs();
    r.add("wave-residual", "traveling-wave residuals scale with the squared stencil step",
          r1, 50.0 * opt.fd.h * opt.fd.h);

    Fd fine = opt.fd;
    fine.h = opt.fd.h / 2.0;
    const double r2 = maxwell_residuals(wave, z, fine).max_abs();
    r.add("refinement-order", "halving the stencil step divides the residual by about four",
          std::abs(r1 / std::max(r2, 1e-300) - 4.0), 0.8);

    // generic non-solution: the two derivative-exchange groups stay at
    // roundoff while the source groups pick up order-one values
    FourPotential off;
    off.phi = [](const Point4& p) { return std::sin(p[1] + 0.5 * p[2]) * std::cos(p[0]); };
    off.A = {[](const Point4& p) { return std::cos(p[2] - 0.3 * p[0]); },
             [](const Point4& p) { return std::sin(p[3] + p[1]); },
             [](const Point4& p) { return std::sin(p[1] - p[3]); }};
    const Point4 z2{0.2, -0.4, 0.6, 0.1};
    const MaxwellResiduals mr = maxwell_residuals(off, z2, opt.fd);
    double exchange = std::abs(mr.gauss_b);
    for (int i = 0; i < 3; ++i) exchange = std::max(exchange, std::abs(mr.faraday[i]));
    r.add("structural-identities",
          "derivative-exchange groups vanish for any potential", exchange, 1e-9);
    r.add("non-solution-detected",
          "source groups stay order one on a potential that solves nothing",
          1e-2 / std::max(std::abs(mr.gauss_e), 1e-300), 1.0);
    return r;
}

// ---------------------------------------------------------------------------
// yangmills: gauge covariance of the matrix field tensor and its identity
// with the matrix-connection curvature
// ---------------------------------------------------------------------------
inline SuiteResult run_yangmills_suite(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "yangmills";
    r.seed = opt.seed;

    Rng rng(opt.seed);
    MatrixPotentialSet pot;
    pot.eps = 0.7;
    for (int m = 0; m < 4; ++m) {
        std::array<double, 4> lin{};
        std::array<double, 3> quad{};
        for (int j = 0; j < 4; ++j) lin[j] = rng.uniform(-0.5, 0.5);
        for (int j = 0; j < 3; ++j) quad[j] = rng.uniform(-0.3, 0.3);
        const double base = rng.uniform(-0.4, 0.4);
        const int a = 1 + (m % 3);
        const int b = 1 + ((m + 1) % 3);
        pot.H[m] = [lin, quad, base, a, b](const Point4& p) {
            double q = 0.0;
            for (int j = 0; j < 4; ++j) q += lin[j] * p[j];
            for (int j = 0; j < 3; ++j) q += quad[j] * p[j] * p[j + 1];
            return cplx(q) * detail::suite_pauli(a) + cplx(base) * detail::suite_pauli(b);
        };
    }
    const Point4 z{0.2, -0.1, 0.35, 0.15};

    {
        const MatCField S = [](const Point4&) { return MatC::identity(2); };
        const SuiteResult g = gauge_covariance_check(pot, S, z, opt.fd, 1e-300, opt.seed);
        r.add("covariance-identity", "the identity gauge leaves the field tensor untouched",
              g.checks[0].residual, 1e-300);
    }
    {
        const double t1 = rng.uniform(-1, 1), t2 = rng.uniform(-1, 1), t3 = rng.uniform(-1, 1);
        const MatCField S = [t1, t2, t3](const Point4&) {
            return detail::suite_su2_exp(t1, t2, t3);
        };
        const SuiteResult g = gauge_covariance_check(pot, S, z, opt.fd, 1e-10, opt.seed);
        r.add("covariance-constant", "a constant gauge conjugates the field tensor to roundoff",
              g.checks[0].residual, 1e-10);
    }
    {
        std::array<double, 3> a{}, b{};
        for (int j = 0; j < 3; ++j) {
            a[j] = rng.uniform(-0.3, 0.3);
            b[j] = rng.uniform(-0.2, 0.2);
        }
        const MatCField S = [a, b](const Point4& p) {
            return detail::suite_su2_exp(a[0] * p[0] + b[0] * p[1] * p[1],
                                         a[1] * p[2] + b[1] * p[0] * p[3],
                                         a[2] * p[1] * p[2] + b[2]);
        };
        const double s1 = gauge_covariance_check(pot, S, z, opt.fd, 1.0, opt.seed)
                              .checks[0].residual;
        r.add("covariance-smooth",
              "a smooth gauge field conjugates the field tensor to stencil order", s1,
              1000.0 * opt.fd.h * opt.fd.h);

        Fd fine = opt.fd;
        fine.h = opt.fd.h / 2.0;
        const double s2 = gauge_covariance_check(pot, S, z, fine, 1.0, opt.seed)
                              .checks[0].residual;
        r.add("covariance-refinement",
              "halving the stencil step divides the covariance defect by about four",
              std::abs(s1 / std::max(s2, 1e-300) - 4.0), 0.8);
    }
    r.add("curvature-relation",
          "matrix-connection curvature equals the coupling times the field tensor",
          ym_curvature_relation(pot, z, opt.fd).residual, 1e-10);
    return r;
}

// ---------------------------------------------------------------------------
// weakfield: the perturbed metric pair, the time-leg connection slice, and
// the slow-motion trajectories against their closed forms
// ---------------------------------------------------------------------------
inline SuiteResult run_weakfield_suite(const SuiteOptions& opt) {
    SuiteResult r;
    r.suite = "weakfield";
    r.seed = opt.seed;

    {
        WeakFieldConfig wf{};
        wf.psi = [](const Point4& p) { return 1e-4 * p[1]; };
        wf.phi = [](const Point4& p) { return 1e-4 * p[2]; };
        wf.A = {[](const Point4& p) { return 1e-4 * p[3]; },
                [](const Point4&) { return 0.0; }, [](const Point4&) { return 0.0; }};
        const Point4 z{0.2, 0.3, -0.1, 0.4};
        const double pert = perturbation_size(wf, z);
        r.add("metric-inverse",
              "the first-order inverse misses the true inverse only at second order",
              metric_pair_residual(perturbed_metric(wf, z)), 10.0 * pert * pert + 1e-15);
    }

    {
        // electric-free configuration: static vector potential, no charge
        // potential, so the closed-form slice model and Hermiticity both hold
        WeakFieldConfig wf{};
        const double g0 = 1e-4, b0 = 1e-4;
        wf.psi = [g0](const Point4& p) { return g0 * p[1]; };
        wf.A = {[b0](const Point4& p) { return -0.5 * b0 * p[2]; },
                [b0](const Point4& p) { return 0.5 * b0 * p[1]; },
                [](const Point4&) { return 0.0; }};
        const Point4 z{0.1, 0.25, -0.2, 0.3};
        const ConnectionSlice slice = weakfield_connection(wf, z, opt.fd);
        r.add("connection-model",
              "the time-leg connection slice matches its closed-form field pattern",
              slice.model_residual, 1e-6);
        r.add("connection-hermitian",
              "the electric-free connection slice is Hermitian",
              slice.hermiticity_residual, 1e-6);
    }

    {
        WeakFieldConfig wf{};
        const double g0 = 1e-6;
        wf.psi = [g0](const Point4& p) { return g0 * p[1]; };
        TestParticle p{};
        const auto traj = integrate_trajectory(wf, p, 0.1, 100, opt.fd);
        const double expected = -g0 * 10.0;
        r.add("newton", "a uniform pull accelerates a neutral particle down the gradient",
              std::abs(traj.back().v[0] - expected) / std::abs(expected), 1e-2);
    }

    {
        WeakFieldConfig wf{};
        const double e0 = 1e-6;
        wf.phi = [e0](const Point4& p) { return e0 * p[1]; };
        TestParticle p{};
        p.e = 1.0;
        const auto traj = integrate_trajectory(wf, p, 0.1, 100, opt.fd);
        const double expected = e0 * 10.0;
        r.add("lorentz", "a uniform field channel accelerates a unit charge along the rail",
              std::abs(traj.back().v[0] - expected) / std::abs(expected), 1e-2);
    }

    {
        WeakFieldConfig wf{};
        const double b0 = 1e-3, v0 = 1e-3;
        wf.A = {[b0](const Point4& p) { return -0.5 * b0 * p[2]; },
                [b0](const Point4& p) { return 0.5 * b0 * p[1]; },
                [](const Point4&) { return 0.0; }};
        TestParticle p{};
        p.e = 1.0;
        p.x = {0.0, 0.0, 1.0, 0.0};
        p.v = {v0, 0.0, 0.0};
        const double period = 2.0 * std::numbers::pi / b0;
        const int steps = 1000;
        const auto traj = integrate_trajectory(wf, p, period / steps, steps, opt.fd);
        double rsum = 0.0, smin = 1e300, smax = 0.0;
        for (const auto& t : traj) {
            rsum += std::sqrt(t.x[1] * t.x[1] + t.x[2] * t.x[2]);
            const double s =
                std::sqrt(t.v[0] * t.v[0] + t.v[1] * t.v[1] + t.v[2] * t.v[2]);
            smin = std::min(smin, s);
            smax = std::max(smax, s);
        }
        const double mean_radius = rsum / static_cast<double>(traj.size());
        r.add("cyclotron-radius",
              "a uniform swirl bends a unit charge onto the predicted circle",
              std::abs(mean_radius - 1.0), 1e-2);
        r.add("speed-drift", "the swirl does no work on the circling charge",
              (smax - smin) / v0, 1e-3);
    }

    {
        WeakFieldConfig wf{};
        const double kappa = 1e-6;
        wf.psi = [kappa](const Point4& p) {
            return 0.5 * kappa * (p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
        };
        TestParticle p{};
        p.x = {0.0, 1.0, 0.0, 0.0};
        p.v = {0.0, std::sqrt(kappa), 0.0};
        const double period = 2.0 * std::numbers::pi / std::sqrt(kappa);
        const int steps = 1000;
        const auto traj = integrate_trajectory(wf, p, period / steps, steps, opt.fd);
        const double ref = orbit_energy(wf, p);
        double worst = 0.0;
        for (const auto& t : traj) {
            TestParticle q = p;
            q.x = t.x;
            q.v = t.v;
            worst = std::max(worst, std::abs(orbit_energy(wf, q) - ref));
        }
        r.add("energy-drift", "the bound orbit conserves its energy integral",
              worst / std::abs(ref), 1e-3);
    }
    return r;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "algebra-identities", "geometry-compatibility", "analytic-paths", "dirac",
        "maxwell",            "yangmills",              "weakfield"};
    return names;
}

inline SuiteResult run_suite_by_name(const std::string& name, const SuiteOptions& opt) {
    if (name == "algebra-identities") return run_algebra_suite(opt);
    if (name == "geometry-compatibility") return run_geometry_suite(opt);
    if (name == "analytic-paths") return run_analytic_suite(opt);
    if (name == "dirac") return run_dirac_suite(opt);
    if (name == "maxwell") return run_maxwell_suite(opt);
    if (name == "yangmills") return run_yangmills_suite(opt);
    if (name == "weakfield") return run_weakfield_suite(opt);
    if (name == "all") {
        SuiteResult all;
        all.suite = "all";
        all.seed = opt.seed;
        for (const std::string& n : suite_names()) {
            const SuiteResult one = run_suite_by_name(n, opt);
            for (const CheckResult& c : one.checks)
                all.checks.push_back({n + "/" + c.id, c.ref, c.residual, c.tolerance, c.pass});
        }
        return all;
    }
    std::string known;
    for (const std::string& n : suite_names()) known += n + ", ";
    throw UnknownSuite("unknown suite '" + name + "' (expected one of: " + known + "all)");
}

} // namespace mixture
