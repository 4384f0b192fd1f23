#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>

#include "mixture/dirac.hpp"
#include "mixture/rng.hpp"

using namespace mixture;

namespace {

const cplx I(0.0, 1.0);

PlaneWave on_shell_wave(Rng& rng, double& mass_out, bool negative_branch = false) {
    PlaneWave w;
    for (int j = 0; j < 3; ++j) w.k[j] = rng.uniform(-2.0, 2.0);
    mass_out = rng.uniform(0.1, 3.0);
    double k2 = 0.0;
    for (double kj : w.k) k2 += kj * kj;
    w.omega = std::sqrt(k2 + mass_out * mass_out);
    if (negative_branch) w.omega = -w.omega;
    return w;
}

Eigen::Matrix4cd to_eigen(const Mat4& m) {
    Eigen::Matrix4cd e;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) e(r, c) = m[r][c];
    return e;
}

double spinor_max_abs(const Spinor& s) {
    double m = 0.0;
    for (const cplx& v : s) m = std::max(m, std::abs(v));
    return m;
}

} // namespace

TEST_CASE("pauli construction matches the hand-expanded matrices") {
    const DiracSet d = dirac_set_from_pauli();
    const cplx O(0.0);

    // literal tables written out independently of the kron helper
    const Mat4 eta1{{{O, O, O, -I}, {O, O, I, O}, {O, -I, O, O}, {I, O, O, O}}};
    const Mat4 eta2{{{O, O, -I, O}, {O, O, O, -I}, {I, O, O, O}, {O, I, O, O}}};
    const Mat4 eta3{{{O, O, O, 1.0}, {O, O, 1.0, O}, {O, 1.0, O, O}, {1.0, O, O, O}}};
    const Mat4 hmat{{{O, O, 1.0, O}, {O, O, O, -1.0}, {1.0, O, O, O}, {O, -1.0, O, O}}};

    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            REQUIRE(d.eta[0][r][c] == (r == c ? cplx(1.0) : O));
            REQUIRE(d.eta[1][r][c] == eta1[r][c]);
            REQUIRE(d.eta[2][r][c] == eta2[r][c]);
            REQUIRE(d.eta[3][r][c] == eta3[r][c]);
            REQUIRE(d.H[r][c] == hmat[r][c]);
            REQUIRE(d.Hhat[r][c] == -hmat[r][c]);
        }
    REQUIRE(d.eta[2][0][2] == -I);
}

TEST_CASE("relation battery holds exactly, and flags breakage") {
    const DiracSet d = dirac_set_from_pauli();

    SECTION("pauli set: every residual is exactly zero") {
        const SuiteResult r = verify_dirac_conditions(d);
        REQUIRE(r.passed());
        REQUIRE(r.checks.size() >= 15);
        for (const auto& c : r.checks) REQUIRE(c.residual == 0.0);
    }
    SECTION("fifteen pair relations among the four anticommuting matrices") {
        const std::array<Mat4, 4> mats{d.eta[1], d.eta[2], d.eta[3], d.H};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const Mat4 ab = mat4_mul(mats[a], mats[b]);
                const Mat4 ba = mat4_mul(mats[b], mats[a]);
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c) {
                        if (a == b)
                            REQUIRE(ab[r][c] == (r == c ? cplx(1.0) : cplx(0.0)));
                        else
                            REQUIRE(ab[r][c] + ba[r][c] == cplx(0.0));
                    }
            }
    }
    SECTION("replacing a spatial matrix with the identity trips the battery") {
        DiracSet bad = d;
        bad.eta[1] = mat4_identity();
        const SuiteResult r = verify_dirac_conditions(bad);
        REQUIRE_FALSE(r.passed());
        for (const auto& c : r.checks)
            if (c.id == "pair-anticommutator-12") REQUIRE(c.residual == 2.0);
    }
    SECTION("global mass-sign flip is also admissible") {
        DiracSet flipped = d;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                flipped.H[r][c] = -d.H[r][c];
                flipped.Hhat[r][c] = d.H[r][c];
            }
        REQUIRE(verify_dirac_conditions(flipped).passed());
    }
}

TEST_CASE("plane-wave residual: kernel modes, linearity, off-shell detection") {
    const DiracSet d = dirac_set_from_pauli();
    Rng rng(424242);

    SECTION("closed-form kernel modes satisfy the wave equation") {
        for (int trial = 0; trial < 50; ++trial) {
            double mass = 0.0;
            PlaneWave w = on_shell_wave(rng, mass, trial % 2 == 1);
            const auto basis = dirac_kernel_basis(d, w, mass);
            REQUIRE(basis.size() >= 2);
            for (const Spinor& v : basis) {
                w.amplitude = v;
                REQUIRE(spinor_max_abs(dirac_residual(d, w, mass)) < 1e-12);
            }
        }
    }
    SECTION("independent kernel oracle agrees") {
        double mass = 0.0;
        PlaneWave w = on_shell_wave(rng, mass);
        Eigen::FullPivLU<Eigen::Matrix4cd> lu(to_eigen(dirac_symbol(d, w, mass)));
        lu.setThreshold(1e-8);
        REQUIRE(lu.dimensionOfKernel() == 2);
        const auto kernel = lu.kernel();
        for (int c = 0; c < kernel.cols(); ++c) {
            Spinor v{};
            double norm = kernel.col(c).norm();
            for (int r = 0; r < 4; ++r) v[r] = kernel(r, c) / norm;
            w.amplitude = v;
            REQUIRE(spinor_max_abs(dirac_residual(d, w, mass)) < 1e-12);
        }
        REQUIRE(dirac_kernel_basis(d, w, mass).size() == 2);
    }
    SECTION("zero amplitude gives zero residual") {
        PlaneWave w;
        w.omega = 1.7;
        w.k = {0.3, -0.4, 0.5};
        REQUIRE(spinor_max_abs(dirac_residual(d, w, 1.0)) == 0.0);
    }
    SECTION("off-shell generic mode is rejected") {
        PlaneWave w;
        w.k = {1.0, 0.0, 0.0};
        w.omega = 1.0; // light-like, but mass below is positive
        w.amplitude = {1.0, 0.5, -0.25, 0.125};
        REQUIRE(spinor_max_abs(dirac_residual(d, w, 0.5)) > 0.1);
        // determinant oracle: the symbol is invertible off shell
        REQUIRE(std::abs(mat4_det(dirac_symbol(d, w, 0.5))) > 1e-3);
    }
    SECTION("residual is linear in the amplitude") {
        double mass = 1.3;
        PlaneWave wa, wb;
        wa.omega = wb.omega = 0.9;
        wa.k = wb.k = {0.2, 0.7, -0.4};
        Spinor a{}, b{};
        for (int r = 0; r < 4; ++r) {
            a[r] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
            b[r] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        const cplx ca(0.7, -0.3), cb(-1.2, 0.4);
        wa.amplitude = a;
        const Spinor ra = dirac_residual(d, wa, mass);
        wb.amplitude = b;
        const Spinor rb = dirac_residual(d, wb, mass);
        PlaneWave wc = wa;
        for (int r = 0; r < 4; ++r) wc.amplitude[r] = ca * a[r] + cb * b[r];
        const Spinor rc = dirac_residual(d, wc, mass);
        for (int r = 0; r < 4; ++r)
            REQUIRE(std::abs(rc[r] - (ca * ra[r] + cb * rb[r])) < 1e-12);
    }
}

TEST_CASE("symbol determinant equals the squared dispersion polynomial") {
    const DiracSet d = dirac_set_from_pauli();
    Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        PlaneWave w;
        w.omega = rng.uniform(-3, 3);
        for (int j = 0; j < 3; ++j) w.k[j] = rng.uniform(-3, 3);
        const double mass = rng.uniform(0.0, 2.0);
        double k2 = 0.0;
        for (double kj : w.k) k2 += kj * kj;
        const double disp = w.omega * w.omega - k2 - mass * mass;
        const cplx want = disp * disp;
        const cplx got = mat4_det(dirac_symbol(d, w, mass));
        REQUIRE(std::abs(got - want) < 1e-10 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("scalar wave residual closed forms") {
    PlaneWave w;
    w.k = {0.6, -0.8, 0.0};
    w.omega = std::sqrt(1.0 + 1.21);
    REQUIRE(std::abs(klein_gordon_residual(w, 1.1)) < 1e-12);

    PlaneWave null;
    null.k = {0.3, 0.4, 1.2};
    null.omega = 1.3;
    REQUIRE(std::abs(klein_gordon_residual(null, 0.0)) < 1e-12);

    PlaneWave rest;
    REQUIRE(klein_gordon_residual(rest, 1.0) == cplx(1.0));
}

TEST_CASE("first-order pair factorizes into the scalar wave operator") {
    const DiracSet d = dirac_set_from_pauli();
    Rng rng(31);

    SECTION("on-shell modes") {
        for (int trial = 0; trial < 100; ++trial) {
            double mass = 0.0;
            const PlaneWave w = on_shell_wave(rng, mass);
            const SuiteResult r = factorization_check(d, w, mass);
            REQUIRE(r.passed());
        }
    }
    SECTION("off-shell: product equals the scalar symbol times identity") {
        PlaneWave w;
        w.omega = 0.4;
        w.k = {1.0, -0.7, 0.3};
        const double mass = 0.9;
        const Mat4 prod =
            mat4_mul(dirac_symbol_partner(d, w, mass), dirac_symbol(d, w, mass));
        const cplx kg = klein_gordon_residual(w, mass);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                REQUIRE(std::abs(prod[r][c] - (r == c ? kg : cplx(0.0))) < 1e-12);
    }
    SECTION("a broken relation leaks cross terms") {
        DiracSet bad = d;
        bad.eta[1] = mat4_identity();
        PlaneWave w;
        w.omega = 1.0;
        w.k = {0.8, 0.1, -0.2};
        const SuiteResult r = factorization_check(bad, w, 1.0);
        REQUIRE_FALSE(r.passed());
        REQUIRE(r.checks.at(0).residual > 0.1);
    }
}

TEST_CASE("electromagnetic coupling") {
    const DiracSet d = dirac_set_from_pauli();

    SECTION("zero charge reduces to the free residual exactly") {
        PlaneWave w;
        w.omega = 1.9;
        w.k = {0.4, -0.3, 0.7};
        w.amplitude = {cplx(0.2, 0.1), cplx(-0.5, 0.3), cplx(0.0, -1.0), cplx(0.8, 0.0)};
        const Spinor free = dirac_residual(d, w, 1.1);
        const Spinor coupled =
            em_coupled_residual(d, w, 1.1, 0.0, 0.77, {0.1, 0.2, 0.3});
        for (int r = 0; r < 4; ++r) REQUIRE(coupled[r] == free[r]);
    }
    SECTION("shifted on-shell kernel mode is annihilated") {
        const double e = 0.7, phi = 0.3, mass = 1.2;
        const std::array<double, 3> A{0.2, -0.1, 0.4};
        PlaneWave w;
        w.k = {1.0, -0.5, 0.8};
        double shifted2 = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double kj = w.k[j] - e * A[j];
            shifted2 += kj * kj;
        }
        w.omega = e * phi + std::sqrt(shifted2 + mass * mass);

        // kernel of the shifted symbol
        PlaneWave shifted = w;
        shifted.omega = w.omega - e * phi;
        for (int j = 0; j < 3; ++j) shifted.k[j] = w.k[j] - e * A[j];
        const auto basis = dirac_kernel_basis(d, shifted, mass);
        REQUIRE(basis.size() >= 2);
        for (const Spinor& v : basis) {
            w.amplitude = v;
            REQUIRE(spinor_max_abs(em_coupled_residual(d, w, mass, e, phi, A)) < 1e-12);
        }
    }
    SECTION("phase-shift derivative identity") {
        MVField f = [](const Point4& p) {
            return MultiVector(p[0] * p[0], p[1] + 2.0 * p[2], cplx(0.0, 1.0) * p[3],
                               1.0 + p[0] * p[1]);
        };
        ScalarField phase = [](const Point4& p) {
            return 0.3 * p[0] + 0.2 * p[1] * p[1] + 0.1 * p[2] * p[3];
        };
        const double res =
            phase_shift_residual(f, phase, {0.4, -0.2, 0.3, 0.6}, Fd{1e-3, 4});
        REQUIRE(res < 1e-12);
    }
}
