#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "mixture/exponential.hpp"
#include "mixture/involution.hpp"
#include "mixture/mixture_tensor.hpp"
#include "mixture/rng.hpp"

using namespace mixture;

namespace {
const cplx I(0.0, 1.0);

MultiVector random_mv(Rng& rng, double scale) {
    MultiVector z;
    for (int i = 0; i < 4; ++i)
        z[i] = scale * cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return z;
}
} // namespace

TEST_CASE("series exponential matches closed forms") {
    const Algebra alg = natural_algebra();
    // scalar channel: exp((a+ib) e0) = e^{a+ib} e0
    const MultiVector s = mv_exp(alg, mv_scalar(cplx(0.3, -1.2)));
    REQUIRE(std::abs(s[0] - std::exp(cplx(0.3, -1.2))) < 1e-14);
    REQUIRE(std::abs(s[1]) + std::abs(s[2]) + std::abs(s[3]) == 0.0);

    // axis rotation generator: exp(i w e3) = cos(w) e0 + i sin(w) e3
    for (double w : {0.1, 0.7, 1.9, 3.0, -2.4}) {
        const MultiVector r = mv_exp(alg, I * w * mv_basis(3));
        REQUIRE(std::abs(r[0] - cplx(std::cos(w))) < 1e-13);
        REQUIRE(std::abs(r[3] - I * std::sin(w)) < 1e-13);
        REQUIRE(std::abs(r[1]) < 1e-15);
        REQUIRE(std::abs(r[2]) < 1e-15);
    }

    // hyperbolic direction: exp(u e1) = cosh(u) e0 + sinh(u) e1
    const double u = 0.8;
    const MultiVector h = mv_exp(alg, u * mv_basis(1));
    REQUIRE(std::abs(h[0] - cplx(std::cosh(u))) < 1e-13);
    REQUIRE(std::abs(h[1] - cplx(std::sinh(u))) < 1e-13);
}

TEST_CASE("exponential of commuting arguments multiplies") {
    const Algebra alg = natural_algebra();
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const MultiVector a = random_mv(rng, 0.8);
        // a and -a commute, and scalar shifts commute with everything
        const MultiVector ea = mv_exp(alg, a);
        const MultiVector ena = mv_exp(alg, -a);
        REQUIRE(mv_dist(mv_mul(alg, ea, ena), mv_basis(0)) < 1e-12);
        const cplx sh(0.2, 0.4);
        const MultiVector shifted = mv_exp(alg, a + mv_scalar(sh));
        REQUIRE(mv_dist(shifted, std::exp(sh) * ea) < 1e-12);
    }
}

TEST_CASE("series reports non-convergence instead of summing garbage") {
    const Algebra alg = natural_algebra();
    REQUIRE_THROWS_AS(mv_exp(alg, mv_scalar(100.0)), NonConvergence);
}

TEST_CASE("split on a pure rotation argument") {
    const Algebra alg = natural_algebra();
    const double w = 0.9;
    const ExpSplit sp = exp_split(alg, I * w * mv_basis(3));
    REQUIRE_FALSE(sp.trivial);
    // axis = -e3, oscillation carries the whole factor, growth is trivial
    REQUIRE(mv_dist(sp.axis, -mv_basis(3)) < 1e-14);
    REQUIRE(mv_dist(sp.evanescent, mv_basis(0)) < 1e-13);
    const MultiVector expect = mv_exp(alg, I * w * mv_basis(3));
    REQUIRE(mv_dist(sp.oscillatory, expect) < 1e-13);
}

TEST_CASE("split factors commute, recombine, and the oscillation is unit") {
    const Algebra alg = natural_algebra();
    Rng rng(417);
    int nontrivial = 0;
    for (int t = 0; t < 200; ++t) {
        const MultiVector phi = random_mv(rng, 0.9);
        ExpSplit sp;
        try {
            sp = exp_split(alg, phi);
        } catch (const DegenerateVector&) {
            continue; // measure-zero, but guard anyway
        }
        ++nontrivial;
        // the axis squares to the identity channel
        REQUIRE(mv_dist(mv_mul(alg, sp.axis, sp.axis), mv_basis(0)) < 1e-12);
        // factors commute and multiply back to exp(phi)
        const MultiVector ab = mv_mul(alg, sp.evanescent, sp.oscillatory);
        const MultiVector ba = mv_mul(alg, sp.oscillatory, sp.evanescent);
        REQUIRE(mv_dist(ab, ba) < 1e-12);
        REQUIRE(mv_dist(ab, mv_exp(alg, phi)) < 5e-12);
        // oscillatory factor has unit complex magnitude
        REQUIRE(std::abs(std::abs(magnitude_sq(alg, sp.oscillatory)) - 1.0) < 1e-12);
    }
    REQUIRE(nontrivial >= 195);
}

TEST_CASE("split of a scalar-only argument is trivial") {
    const Algebra alg = natural_algebra();
    const ExpSplit sp = exp_split(alg, mv_scalar(cplx(2.0, 3.0)));
    REQUIRE(sp.trivial);
    REQUIRE(std::abs(sp.evanescent[0] - std::exp(2.0)) < 1e-12);
    REQUIRE(std::abs(sp.oscillatory[0] - std::exp(cplx(0.0, 3.0))) < 1e-14);
    REQUIRE(mv_max_abs(sp.axis) == 0.0);
}

TEST_CASE("split rejects a nonzero null vector part") {
    const Algebra alg = natural_algebra();
    MultiVector phi;
    phi[1] = 1.0;
    phi[2] = I; // (1, i, 0): d.d - c.c = 0 and c.d = 0
    REQUIRE_THROWS_AS(exp_split(alg, phi), DegenerateVector);
}

TEST_CASE("one-sided rotation moves e1 to e2 in a quarter turn about e3") {
    const Algebra alg = natural_algebra();
    const MultiVector r =
        rotate(alg, mv_basis(1), 3, 3.14159265358979323846 / 2.0, RotateStyle::OneSided);
    REQUIRE(mv_dist(r, mv_basis(2)) < 1e-12);
}

TEST_CASE("sandwich rotation is a proper planar rotation of vector channels") {
    const Algebra alg = natural_algebra();
    for (double w : {0.3, 1.1, 2.5}) {
        const MultiVector r = rotate(alg, mv_basis(1), 3, w, RotateStyle::Sandwich);
        MultiVector want;
        want[1] = std::cos(w);
        want[2] = std::sin(w);
        REQUIRE(mv_dist(r, want) < 1e-12);
        // the axis channel itself is left alone
        const MultiVector fixed = rotate(alg, mv_basis(3), 3, w, RotateStyle::Sandwich);
        REQUIRE(mv_dist(fixed, mv_basis(3)) < 1e-12);
    }
}
