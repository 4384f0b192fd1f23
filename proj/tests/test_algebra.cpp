#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "mixture/involution.hpp"
#include "mixture/metric.hpp"
#include "mixture/mixture_tensor.hpp"
#include "mixture/multivector.hpp"
#include "mixture/rng.hpp"

using namespace mixture;

namespace {

const cplx I(0.0, 1.0);

// independent product oracle, written straight from the multiplication rules
// without touching the tensor: identity channel, squares to one, cyclic +/- i
MultiVector oracle_basis_product(int a, int b) {
    if (a == 0) return mv_basis(b);
    if (b == 0) return mv_basis(a);
    if (a == b) return mv_basis(0);
    // remaining: distinct nonzero axes; the third axis completes the set
    const int c = 6 - a - b;
    const bool cyclic = (b - a + 3) % 3 == 1; // (1,2),(2,3),(3,1) ascend cyclically
    return (cyclic ? I : -I) * mv_basis(c);
}

MultiVector random_mv(Rng& rng) {
    MultiVector z;
    for (int i = 0; i < 4; ++i) z[i] = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return z;
}

} // namespace

TEST_CASE("basis product table matches the rule oracle exactly") {
    const Algebra alg = natural_algebra();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const MultiVector got = mv_mul(alg, mv_basis(a), mv_basis(b));
            const MultiVector want = oracle_basis_product(a, b);
            INFO("a=" << a << " b=" << b << " got=" << mv_to_string(got));
            REQUIRE(mv_dist(got, want) == 0.0);
        }
}

TEST_CASE("spot products: e1e2 = i e3, e1e3 = -i e2, e1e2e3 = i e0") {
    const Algebra alg = natural_algebra();
    REQUIRE(mv_dist(mv_mul(alg, mv_basis(1), mv_basis(2)), I * mv_basis(3)) == 0.0);
    REQUIRE(mv_dist(mv_mul(alg, mv_basis(1), mv_basis(3)), -I * mv_basis(2)) == 0.0);
    const MultiVector triple =
        mv_mul(alg, mv_mul(alg, mv_basis(1), mv_basis(2)), mv_basis(3));
    REQUIRE(mv_dist(triple, I * mv_basis(0)) == 0.0);
}

TEST_CASE("tensor well-formedness: associativity and dual pairing, exact") {
    const Algebra alg = natural_algebra();
    REQUIRE(associativity_residual(alg) == 0.0);
    REQUIRE(dual_consistency_residual(alg) == 0.0);
    REQUIRE(algebra_channel_count(alg) == 4.0);
    REQUIRE(algebra_signature(alg) == -2.0);

    // the planar restriction is associative but its duals are not
    // self-inverse, so only the natural algebra gets the pairing check
    const Algebra planar = planar_algebra();
    REQUIRE(associativity_residual(planar) == 0.0);
    REQUIRE(algebra_channel_count(planar) == 2.0);
}

TEST_CASE("a perturbed tensor is caught by the well-formedness residual") {
    Algebra bad = natural_algebra();
    bad.lower[0][1][1] += 0.1;
    REQUIRE(associativity_residual(bad) >= 0.05);
}

TEST_CASE("mirror is an anti-homomorphism, adjoint a homomorphism") {
    const Algebra alg = natural_algebra();
    Rng rng(20240521);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiVector z = random_mv(rng);
        const MultiVector w = random_mv(rng);
        const MultiVector zw = mv_mul(alg, z, w);
        REQUIRE(mv_dist(mirror(alg, zw), mv_mul(alg, mirror(alg, w), mirror(alg, z))) <
                1e-13);
        REQUIRE(mv_dist(conjugate(zw), mv_mul(alg, conjugate(w), conjugate(z))) < 1e-13);
        REQUIRE(mv_dist(adjoint(alg, zw), mv_mul(alg, adjoint(alg, z), adjoint(alg, w))) <
                1e-13);
    }
}

TEST_CASE("mirror and adjoint are involutions") {
    const Algebra alg = natural_algebra();
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const MultiVector z = random_mv(rng);
        REQUIRE(mv_dist(mirror(alg, mirror(alg, z)), z) == 0.0);
        REQUIRE(mv_dist(adjoint(alg, adjoint(alg, z)), z) == 0.0);
        REQUIRE(mv_dist(conjugate(conjugate(z)), z) == 0.0);
    }
}

TEST_CASE("squared magnitude is scalar-valued and multiplicative") {
    const Algebra alg = natural_algebra();
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiVector z = random_mv(rng);
        const MultiVector w = random_mv(rng);
        REQUIRE(magnitude_offchannel(alg, z) < 1e-13);
        const cplx lhs = magnitude_sq(alg, mv_mul(alg, z, w));
        const cplx rhs = magnitude_sq(alg, z) * magnitude_sq(alg, w);
        REQUIRE(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("null elements: |e0 + e1|^2 = 0") {
    const Algebra alg = natural_algebra();
    const MultiVector z = mv_basis(0) + mv_basis(1);
    REQUIRE(std::abs(magnitude_sq(alg, z)) == 0.0);
    // and the full product with the mirror vanishes, not just its scalar part
    REQUIRE(mv_max_abs(mv_mul(alg, z, mirror(alg, z))) == 0.0);
}

TEST_CASE("metric extraction gives the flat signature on both variances") {
    const Algebra alg = natural_algebra();
    const Mat4 g = metric_from_algebra(alg);
    const Mat4 gu = dual_metric_from_algebra(alg);
    const double diag[4] = {1.0, -1.0, -1.0, -1.0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const cplx want = (a == b) ? cplx(diag[a]) : cplx(0.0);
            REQUIRE(std::abs(g[a][b] - want) < 1e-14);
            REQUIRE(std::abs(gu[a][b] - want) < 1e-14);
        }
}

TEST_CASE("planar restriction metric is euclidean on active channels") {
    const Mat4 g = metric_from_algebra(planar_algebra());
    REQUIRE(std::abs(g[0][0] - cplx(1.0)) < 1e-14);
    REQUIRE(std::abs(g[1][1] - cplx(1.0)) < 1e-14);
    REQUIRE(std::abs(g[0][1]) < 1e-14);
    REQUIRE(std::abs(g[2][2]) < 1e-14);
}

TEST_CASE("metric extraction flags a non-scalar symmetrized product") {
    Algebra bad = natural_algebra();
    bad.lower[2][1][1] = 0.5; // symmetric in the two factor slots: survives
    REQUIRE_THROWS_AS(metric_from_algebra(bad), NonScalarMetric);
}

TEST_CASE("4x4 complex inverse round-trips and flags singular input") {
    Rng rng(12345);
    Mat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Mat4 inv = mat4_inverse(a);
    const Mat4 prod = mat4_mul(a, inv);
    const Mat4 id = mat4_identity();
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(prod[i][j] - id[i][j]));
    REQUIRE(worst < 1e-12);

    Mat4 sing{};
    sing[0][0] = 1.0; // rank 1
    REQUIRE_THROWS_AS(mat4_inverse(sing), SingularMatrix);
}
