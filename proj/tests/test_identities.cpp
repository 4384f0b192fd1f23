#include <catch2/catch_amalgamated.hpp>

#include "mixture/identities.hpp"
#include "mixture/mixture_tensor.hpp"

using namespace mixture;

TEST_CASE("every identity holds exactly on the natural algebra") {
    const SuiteResult r = run_identity_suite(natural_algebra(), 42, 1000);
    REQUIRE(r.checks.size() >= 20);
    for (const auto& c : r.checks) {
        INFO(c.id << " residual=" << c.residual);
        CHECK(c.pass);
        CHECK(c.residual < 1e-12);
    }
    REQUIRE(r.passed());
}

TEST_CASE("tensor-only identities are exact zeros in ieee arithmetic") {
    const Algebra alg = natural_algebra();
    for (int f = 0; f < 3; ++f) REQUIRE(contraction_inverse_residual(alg, f) == 0.0);
    REQUIRE(cyclic_residual(alg.lower) == 0.0);
    REQUIRE(cyclic_residual(alg.upper) == 0.0);
    REQUIRE(conjugate_reflection_residual(alg.lower) == 0.0);
    REQUIRE(conjugate_reflection_residual(alg.upper) == 0.0);
    for (int f = 0; f < 2; ++f) REQUIRE(pseudo_inverse_residual(alg, f) == 0.0);
    for (int f = 0; f < 4; ++f) REQUIRE(exchange_residual(alg, f) == 0.0);
    for (int f = 0; f < 4; ++f) REQUIRE(triple_closure_residual(alg, f) == 0.0);
    REQUIRE(signature_inverse_residual(alg) == 0.0);
}

TEST_CASE("suite is deterministic for a fixed seed") {
    const SuiteResult a = run_identity_suite(natural_algebra(), 7, 200);
    const SuiteResult b = run_identity_suite(natural_algebra(), 7, 200);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        REQUIRE(a.checks[i].id == b.checks[i].id);
        REQUIRE(a.checks[i].residual == b.checks[i].residual);
    }
}

TEST_CASE("a perturbed tensor entry is caught with a large residual") {
    Algebra bad = natural_algebra();
    bad.lower[0][1][1] += 0.1;
    const SuiteResult r = run_identity_suite(bad, 42, 50);
    REQUIRE_FALSE(r.passed());
    double worst = 0.0;
    for (const auto& c : r.checks) worst = std::max(worst, c.residual);
    REQUIRE(worst >= 0.05);
}

TEST_CASE("each perturbed entry location trips at least one identity") {
    // direct contraction oracle: no single-entry bump may slip through
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a) {
            Algebra bad = natural_algebra();
            bad.lower[g][a][(a + 1) % 4] += 0.1;
            const SuiteResult r = run_identity_suite(bad, 3, 10);
            INFO("bumped lower[" << g << "][" << a << "][" << (a + 1) % 4 << "]");
            REQUIRE_FALSE(r.passed());
        }
}

TEST_CASE("planar restriction satisfies its own contraction inverses") {
    // channel count 2; the three dual contractions and the normalized
    // pseudo-inverses act as projectors onto the live channels
    const Algebra p = planar_algebra();
    for (int form = 0; form < 3; ++form) {
        double worst = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int d = 0; d < 2; ++d) {
                cplx s = 0.0;
                for (int b = 0; b < 4; ++b)
                    for (int g = 0; g < 4; ++g) {
                        if (form == 0) s += p.lower[a][b][g] * p.upper[d][g][b];
                        else if (form == 1) s += p.lower[g][d][b] * p.upper[g][b][a];
                        else s += p.upper[g][a][b] * p.lower[g][b][d];
                    }
                worst = std::max(worst, std::abs(s - (a == d ? 2.0 : 0.0)));
            }
        REQUIRE(worst == 0.0);
    }
}
