#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "mixture/analytic.hpp"
#include "mixture/contour.hpp"
#include "mixture/quadrature.hpp"
#include "mixture/rng.hpp"

using namespace mixture;

namespace {

const cplx I(0.0, 1.0);
constexpr double kPi = 3.14159265358979323846;

MultiVector plane_point(double x, double y) {
    MultiVector p;
    p[1] = x;
    p[2] = y;
    return p;
}

// rectangle (0,-1) -> (c,-1) -> (c,1) -> (0,1) in the (1,2) coordinate plane
Contour rectangle_path(double c, double tol = 1e-10) {
    return polyline_contour(
        {plane_point(0, -1), plane_point(c, -1), plane_point(c, 1), plane_point(0, 1)},
        tol);
}

Contour half_circle_path(double tol = 1e-10) {
    return arc_contour(MultiVector(), 1.0, 1, 2, -kPi / 2.0, kPi / 2.0, tol);
}

// smooth bulge from (0,-1) to (0,1): x = 1.5 sin^2(pi s), y = -cos(pi s)
Contour bulge_path(double tol = 1e-10) {
    Contour c;
    c.position = [](double s) {
        const double si = std::sin(kPi * s);
        return plane_point(1.5 * si * si, -std::cos(kPi * s));
    };
    c.velocity = [](double s) {
        MultiVector v;
        v[1] = 3.0 * kPi * std::sin(kPi * s) * std::cos(kPi * s);
        v[2] = kPi * std::sin(kPi * s);
        return v;
    };
    c.tolerance = tol;
    return c;
}

// magnitude-squared source for the naive integral: (x^2 + y^2) e0
const MVField kRadiusSq = [](const Point4& p) {
    return mv_scalar(p[1] * p[1] + p[2] * p[2]);
};

// two-sided cubic test field f = (x^3 e1 + y^3 e2) / 3
const MVField kCubicField = [](const Point4& p) {
    MultiVector f;
    f[1] = p[1] * p[1] * p[1] / 3.0;
    f[2] = p[2] * p[2] * p[2] / 3.0;
    return f;
};

// holomorphic w = x + i y functions embedded as two-channel fields
MVField holomorphic_field(std::function<cplx(cplx)> w_fn) {
    return [w_fn](const Point4& p) {
        const cplx w = w_fn(cplx(p[0], p[1]));
        MultiVector f;
        f[0] = w.real();
        f[1] = w.imag();
        return f;
    };
}

} // namespace

TEST_CASE("adaptive quadrature nails smooth closed forms") {
    const double cubic =
        adaptive_quadrature([](double s) { return s * s * s; }, 0.0, 1.0, 1e-12);
    REQUIRE(std::abs(cubic - 0.25) < 1e-13);

    const cplx osc = adaptive_quadrature(
        [](double s) { return std::exp(I * s); }, 0.0, 2.0, 1e-12);
    const cplx want = (std::exp(I * 2.0) - 1.0) / I;
    REQUIRE(std::abs(osc - want) < 1e-12);

    const MultiVector mv = adaptive_quadrature(
        [](double s) {
            MultiVector v;
            v[0] = std::cos(s);
            v[3] = I * s;
            return v;
        },
        0.0, 1.0, 1e-12);
    REQUIRE(std::abs(mv[0] - std::sin(1.0)) < 1e-12);
    REQUIRE(std::abs(mv[3] - I * 0.5) < 1e-12);

    // needs refinement: sharp but integrable bump
    const double bump = adaptive_quadrature(
        [](double s) { return 1.0 / (1e-4 + s * s); }, -1.0, 1.0, 1e-10);
    const double bump_want = 2.0 / 1e-2 * std::atan(1.0 / 1e-2);
    REQUIRE(std::abs(bump - bump_want) < 1e-7);
}

TEST_CASE("quadrature failure paths") {
    REQUIRE_THROWS_AS(adaptive_quadrature([](double s) { return 1.0 / std::abs(s - 0.5); },
                                          0.0, 1.0, 1e-10),
                      QuadratureFailure);
    REQUIRE_THROWS_AS(adaptive_quadrature([](double s) { return s; }, 0.0, 1.0, 0.0),
                      QuadratureFailure);
    // tiny segment budget on a hard integrand (off-center so the symmetric
    // rules cannot agree by cancellation)
    REQUIRE_THROWS_AS(adaptive_quadrature([](double s) {
                          return 1.0 / (1e-6 + (s - 0.3) * (s - 0.3));
                      },
                                          -1.0, 1.0, 1e-10, 8),
                      QuadratureFailure);
}

TEST_CASE("proper derivative: identity map, constants, and the plane restriction") {
    const Algebra nat = natural_algebra();
    const Fd fd{1e-4, 4};
    const Tensor3 flat{};

    MVField ident = [](const Point4& p) { return MultiVector(p[0], p[1], p[2], p[3]); };
    const MultiVector did =
        proper_derivative(nat, ident, flat, {0.3, -0.2, 0.5, 0.1}, fd);
    REQUIRE(mv_dist(did, mv_basis(0)) < 1e-10);

    MVField constf = [](const Point4&) { return MultiVector(1.0, 2.0, 3.0, 4.0); };
    const MultiVector dc = proper_derivative(nat, constf, flat, {0.1, 0.2, 0.3, 0.4}, fd);
    REQUIRE(mv_max_abs(dc) < 1e-12);

    // two-channel restriction: d(z^2)/dz = 2z needs the channel count 2
    const Algebra pl = planar_algebra();
    MVField zsq = [](const Point4& p) {
        MultiVector f;
        f[0] = p[0] * p[0] - p[1] * p[1];
        f[1] = 2.0 * p[0] * p[1];
        return f;
    };
    const Point4 z{0.7, -0.4, 0.0, 0.0};
    const MultiVector dz2 = proper_derivative(pl, zsq, flat, z, fd);
    MultiVector want;
    want[0] = 2.0 * z[0];
    want[1] = 2.0 * z[1];
    REQUIRE(mv_dist(dz2, want) < 1e-10);
}

TEST_CASE("proper derivative picks up the connection by-product") {
    const Algebra nat = natural_algebra();
    const Fd fd{1e-4, 4};
    Rng rng(17);
    Tensor3 gamma{};
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                gamma[g][a][b] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    MVField constf = [](const Point4&) { return MultiVector(0.5, -1.0, 2.0, 0.25); };
    const Point4 z{0.1, 0.2, 0.3, 0.4};
    const MultiVector got = proper_derivative(nat, constf, gamma, z, fd);

    // oracle: (1/n) H f with H from the dedicated contraction
    const Mat4 H = proper_derivative_h_matrix(nat, gamma);
    const MultiVector fz = constf(z);
    MultiVector want;
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a) want[g] += H[g][a] * fz[a] / 4.0;
    REQUIRE(mv_dist(got, want) < 1e-12);
}

TEST_CASE("analyticity residual reproduces the Cauchy-Riemann equations") {
    const Algebra pl = planar_algebra();
    const Fd fd{1e-4, 4};
    const Tensor3 flat{};
    const Point4 z{0.3, 0.7, 0.0, 0.0};

    SECTION("holomorphic library vanishes") {
        const std::vector<std::function<cplx(cplx)>> lib = {
            [](cplx w) { return w * w; },
            [](cplx w) { return w * w * w; },
            [](cplx w) { return std::exp(w); },
            [](cplx w) { return std::sin(w); },
            [](cplx w) { return 1.0 / (w - 2.0); },
        };
        for (const auto& fn : lib) {
            const MultiVector res =
                analyticity_residual(pl, holomorphic_field(fn), flat, z, fd);
            REQUIRE(mv_max_abs(res) < 1e-8);
        }
    }
    SECTION("non-holomorphic fields are flagged") {
        const MultiVector rconj = analyticity_residual(
            pl, holomorphic_field([](cplx w) { return std::conj(w); }), flat, z, fd);
        REQUIRE(std::abs(rconj[0] - 2.0) < 1e-9);
        REQUIRE(std::abs(rconj[1]) < 1e-9);

        const MultiVector rmag = analyticity_residual(
            pl, holomorphic_field([](cplx w) { return std::norm(w); }), flat, z, fd);
        REQUIRE(std::abs(rmag[0] - 2.0 * z[0]) < 1e-9);
        REQUIRE(std::abs(rmag[1] - 2.0 * z[1]) < 1e-9);

        const MultiVector rre = analyticity_residual(
            pl, holomorphic_field([](cplx w) { return w.real(); }), flat, z, fd);
        REQUIRE(std::abs(rre[0] - 1.0) < 1e-9);
    }
    SECTION("constant field with vanishing connection action") {
        MVField constf = [](const Point4&) { return MultiVector(2.0, 3.0, 0.0, 0.0); };
        const MultiVector r = analyticity_residual(pl, constf, flat, z, fd);
        REQUIRE(mv_max_abs(r) < 1e-12);
    }
}

TEST_CASE("naive directed integral is path dependent with the known values") {
    const Algebra nat = natural_algebra();
    SECTION("rectangles") {
        for (double c : {0.5, 1.0, 2.0}) {
            const MultiVector got = path_integral(nat, kRadiusSq, rectangle_path(c));
            MultiVector want;
            want[2] = 2.0 * (c * c + 1.0 / 3.0);
            REQUIRE(mv_dist(got, want) < 1e-8);
        }
    }
    SECTION("semicircular arc") {
        const MultiVector got = path_integral(nat, kRadiusSq, half_circle_path());
        MultiVector want;
        want[2] = 2.0;
        REQUIRE(mv_dist(got, want) < 1e-8);
    }
    SECTION("zero source") {
        MVField zero = [](const Point4&) { return MultiVector(); };
        REQUIRE(mv_max_abs(path_integral(nat, zero, rectangle_path(1.0))) == 0.0);
    }
    SECTION("spread across the family is large") {
        std::vector<double> vals;
        for (double c : {0.5, 1.0, 2.0})
            vals.push_back(path_integral(nat, kRadiusSq, rectangle_path(c))[2].real());
        vals.push_back(path_integral(nat, kRadiusSq, half_circle_path())[2].real());
        double lo = vals[0], hi = vals[0];
        for (double v : vals) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        REQUIRE(hi - lo >= 0.1);
    }
}

TEST_CASE("corrected integral is path independent across five paths") {
    const Algebra nat = natural_algebra();
    const Fd fd{1e-5, 4};
    MultiVector want;
    want[2] = 4.0 / 3.0;

    std::vector<Contour> family{rectangle_path(0.5), rectangle_path(1.0),
                                rectangle_path(2.0), half_circle_path(), bulge_path()};
    for (const Contour& c : family) {
        const MultiVector got = corrected_path_integral(nat, kCubicField, c, fd);
        REQUIRE(mv_dist(got, want) < 1e-6);
    }

    SECTION("closed loop vanishes") {
        const Contour loop = polyline_contour(
            {plane_point(0, -1), plane_point(1, -1), plane_point(1, 1), plane_point(0, 1),
             plane_point(0, -1)});
        const MultiVector got = corrected_path_integral(nat, kCubicField, loop, fd);
        REQUIRE(mv_max_abs(got) < 1e-6);
    }
}

TEST_CASE("residue pair: winding, radius independence, orientation") {
    auto circle = [](double r, bool ccw) {
        return arc_contour(MultiVector(), r, 0, 1, ccw ? 0.0 : 2.0 * kPi,
                           ccw ? 2.0 * kPi : 0.0, 1e-11);
    };
    const cplx two_pi_i = 2.0 * kPi * I;

    for (double r : {1.0, 5.0}) {
        const ResiduePair rp = residue_pair(circle(r, true));
        REQUIRE(std::abs(rp.i_z - two_pi_i) < 1e-8);
        REQUIRE(std::abs(rp.i_conj + two_pi_i) < 1e-8);
        REQUIRE(std::abs(rp.sum) < 1e-8);
    }
    const ResiduePair cw = residue_pair(circle(1.0, false));
    REQUIRE(std::abs(cw.i_z + two_pi_i) < 1e-8);
    REQUIRE(std::abs(cw.i_conj - two_pi_i) < 1e-8);
    REQUIRE(std::abs(cw.sum) < 1e-8);

    SECTION("ellipse keeps the winding number") {
        Contour ell;
        ell.position = [](double th) {
            MultiVector p;
            p[0] = 2.0 * std::cos(th);
            p[1] = 0.5 * std::sin(th);
            return p;
        };
        ell.s_begin = 0.0;
        ell.s_end = 2.0 * kPi;
        ell.tolerance = 1e-11;
        const ResiduePair rp = residue_pair(ell);
        REQUIRE(std::abs(rp.i_z - two_pi_i) < 1e-7);
        REQUIRE(std::abs(rp.sum) < 1e-7);
    }
}

TEST_CASE("descent conditions classify oscillation and decay") {
    const Algebra nat = natural_algebra();

    SECTION("energy-conserving flow is pure oscillation") {
        // phi(s) = (u - i z)^2 / 2 along the flow z' = u, u' = z starting at
        // (z, u) = (0, 1); closed form z = sinh s, u = cosh s
        auto phi = [](double s) {
            const cplx v = std::cosh(s) - I * std::sinh(s);
            return mv_scalar(0.5 * v * v);
        };
        const DescentParts d = descent_conditions(nat, phi, 0.4);
        REQUIRE(mv_max_abs(d.re_part) < 1e-9);
        REQUIRE(mv_max_abs(d.im_part) > 0.1);
        REQUIRE_FALSE(d.has_axis);
    }
    SECTION("straight-line transport has vanishing change") {
        auto phi = [](double) {
            MultiVector u;
            u[1] = 0.6;
            u[2] = 0.8;
            return u;
        };
        const DescentParts d = descent_conditions(nat, phi, 0.0);
        REQUIRE(mv_max_abs(d.re_part) < 1e-12);
        REQUIRE(mv_max_abs(d.im_part) < 1e-12);
        REQUIRE(d.has_axis);
    }
    SECTION("constant scalar exponent") {
        auto phi = [](double) { return mv_scalar(cplx(0.3, 0.7)); };
        const DescentParts d = descent_conditions(nat, phi, 1.0);
        REQUIRE(mv_max_abs(d.re_part) == 0.0);
        REQUIRE(mv_max_abs(d.im_part) == 0.0);
    }
    SECTION("growing real exponent is pure descent direction") {
        auto phi = [](double s) {
            MultiVector u;
            u[1] = s;
            return u;
        };
        const DescentParts d = descent_conditions(nat, phi, 1.0);
        REQUIRE(mv_max_abs(d.im_part) < 1e-10);
        REQUIRE(mv_max_abs(d.re_part) > 0.9);
        // the re part is the velocity itself, up to sign conventions of the axis
        REQUIRE(mv_max_abs(d.re_part) < 1.1);
    }
    SECTION("rotating phase is pure oscillation with an axis") {
        auto phi = [](double s) {
            MultiVector u;
            u[1] = I * s;
            return u;
        };
        const DescentParts d = descent_conditions(nat, phi, 1.0);
        REQUIRE(mv_max_abs(d.re_part) < 1e-10);
        REQUIRE(mv_max_abs(d.im_part) > 0.9);
        REQUIRE(d.has_axis);
    }
}
