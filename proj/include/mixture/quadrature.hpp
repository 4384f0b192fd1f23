#pragma once

// Adaptive Gauss-Kronrod (G7/K15) quadrature for complex- and
// multivector-valued integrands on a real parameter interval.  The embedded
// 7-point Gauss rule shares the odd Kronrod nodes, so each segment costs 15
// evaluations and yields both the
// high-order estimate and an error estimate; segments whose error exceeds
// their share of the tolerance are bisected.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "mixture/errors.hpp"
#include "mixture/multivector.hpp"

namespace mixture {

namespace detail {

// Kronrod-15 nodes on [0, 1] (symmetric pairs +/-x) and weights; the Gauss-7
// sub-rule uses nodes 1, 3, 5 and the center.
inline constexpr double kronrod_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(const cplx& v) { return std::abs(v); }
inline double quad_norm(const MultiVector& v) { return mv_max_abs(v); }

} // namespace detail

// Integrates f over [a, b] to the requested absolute tolerance.  Throws
// QuadratureFailure when the segment budget is exhausted or a segment shrinks
// to the roundoff floor without converging (e.g. an integrable-looking
// singularity inside the interval).
template <class F>
auto adaptive_quadrature(F&& f, double a, double b, double tol,
                         std::size_t max_segments = 4096)
    -> decltype(f(0.0)) {
    using T = decltype(f(0.0));
    if (!(tol > 0.0)) throw QuadratureFailure("quadrature tolerance must be positive");
    if (a == b) return T{};

    struct Segment {
        double lo, hi, tol;
    };
    std::vector<Segment> stack{{a, b, tol}};
    T total{};
    std::size_t used = 0;
    const double width_floor = 1e-13 * (std::abs(b - a) + std::abs(a) + std::abs(b));

    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();
        if (++used > max_segments)
            throw QuadratureFailure("quadrature segment budget exhausted");

        const double mid = 0.5 * (seg.lo + seg.hi);
        const double half = 0.5 * (seg.hi - seg.lo);

        T kron = detail::kronrod_w[7] * f(mid);
        T gauss = detail::gauss_w[3] * f(mid);
        for (int i = 0; i < 7; ++i) {
            const T pair =
                f(mid + half * detail::kronrod_x[i]) + f(mid - half * detail::kronrod_x[i]);
            kron = kron + detail::kronrod_w[i] * pair;
            if (i % 2 == 1) gauss = gauss + detail::gauss_w[i / 2] * pair;
        }
        kron = half * kron;
        gauss = half * gauss;

        const double err = detail::quad_norm(kron - gauss);
        if (err <= seg.tol || std::abs(seg.hi - seg.lo) < width_floor) {
            if (err > seg.tol)
                throw QuadratureFailure("quadrature segment collapsed without converging");
            total = total + kron;
        } else {
            stack.push_back({seg.lo, mid, 0.5 * seg.tol});
            stack.push_back({mid, seg.hi, 0.5 * seg.tol});
        }
    }
    return total;
}

} // namespace mixture
