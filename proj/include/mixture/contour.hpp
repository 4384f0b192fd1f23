#pragma once

// Parametrized paths through the algebra's coordinate space, with factories
// for the shapes used throughout the test corpus: polylines, circular arcs in
// a coordinate plane, and per-channel polynomial curves.

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "mixture/errors.hpp"
#include "mixture/multivector.hpp"

namespace mixture {

struct Contour {
    std::function<MultiVector(double)> position;
    // optional analytic velocity; when absent, a central difference in the
    // parameter is used
    std::function<MultiVector(double)> velocity;
    double s_begin = 0.0;
    double s_end = 1.0;
    // interior parameters where the path is continuous but not smooth
    // (integration is split there so each piece has a smooth integrand)
    std::vector<double> breakpoints;
    double tolerance = 1e-10;
};

inline MultiVector contour_velocity(const Contour& c, double s) {
    if (c.velocity) return c.velocity(s);
    const double h = 1e-6 * std::max(1.0, std::abs(c.s_end - c.s_begin));
    return (c.position(s + h) - c.position(s - h)) / cplx(2.0 * h);
}

// piecewise-linear path through the given points; parameter runs over
// [0, n_segments] with unit parameter per segment
inline Contour polyline_contour(std::vector<MultiVector> points, double tol = 1e-10) {
    if (points.size() < 2) throw Error("polyline needs at least two points");
    Contour c;
    const auto pts = std::move(points);
    const int nseg = static_cast<int>(pts.size()) - 1;
    c.position = [pts, nseg](double s) {
        int k = static_cast<int>(std::floor(s));
        if (k < 0) k = 0;
        if (k >= nseg) k = nseg - 1;
        const double t = s - k;
        return pts[k] + t * (pts[k + 1] - pts[k]);
    };
    c.velocity = [pts, nseg](double s) {
        int k = static_cast<int>(std::floor(s));
        if (k < 0) k = 0;
        if (k >= nseg) k = nseg - 1;
        return pts[k + 1] - pts[k];
    };
    c.s_begin = 0.0;
    c.s_end = nseg;
    for (int k = 1; k < nseg; ++k) c.breakpoints.push_back(k);
    c.tolerance = tol;
    return c;
}

// circular arc of the given radius in the (chan_x, chan_y) coordinate plane,
// centered at `center`, parametrized by the angle itself
inline Contour arc_contour(const MultiVector& center, double radius, int chan_x,
                           int chan_y, double theta_begin, double theta_end,
                           double tol = 1e-10) {
    Contour c;
    c.position = [center, radius, chan_x, chan_y](double th) {
        MultiVector p = center;
        p[chan_x] += radius * std::cos(th);
        p[chan_y] += radius * std::sin(th);
        return p;
    };
    c.velocity = [radius, chan_x, chan_y](double th) {
        MultiVector v;
        v[chan_x] = -radius * std::sin(th);
        v[chan_y] = radius * std::cos(th);
        return v;
    };
    c.s_begin = theta_begin;
    c.s_end = theta_end;
    c.tolerance = tol;
    return c;
}

// per-channel polynomial curve z^c(s) = sum_k coeffs[c][k] s^k over s in [0, 1]
inline Contour polynomial_contour(std::array<std::vector<cplx>, 4> coeffs,
                                  double tol = 1e-10) {
    Contour c;
    const auto co = std::move(coeffs);
    c.position = [co](double s) {
        MultiVector p;
        for (int ch = 0; ch < 4; ++ch) {
            cplx acc = 0.0;
            for (std::size_t k = co[ch].size(); k-- > 0;) acc = acc * s + co[ch][k];
            p[ch] = acc;
        }
        return p;
    };
    c.velocity = [co](double s) {
        MultiVector v;
        for (int ch = 0; ch < 4; ++ch) {
            cplx acc = 0.0;
            for (std::size_t k = co[ch].size(); k-- > 1;)
                acc = acc * s + static_cast<double>(k) * co[ch][k];
            v[ch] = acc;
        }
        return v;
    };
    c.s_begin = 0.0;
    c.s_end = 1.0;
    c.tolerance = tol;
    return c;
}

} // namespace mixture
