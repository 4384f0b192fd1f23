#pragma once

#include <array>
#include <cmath>

#include "errors.hpp"
#include "linalg.hpp"
#include "mixture_tensor.hpp"

namespace mixture {

using Point4 = std::array<double, 4>;

// axis-aligned evaluation domain; fields promise validity inside it
struct Box {
    Point4 lo{-1e30, -1e30, -1e30, -1e30};
    Point4 hi{+1e30, +1e30, +1e30, +1e30};

    bool contains(const Point4& p, double margin = 0.0) const {
        for (int i = 0; i < 4; ++i)
            if (p[i] < lo[i] + margin || p[i] > hi[i] - margin) return false;
        return true;
    }
};

// central differences by default; order 4 available; stencils that would
// step outside the box fall back to one-sided second-order forms
struct Fd {
    double h = 1e-3;
    int order = 2; // 2 or 4
};

// elementwise arithmetic for the tensor-valued fields the stencils sample
inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

inline Mat4 operator*(cplx s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = s * a[i][j];
    return r;
}

inline Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) r[g][x][y] = a[g][x][y] + b[g][x][y];
    return r;
}

inline Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) r[g][x][y] = a[g][x][y] - b[g][x][y];
    return r;
}

inline Tensor3 operator*(cplx s, const Tensor3& a) {
    Tensor3 r;
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) r[g][x][y] = s * a[g][x][y];
    return r;
}

namespace detail {

inline Point4 shifted(Point4 p, int axis, double d) {
    p[static_cast<size_t>(axis)] += d;
    return p;
}

} // namespace detail

// first partial along an axis; F maps Point4 to any type closed under
// addition, subtraction and complex scaling
template <class F>
auto fd_partial(F&& f, const Point4& z, int axis, const Fd& fd, const Box* box = nullptr) {
    using detail::shifted;
    const double h = fd.h;
    const double radius = (fd.order == 4) ? 2.0 * h : h;
    const bool central_ok =
        box == nullptr || (box->contains(shifted(z, axis, radius)) &&
                           box->contains(shifted(z, axis, -radius)));
    if (central_ok) {
        if (fd.order == 4) {
            auto f1 = f(shifted(z, axis, h));
            auto f2 = f(shifted(z, axis, 2.0 * h));
            auto fm1 = f(shifted(z, axis, -h));
            auto fm2 = f(shifted(z, axis, -2.0 * h));
            return (1.0 / (12.0 * h)) * (fm2 - f2 + 8.0 * (f1 - fm1));
        }
        auto fp = f(shifted(z, axis, h));
        auto fm = f(shifted(z, axis, -h));
        return (1.0 / (2.0 * h)) * (fp - fm);
    }
    // one-sided second-order fallback toward the interior
    const bool forward = box->contains(shifted(z, axis, 2.0 * h));
    const double s = forward ? 1.0 : -1.0;
    if (!forward && !box->contains(shifted(z, axis, -2.0 * h)))
        throw Error("fd_partial: box too small for the stencil");
    auto f0 = f(z);
    auto f1 = f(shifted(z, axis, s * h));
    auto f2 = f(shifted(z, axis, s * 2.0 * h));
    return (s / (2.0 * h)) * (-3.0 * f0 + 4.0 * f1 - f2);
}

// second partial; same-axis uses the dedicated stencil, mixed axes nest two
// first-derivative stencils (symmetric four-point form at order 2)
template <class F>
auto fd_second(F&& f, const Point4& z, int a, int b, const Fd& fd, const Box* box = nullptr) {
    using detail::shifted;
    const double h = fd.h;
    if (a == b) {
        const double radius = (fd.order == 4) ? 2.0 * h : h;
        const bool central_ok =
            box == nullptr || (box->contains(shifted(z, a, radius)) &&
                               box->contains(shifted(z, a, -radius)));
        if (!central_ok) throw Error("fd_second: point too close to the boundary");
        if (fd.order == 4) {
            auto f0 = f(z);
            auto f1 = f(shifted(z, a, h));
            auto f2 = f(shifted(z, a, 2.0 * h));
            auto fm1 = f(shifted(z, a, -h));
            auto fm2 = f(shifted(z, a, -2.0 * h));
            return (1.0 / (12.0 * h * h)) *
                   (-1.0 * (f2 + fm2) + 16.0 * (f1 + fm1) - 30.0 * f0);
        }
        auto f0 = f(z);
        auto f1 = f(shifted(z, a, h));
        auto fm1 = f(shifted(z, a, -h));
        return (1.0 / (h * h)) * (f1 - 2.0 * f0 + fm1);
    }
    auto inner = [&](const Point4& p) { return fd_partial(f, p, b, fd, box); };
    return fd_partial(inner, z, a, fd, box);
}

} // namespace mixture
