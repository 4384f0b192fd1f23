#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "linalg.hpp"

namespace mixture {

// element of the four-channel complex algebra: z = z^0 e0 + z^1 e1 + z^2 e2 + z^3 e3
struct MultiVector {
    std::array<cplx, 4> c{};

    MultiVector() = default;
    MultiVector(cplx c0, cplx c1, cplx c2, cplx c3) : c{c0, c1, c2, c3} {}
    explicit MultiVector(const std::array<cplx, 4>& a) : c(a) {}

    cplx& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const cplx& operator[](int i) const { return c[static_cast<size_t>(i)]; }
};

inline MultiVector mv_basis(int alpha) {
    MultiVector z;
    z[alpha] = 1.0;
    return z;
}

inline MultiVector mv_scalar(cplx s) { return MultiVector(s, 0.0, 0.0, 0.0); }

inline MultiVector operator+(const MultiVector& a, const MultiVector& b) {
    MultiVector r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

inline MultiVector operator-(const MultiVector& a, const MultiVector& b) {
    MultiVector r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
    return r;
}

inline MultiVector operator-(const MultiVector& a) {
    MultiVector r;
    for (int i = 0; i < 4; ++i) r[i] = -a[i];
    return r;
}

inline MultiVector operator*(cplx s, const MultiVector& a) {
    MultiVector r;
    for (int i = 0; i < 4; ++i) r[i] = s * a[i];
    return r;
}

inline MultiVector operator*(const MultiVector& a, cplx s) { return s * a; }

inline MultiVector operator/(const MultiVector& a, cplx s) {
    MultiVector r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] / s;
    return r;
}

// sup norm over channels (channel values are complex)
inline double mv_max_abs(const MultiVector& a) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

inline double mv_dist(const MultiVector& a, const MultiVector& b) {
    return mv_max_abs(a - b);
}

// euclidean norm of the 8 real components, used for series tail bounds
inline double mv_norm2(const MultiVector& a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(a[i]);
    return std::sqrt(s);
}

inline bool mv_finite(const MultiVector& a) {
    for (int i = 0; i < 4; ++i)
        if (!std::isfinite(a[i].real()) || !std::isfinite(a[i].imag())) return false;
    return true;
}

inline void mv_require_finite(const MultiVector& a, const char* where) {
    if (!mv_finite(a)) throw NonFiniteValue(std::string(where) + ": non-finite channel");
}

inline std::string mv_to_string(const MultiVector& a) {
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << "(" << a[i].real() << (a[i].imag() < 0 ? "" : "+") << a[i].imag() << "i)";
    }
    os << "]";
    return os.str();
}

} // namespace mixture
