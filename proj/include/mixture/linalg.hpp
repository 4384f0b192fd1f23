#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"

namespace mixture {

using cplx = std::complex<double>;

using Mat4 = std::array<std::array<cplx, 4>, 4>;

inline Mat4 mat4_zero() {
    Mat4 m{};
    return m;
}

inline Mat4 mat4_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx aik = a[i][k];
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

inline std::array<cplx, 4> mat4_apply(const Mat4& a, const std::array<cplx, 4>& v) {
    std::array<cplx, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline double mat4_max_abs(const Mat4& a) {
    double m = 0.0;
    for (const auto& row : a)
        for (const auto& x : row) m = std::max(m, std::abs(x));
    return m;
}

// Gauss-Jordan with partial pivoting; throws SingularMatrix below pivot_floor
inline Mat4 mat4_inverse(const Mat4& a, double pivot_floor = 1e-300) {
    Mat4 m = a;
    Mat4 inv = mat4_identity();
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        double best = std::abs(m[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            const double v = std::abs(m[r][col]);
            if (v > best) { best = v; piv = r; }
        }
        if (!(best > pivot_floor))
            throw SingularMatrix("4x4 inverse: pivot magnitude " + std::to_string(best));
        if (piv != col) { std::swap(m[piv], m[col]); std::swap(inv[piv], inv[col]); }
        const cplx d = m[col][col];
        for (int j = 0; j < 4; ++j) { m[col][j] /= d; inv[col][j] /= d; }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const cplx f = m[r][col];
            if (f == cplx(0.0)) continue;
            for (int j = 0; j < 4; ++j) { m[r][j] -= f * m[col][j]; inv[r][j] -= f * inv[col][j]; }
        }
    }
    return inv;
}

// rough conditioning proxy: max-norm of A times max-norm of A^-1
inline double mat4_cond_estimate(const Mat4& a) {
    return mat4_max_abs(a) * mat4_max_abs(mat4_inverse(a));
}

// determinant via partially pivoted elimination (product of pivots)
inline cplx mat4_det(const Mat4& a) {
    Mat4 m = a;
    cplx det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        double best = std::abs(m[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            const double v = std::abs(m[r][col]);
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) return 0.0;
        if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
        det *= m[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const cplx f = m[r][col] / m[col][col];
            if (f == cplx(0.0)) continue;
            for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

// small dense complex matrix for the gauge-group side (k x k, k runtime)
struct MatC {
    int n = 0;
    std::vector<cplx> d; // row-major

    MatC() = default;
    explicit MatC(int n_) : n(n_), d(static_cast<size_t>(n_) * n_, cplx(0.0)) {}

    cplx& operator()(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
    const cplx& operator()(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }

    static MatC identity(int n_) {
        MatC m(n_);
        for (int i = 0; i < n_; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline MatC operator+(const MatC& a, const MatC& b) {
    MatC r(a.n);
    for (size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}

inline MatC operator-(const MatC& a, const MatC& b) {
    MatC r(a.n);
    for (size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}

inline MatC operator*(const cplx& s, const MatC& a) {
    MatC r(a.n);
    for (size_t i = 0; i < a.d.size(); ++i) r.d[i] = s * a.d[i];
    return r;
}

inline MatC operator*(const MatC& a, const MatC& b) {
    MatC r(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < a.n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline double matc_max_abs(const MatC& a) {
    double m = 0.0;
    for (const auto& x : a.d) m = std::max(m, std::abs(x));
    return m;
}

inline MatC matc_inverse(const MatC& a, double pivot_floor = 1e-300) {
    const int n = a.n;
    MatC m = a;
    MatC inv = MatC::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(m(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(m(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (!(best > pivot_floor))
            throw SingularMatrix("kxk inverse: pivot magnitude " + std::to_string(best));
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const cplx dd = m(col, col);
        for (int j = 0; j < n; ++j) { m(col, j) /= dd; inv(col, j) /= dd; }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = m(r, col);
            if (f == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) { m(r, j) -= f * m(col, j); inv(r, j) -= f * inv(col, j); }
        }
    }
    return inv;
}

// scaled-and-squared series exponential; entries stay O(1) for our uses
inline MatC matc_exp(const MatC& a, int max_terms = 64, double tail_tol = 1e-18) {
    const double norm = matc_max_abs(a);
    int squarings = 0;
    MatC base = a;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        const double scale = std::ldexp(1.0, -squarings);
        base = cplx(scale) * a;
    }
    MatC sum = MatC::identity(a.n);
    MatC term = MatC::identity(a.n);
    bool converged = false;
    for (int k = 1; k <= max_terms; ++k) {
        term = cplx(1.0 / k) * (term * base);
        sum = sum + term;
        if (matc_max_abs(term) < tail_tol * std::max(1.0, matc_max_abs(sum))) {
            converged = true;
            break;
        }
    }
    if (!converged) throw NonConvergence("matrix exponential series tail not met");
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

} // namespace mixture
