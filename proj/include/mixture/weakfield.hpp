#pragma once
// first-order perturbed metric over the flat background, the time-leg
// slice of its connection, and slow test-particle motion in that metric

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mixture/electromag.hpp"
#include "mixture/errors.hpp"
#include "mixture/fd.hpp"
#include "mixture/fields.hpp"
#include "mixture/geometry.hpp"
#include "mixture/linalg.hpp"

namespace mixture {

namespace detail {

inline double eval_or_zero(const ScalarField& f, const Point4& z) {
    return f ? f(z) : 0.0;
}

inline ScalarField field_or_zero(const ScalarField& f) {
    if (f) return f;
    return [](const Point4&) { return 0.0; };
}

}  // namespace detail

// absolute tolerance on the dimensionless coupling constraints
inline constexpr double kWeakCouplingTol = 1e-12;

// potentials and couplings of a weak perturbation over the flat background.
// psi sources the gravitational sector; phi and A source the electromagnetic
// one. An empty field stands for identically zero. The couplings are not
// independent: the slow-motion reduction requires mu_g = 2/c^2 and
// rho * mu_e = 1/c^2, and every entry point checks both.
struct WeakFieldConfig {
    ScalarField psi;                 // gravitational potential
    ScalarField phi;                 // electric potential
    std::array<ScalarField, 3> A{};  // vector potential
    double c = 1.0;
    double mu_g = 2.0;   // gravitational coupling, must equal 2/c^2
    double mu_e = 1.0;   // electromagnetic coupling
    double rho = 1.0;    // charge scale, must satisfy rho * mu_e = 1/c^2
    double guard = 1e-3; // bound on the dimensionless perturbation size
};

inline void validate_weakfield(const WeakFieldConfig& cfg) {
    if (!std::isfinite(cfg.c) || !(cfg.c > 0.0))
        throw ConfigError("weak-field setup: c must be finite and positive");
    const double csq = cfg.c * cfg.c;
    if (std::abs(cfg.mu_g * csq - 2.0) > kWeakCouplingTol)
        throw ConfigError("weak-field setup: couplings must satisfy mu_g = 2/c^2");
    if (std::abs(cfg.rho * cfg.mu_e * csq - 1.0) > kWeakCouplingTol)
        throw ConfigError("weak-field setup: couplings must satisfy rho * mu_e = 1/c^2");
    if (!std::isfinite(cfg.guard) || !(cfg.guard > 0.0))
        throw ConfigError("weak-field setup: guard must be finite and positive");
}

// dimensionless size of the perturbation at a point:
// |mu_g psi| + |mu_e phi| + |mu_e| * |A|
inline double perturbation_size(const WeakFieldConfig& cfg, const Point4& z) {
    const double ps = detail::eval_or_zero(cfg.psi, z);
    const double ph = detail::eval_or_zero(cfg.phi, z);
    double a2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double ai = detail::eval_or_zero(cfg.A[i], z);
        a2 += ai * ai;
    }
    return std::abs(cfg.mu_g * ps) + std::abs(cfg.mu_e * ph) +
           std::abs(cfg.mu_e) * std::sqrt(a2);
}

inline void weakfield_guard(const WeakFieldConfig& cfg, const Point4& z) {
    const double s = perturbation_size(cfg, z);
    if (!(s < cfg.guard))  // also rejects a non-finite size
        throw WeakFieldViolation("weak-field bound exceeded: perturbation size " +
                                 std::to_string(s) + " is not below the guard " +
                                 std::to_string(cfg.guard));
}

// metric and its first-order inverse. With x = mu_g psi + i mu_e phi the
// lower metric is
//   g_00 = -1 - x,   g_jj = 1 + x,   g_0j = g_j0 = i mu_e A_j
// and the upper one flips the sign of x on the diagonal while keeping the
// off-diagonal entries, which is the true inverse through first order:
//   g_ab g^bc = delta_a^c + O(pert^2)
struct MetricPair {
    Mat4 lower{};
    Mat4 upper{};
};

inline MetricPair perturbed_metric(const WeakFieldConfig& cfg, const Point4& z) {
    validate_weakfield(cfg);
    weakfield_guard(cfg, z);
    const double ps = detail::eval_or_zero(cfg.psi, z);
    const double ph = detail::eval_or_zero(cfg.phi, z);
    const cplx x(cfg.mu_g * ps, cfg.mu_e * ph);
    MetricPair gp{};
    gp.lower[0][0] = -1.0 - x;
    gp.upper[0][0] = -1.0 + x;
    for (int j = 1; j < 4; ++j) {
        const cplx od(0.0, cfg.mu_e * detail::eval_or_zero(cfg.A[j - 1], z));
        gp.lower[j][j] = 1.0 + x;
        gp.upper[j][j] = 1.0 - x;
        gp.lower[0][j] = od;
        gp.lower[j][0] = od;
        gp.upper[0][j] = od;
        gp.upper[j][0] = od;
    }
    return gp;
}

// max-entry distance of lower * upper from the identity; second order in
// the perturbation by construction
inline double metric_pair_residual(const MetricPair& gp) {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            cplx s = (a == b) ? cplx(-1.0, 0.0) : cplx(0.0, 0.0);
            for (int k = 0; k < 4; ++k) s += gp.lower[a][k] * gp.upper[k][b];
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

// field strengths entering the slow-motion force law, sampled by finite
// differences: G = grad(psi), E = grad(phi) + d/dx0 A, B = curl A
struct WeakFieldSample {
    std::array<double, 3> G{};
    std::array<double, 3> E{};
    std::array<double, 3> B{};
};

inline WeakFieldSample sample_weak_fields(const WeakFieldConfig& cfg, const Point4& z,
                                          const Fd& fd, const Box* box = nullptr) {
    WeakFieldSample s{};
    const ScalarField psif = detail::field_or_zero(cfg.psi);
    for (int i = 0; i < 3; ++i) s.G[i] = fd_partial(psif, z, i + 1, fd, box);
    const FourPotential pot{detail::field_or_zero(cfg.phi),
                            {detail::field_or_zero(cfg.A[0]), detail::field_or_zero(cfg.A[1]),
                             detail::field_or_zero(cfg.A[2])}};
    const EMFieldSample em = em_derivative(pot, z, fd, box);
    s.E = em.E;
    s.B = em.B;
    return s;
}

// time-leg slice of the perturbed connection, measured from the metric,
// next to the closed-form first-order model
//   model = (mu_g / 2) * grav_pattern + (i mu_e / 2) * field_pattern
// grav_pattern carries G symmetrically in row 0 and column 0; field_pattern
// is antisymmetric: +E_j in row 0, -E_j in column 0, and -eps_{ijk} B_k in
// the spatial block. The measured slice is NOT that model in the electric
// sector: differentiating the metric puts (i mu_e / 2) grad(phi) in row 0
// but (i mu_e / 2)(grad(phi) + 2 d/dx0 A) in column 0, so the row/column
// pair is symmetric (not antisymmetric) for a potential-sourced E, and only
// the gauge-invariant sum
//   slice[0][j] + slice[j][0] = i mu_e E_j   (at first order)
// tracks E itself. Consequences, both reported as residuals instead of
// hidden: model_residual ~ mu_e |E| and hermiticity_residual ~ mu_e |E|
// whenever E != 0, while both drop to O(pert^2) + O(h^2) for electric-free
// configurations.
struct ConnectionSlice {
    Mat4 gamma_col{};         // measured: [row][col] = connection^row_{col, time-leg}
    Real4x4 grav_pattern{};
    Real4x4 field_pattern{};
    Mat4 model{};
    WeakFieldSample fields{};
    double model_residual = 0.0;
    double hermiticity_residual = 0.0;
};

inline ConnectionSlice weakfield_connection(const WeakFieldConfig& cfg, const Point4& z,
                                            const Fd& fd, const Box* box = nullptr) {
    validate_weakfield(cfg);
    const MetricField gf = [&cfg](const Point4& p) { return perturbed_metric(cfg, p).lower; };
    const Tensor3 gamma = christoffel_from_metric(gf, z, fd, box);
    ConnectionSlice out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.gamma_col[r][c] = gamma[r][c][0];
    out.fields = sample_weak_fields(cfg, z, fd, box);
    for (int j = 0; j < 3; ++j) {
        out.grav_pattern[0][j + 1] = out.fields.G[j];
        out.grav_pattern[j + 1][0] = out.fields.G[j];
        out.field_pattern[0][j + 1] = out.fields.E[j];
        out.field_pattern[j + 1][0] = -out.fields.E[j];
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double b = 0.0;
            for (int k = 0; k < 3; ++k) b -= detail::eps3(i, j, k) * out.fields.B[k];
            out.field_pattern[i + 1][j + 1] = b;
        }
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out.model[r][c] = 0.5 * cfg.mu_g * out.grav_pattern[r][c] +
                              cplx(0.0, 0.5 * cfg.mu_e) * out.field_pattern[r][c];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            out.model_residual =
                std::max(out.model_residual, std::abs(out.gamma_col[r][c] - out.model[r][c]));
            out.hermiticity_residual =
                std::max(out.hermiticity_residual,
                         std::abs(out.gamma_col[r][c] - std::conj(out.gamma_col[c][r])));
        }
    return out;
}

// slow test particle: event position (slot 0 is the time leg x^0 = c t)
// and velocity in units of c, kept strictly below 1
struct TestParticle {
    double m = 1.0;
    double e = 0.0;
    Point4 x{};
    std::array<double, 3> v{};
};

inline double particle_speed(const TestParticle& p) {
    return std::sqrt(p.v[0] * p.v[0] + p.v[1] * p.v[1] + p.v[2] * p.v[2]);
}

inline void validate_particle(const TestParticle& p) {
    if (!std::isfinite(p.m) || !(p.m > 0.0))
        throw ConfigError("test particle: mass must be finite and positive");
    if (!std::isfinite(p.e))
        throw ConfigError("test particle: charge must be finite");
    for (double xi : p.x)
        if (!std::isfinite(xi)) throw ConfigError("test particle: position must be finite");
    const double s = particle_speed(p);
    if (!(s < 1.0))  // also rejects a non-finite speed
        throw ConfigError("test particle: speed must stay below 1 (units of c)");
}

// acceleration d v / d x^0 split by source. The shipped law is
//   dv/dx^0 = -(1/2) c mu_g (1 - (e rho / m)^2) G
//             + (e c rho / m) mu_e (E + v x B)
// so grav = -(1/2) c mu_g G, lorentz = (e c rho / m) mu_e (E + v x B), and
// residual = +(1/2) c mu_g (e rho / m)^2 G is the charge-squared correction
// to the gravitational pull.
struct ForceSplit {
    std::array<double, 3> grav{};
    std::array<double, 3> lorentz{};
    std::array<double, 3> residual{};
    std::array<double, 3> total() const {
        return {grav[0] + lorentz[0] + residual[0], grav[1] + lorentz[1] + residual[1],
                grav[2] + lorentz[2] + residual[2]};
    }
};

namespace detail {

inline ForceSplit split_force(const WeakFieldConfig& cfg, double m, double e,
                              const WeakFieldSample& f, const std::array<double, 3>& v) {
    const double kg = 0.5 * cfg.c * cfg.mu_g;
    const double kl = e * cfg.c * cfg.rho * cfg.mu_e / m;
    const double kr = kg * (e * cfg.rho / m) * (e * cfg.rho / m);
    const std::array<double, 3> vxb{v[1] * f.B[2] - v[2] * f.B[1],
                                    v[2] * f.B[0] - v[0] * f.B[2],
                                    v[0] * f.B[1] - v[1] * f.B[0]};
    ForceSplit out{};
    for (int i = 0; i < 3; ++i) {
        out.grav[i] = -kg * f.G[i];
        out.lorentz[i] = kl * (f.E[i] + vxb[i]);
        out.residual[i] = kr * f.G[i];
    }
    return out;
}

struct MotionRate {
    std::array<double, 4> dx{};
    std::array<double, 3> dv{};
};

inline MotionRate motion_rate(const WeakFieldConfig& cfg, double m, double e, const Point4& x,
                              const std::array<double, 3>& v, const Fd& fd, const Box* box) {
    weakfield_guard(cfg, x);
    const ForceSplit f = split_force(cfg, m, e, sample_weak_fields(cfg, x, fd, box), v);
    MotionRate r{};
    r.dx[0] = 1.0;
    for (int i = 0; i < 3; ++i) r.dx[i + 1] = v[i];
    r.dv = f.total();
    return r;
}

}  // namespace detail

inline ForceSplit force_decomposition(const WeakFieldConfig& cfg, const TestParticle& p,
                                      const Fd& fd, const Box* box = nullptr) {
    validate_weakfield(cfg);
    validate_particle(p);
    weakfield_guard(cfg, p.x);
    return detail::split_force(cfg, p.m, p.e, sample_weak_fields(cfg, p.x, fd, box), p.v);
}

// one classical fourth-order step of size dt in coordinate time. The motion
// law is stated per unit of the time leg x^0 = c t, so the step in x^0 is
// c * dt; the weak-field guard is evaluated at every force sample.
inline TestParticle geodesic_step(const WeakFieldConfig& cfg, const TestParticle& p, double dt,
                                  const Fd& fd, const Box* box = nullptr) {
    validate_weakfield(cfg);
    validate_particle(p);
    if (!std::isfinite(dt) || !(dt > 0.0))
        throw ConfigError("geodesic step: dt must be finite and positive");
    const double du = cfg.c * dt;
    const auto rate = [&](const Point4& x, const std::array<double, 3>& v) {
        return detail::motion_rate(cfg, p.m, p.e, x, v, fd, box);
    };
    const auto shifted = [&](const detail::MotionRate& k, double w, Point4& x,
                             std::array<double, 3>& v) {
        for (int a = 0; a < 4; ++a) x[a] = p.x[a] + w * du * k.dx[a];
        for (int i = 0; i < 3; ++i) v[i] = p.v[i] + w * du * k.dv[i];
    };
    const detail::MotionRate k1 = rate(p.x, p.v);
    Point4 xs{};
    std::array<double, 3> vs{};
    shifted(k1, 0.5, xs, vs);
    const detail::MotionRate k2 = rate(xs, vs);
    shifted(k2, 0.5, xs, vs);
    const detail::MotionRate k3 = rate(xs, vs);
    shifted(k3, 1.0, xs, vs);
    const detail::MotionRate k4 = rate(xs, vs);
    TestParticle out = p;
    for (int a = 0; a < 4; ++a)
        out.x[a] = p.x[a] + (du / 6.0) * (k1.dx[a] + 2.0 * k2.dx[a] + 2.0 * k3.dx[a] + k4.dx[a]);
    for (int i = 0; i < 3; ++i)
        out.v[i] = p.v[i] + (du / 6.0) * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
    if (!(particle_speed(out) < 1.0))
        throw WeakFieldViolation("geodesic step: slow-motion bound exceeded, speed reached 1");
    return out;
}

struct TrajectoryPoint {
    Point4 x{};
    std::array<double, 3> v{};
};

// fixed-step history of the motion: steps + 1 samples including the start
inline std::vector<TrajectoryPoint> integrate_trajectory(const WeakFieldConfig& cfg,
                                                         TestParticle p, double dt, int steps,
                                                         const Fd& fd,
                                                         const Box* box = nullptr) {
    if (steps < 0) throw ConfigError("trajectory: steps must be non-negative");
    std::vector<TrajectoryPoint> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back({p.x, p.v});
    for (int s = 0; s < steps; ++s) {
        p = geodesic_step(cfg, p, dt, fd, box);
        out.push_back({p.x, p.v});
    }
    return out;
}

// first integral of charge-free motion in a static gravitational potential:
//   v^2 / 2 + (c mu_g / 2) psi
// in units of c^2; constant along the shipped motion law when e = 0 and
// psi does not depend on the time leg
inline double orbit_energy(const WeakFieldConfig& cfg, const TestParticle& p) {
    const double ke = 0.5 * (p.v[0] * p.v[0] + p.v[1] * p.v[1] + p.v[2] * p.v[2]);
    return ke + 0.5 * cfg.c * cfg.mu_g * detail::eval_or_zero(cfg.psi, p.x);
}

}  // namespace mixture
