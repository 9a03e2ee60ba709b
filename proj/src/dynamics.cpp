#include "stark_toric/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "stark_toric/errors.hpp"
#include "stark_toric/levi_civita.hpp"
#include "stark_toric/stark_model.hpp"

namespace stark_toric {

namespace {

template <std::size_t N>
using Arr = std::array<double, N>;

// Kick-drift-kick leapfrog for H = |p|^2/2 + U(q); accel returns -grad U.
template <std::size_t N, class Accel>
void leapfrog(Arr<N>& q, Arr<N>& p, double h, const Accel& accel) {
    Arr<N> a = accel(q);
    for (std::size_t i = 0; i < N; ++i) p[i] += 0.5 * h * a[i];
    for (std::size_t i = 0; i < N; ++i) q[i] += h * p[i];
    a = accel(q);
    for (std::size_t i = 0; i < N; ++i) p[i] += 0.5 * h * a[i];
}

// Yoshida's fourth-order triple-jump composition of leapfrog.
const double kCbrt2 = std::cbrt(2.0);
const double kYoshidaOuter = 1.0 / (2.0 - kCbrt2);
const double kYoshidaInner = -kCbrt2 / (2.0 - kCbrt2);

template <std::size_t N, class Accel>
void advance(Arr<N>& q, Arr<N>& p, double h, Scheme scheme, const Accel& accel) {
    if (scheme == Scheme::Leapfrog2) {
        leapfrog(q, p, h, accel);
        return;
    }
    leapfrog(q, p, kYoshidaOuter * h, accel);
    leapfrog(q, p, kYoshidaInner * h, accel);
    leapfrog(q, p, kYoshidaOuter * h, accel);
}

std::int64_t step_count(double duration, const IntegratorSpec& spec) {
    if (!std::isfinite(duration)) throw DomainError("duration must be finite");
    const double n = std::ceil(std::abs(duration) / spec.step);
    if (n > static_cast<double>(spec.max_steps))
        throw NumericalError("integration needs " + std::to_string(n) +
                             " steps, more than max_steps");
    return static_cast<std::int64_t>(n);
}

Arr<1> oscillator_accel(double z, double eps, OscillatorSelector sel) {
    const double quartic = 2.0 * eps * z * z * z;
    return {sel == OscillatorSelector::Plus ? -z - quartic : -z + quartic};
}

double oscillator_energy(double z, double w, FieldStrength eps, OscillatorSelector sel) {
    return sel == OscillatorSelector::Plus ? oscillator_energy_plus(z, w, eps)
                                           : oscillator_energy_minus(z, w, eps);
}

// Escape guard for the MINUS well: the saddles sit at |z| = 1/sqrt(2 eps).
void check_well(double z, FieldStrength eps, OscillatorSelector sel) {
    if (sel != OscillatorSelector::Minus || eps.value() <= 0.0) return;
    if (std::abs(z) >= 1.0 / std::sqrt(2.0 * eps.value()))
        throw EscapeError("MINUS oscillator left the bounded well at z = " + std::to_string(z));
}

Arr<2> regularized_accel(const Arr<2>& z, double eps) {
    return {-z[0] - 2.0 * eps * z[0] * z[0] * z[0], -z[1] + 2.0 * eps * z[1] * z[1] * z[1]};
}

// Physical time over one regularized step: trapezoid plus the endpoint
// derivative correction, with dR/ds = 2 z.w along the flow.
double physical_increment(const Arr<2>& z0, const Arr<2>& w0, const Arr<2>& z1, const Arr<2>& w1,
                          double h) {
    const double r0 = z0[0] * z0[0] + z0[1] * z0[1];
    const double r1 = z1[0] * z1[0] + z1[1] * z1[1];
    const double dr0 = 2.0 * (z0[0] * w0[0] + z0[1] * w0[1]);
    const double dr1 = 2.0 * (z1[0] * w1[0] + z1[1] * w1[1]);
    return 0.5 * h * (r0 + r1) + h * h / 12.0 * (dr0 - dr1);
}

void check_collision(const Arr<2>& q) {
    if (std::hypot(q[0], q[1]) < kCollisionRadius)
        throw CollisionError("trajectory approached the collision at |q| = " +
                             std::to_string(std::hypot(q[0], q[1])));
}

// Advances the planar flow in place by `duration`.
void advance_planar(Arr<2>& q, Arr<2>& p, FieldStrength eps, const IntegratorSpec& spec,
                    double duration) {
    const std::int64_t n = step_count(duration, spec);
    if (n == 0) return;
    const double h = duration / static_cast<double>(n);
    const auto accel = [&](const Arr<2>& x) {
        check_collision(x);
        const Vec2 g = potential_gradient(x, eps);
        return Arr<2>{-g[0], -g[1]};
    };
    for (std::int64_t k = 0; k < n; ++k) {
        advance(q, p, h, spec.scheme, accel);
        check_collision(q);
    }
}

void advance_oscillator(double& z, double& w, FieldStrength eps, OscillatorSelector sel,
                        const IntegratorSpec& spec, double duration) {
    const std::int64_t n = step_count(duration, spec);
    if (n == 0) return;
    const double h = duration / static_cast<double>(n);
    Arr<1> q{z}, p{w};
    const auto accel = [&](const Arr<1>& x) { return oscillator_accel(x[0], eps.value(), sel); };
    for (std::int64_t k = 0; k < n; ++k) {
        advance(q, p, h, spec.scheme, accel);
        check_well(q[0], eps, sel);
    }
    z = q[0];
    w = p[0];
}

}  // namespace

void IntegratorSpec::validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("integrator step must be positive");
    if (max_steps < 1) throw DomainError("max_steps must be >= 1");
}

Trajectory<PlanarState> integrate_planar(const PlanarState& s0, FieldStrength eps,
                                         const IntegratorSpec& spec, double duration) {
    spec.validate();
    Arr<2> q{s0.q[0], s0.q[1]};
    Arr<2> p{s0.p[0], s0.p[1]};
    check_collision(q);
    const std::int64_t n = step_count(duration, spec);
    const double h = n > 0 ? duration / static_cast<double>(n) : 0.0;
    const double h0 = hamiltonian(s0, eps);

    Trajectory<PlanarState> traj;
    traj.times.reserve(n + 1);
    traj.states.reserve(n + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(s0);
    const auto accel = [&](const Arr<2>& x) {
        check_collision(x);
        const Vec2 g = potential_gradient(x, eps);
        return Arr<2>{-g[0], -g[1]};
    };
    for (std::int64_t k = 1; k <= n; ++k) {
        advance(q, p, h, spec.scheme, accel);
        check_collision(q);
        const PlanarState s{{q[0], q[1]}, {p[0], p[1]}};
        traj.times.push_back(static_cast<double>(k) * h);
        traj.states.push_back(s);
        traj.energy_drift = std::max(traj.energy_drift, std::abs(hamiltonian(s, eps) - h0));
    }
    return traj;
}

Trajectory<OscillatorState> integrate_oscillator(double z0, double w0, FieldStrength eps,
                                                 OscillatorSelector sel,
                                                 const IntegratorSpec& spec, double duration) {
    spec.validate();
    check_well(z0, eps, sel);
    const std::int64_t n = step_count(duration, spec);
    const double h = n > 0 ? duration / static_cast<double>(n) : 0.0;
    const double e0 = oscillator_energy(z0, w0, eps, sel);

    Trajectory<OscillatorState> traj;
    traj.times.reserve(n + 1);
    traj.states.reserve(n + 1);
    traj.times.push_back(0.0);
    traj.states.push_back({z0, w0});
    Arr<1> q{z0}, p{w0};
    const auto accel = [&](const Arr<1>& x) { return oscillator_accel(x[0], eps.value(), sel); };
    for (std::int64_t k = 1; k <= n; ++k) {
        advance(q, p, h, spec.scheme, accel);
        check_well(q[0], eps, sel);
        traj.times.push_back(static_cast<double>(k) * h);
        traj.states.push_back({q[0], p[0]});
        traj.energy_drift =
            std::max(traj.energy_drift, std::abs(oscillator_energy(q[0], p[0], eps, sel) - e0));
    }
    return traj;
}

RegularizedTrajectory integrate_regularized(const RegularizedState& s0, FieldStrength eps,
                                            const IntegratorSpec& spec, double duration) {
    spec.validate();
    const std::int64_t n = step_count(duration, spec);
    const double h = n > 0 ? duration / static_cast<double>(n) : 0.0;
    const double e0 = regularized_energy(s0, eps);

    RegularizedTrajectory traj;
    traj.times.reserve(n + 1);
    traj.states.reserve(n + 1);
    traj.physical_times.reserve(n + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(s0);
    traj.physical_times.push_back(0.0);

    Arr<2> z{s0.z[0], s0.z[1]};
    Arr<2> w{s0.w[0], s0.w[1]};
    double t = 0.0;
    const auto accel = [&](const Arr<2>& x) { return regularized_accel(x, eps.value()); };
    for (std::int64_t k = 1; k <= n; ++k) {
        const Arr<2> z_prev = z, w_prev = w;
        advance(z, w, h, spec.scheme, accel);
        t += physical_increment(z_prev, w_prev, z, w, h);
        const RegularizedState s{{z[0], z[1]}, {w[0], w[1]}};
        traj.times.push_back(static_cast<double>(k) * h);
        traj.states.push_back(s);
        traj.physical_times.push_back(t);
        traj.energy_drift = std::max(traj.energy_drift, std::abs(regularized_energy(s, eps) - e0));
    }
    return traj;
}

double measure_period(FieldStrength eps, double c, OscillatorSelector sel,
                      const IntegratorSpec& spec) {
    spec.validate();
    if (!(c > 0.0)) throw DomainError("measure_period: c must be positive");
    const double z0 = turning_point(eps, c, sel);

    const double h = spec.step;
    const auto accel = [&](const Arr<1>& x) { return oscillator_accel(x[0], eps.value(), sel); };
    Arr<1> q{z0}, p{0.0};
    double t = 0.0;
    // Starting at the turning point w becomes negative; the orbit closes when
    // w crosses zero downwards again with z > 0.
    for (std::int64_t k = 0; k < spec.max_steps; ++k) {
        Arr<1> q_next = q, p_next = p;
        advance(q_next, p_next, h, spec.scheme, accel);
        check_well(q_next[0], eps, sel);
        if (k > 0 && p[0] > 0.0 && p_next[0] <= 0.0 && q_next[0] > 0.0) {
            double lo = 0.0;
            double hi = h;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                Arr<1> qm = q, pm = p;
                advance(qm, pm, mid, spec.scheme, accel);
                if (pm[0] > 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            return t + 0.5 * (lo + hi);
        }
        q = q_next;
        p = p_next;
        t += h;
    }
    throw NoReturnError("measure_period: no return to the section within max_steps");
}

RegularizedState torus_act(double t1, double t2, const RegularizedState& s, FieldStrength eps,
                           const IntegratorSpec& spec) {
    spec.validate();
    if (!std::isfinite(t1) || !std::isfinite(t2)) throw DomainError("torus_act: non-finite time");
    const EnergySplit e = energy_split(s, eps);
    if (eps.value() > 0.0 && std::abs(s.z[1]) >= 1.0 / std::sqrt(2.0 * eps.value()))
        throw DomainError("torus_act: (z2, w2) is not on the bounded E2 component");
    double z1 = s.z[0], w1 = s.w[0];
    double z2 = s.z[1], w2 = s.w[1];
    advance_oscillator(z1, w1, eps, OscillatorSelector::Plus, spec, t1 * tau1(eps, e.e1));
    advance_oscillator(z2, w2, eps, OscillatorSelector::Minus, spec, t2 * tau2(eps, e.e2));
    return {{z1, z2}, {w1, w2}};
}

double flow_equivalence(const RegularizedState& s0, FieldStrength eps,
                        const IntegratorSpec& spec, double s_duration) {
    spec.validate();
    const double e0 = regularized_energy(s0, eps);
    if (std::abs(e0) > 1e-9)
        throw LevelSetError("flow_equivalence: E(s0) = " + std::to_string(e0) +
                            " is not on the zero level");
    if (conformal_factor(s0) == 0.0)
        throw CollisionError("flow_equivalence: s0 lies over the collision");

    const std::int64_t n = step_count(s_duration, spec);
    if (n == 0) return 0.0;
    const double h = s_duration / static_cast<double>(n);
    const std::int64_t stride = std::max<std::int64_t>(1, n / 200);

    Arr<2> z{s0.z[0], s0.z[1]};
    Arr<2> w{s0.w[0], s0.w[1]};
    const PlanarState start = lc_lift(s0);
    Arr<2> q{start.q[0], start.q[1]};
    Arr<2> p{start.p[0], start.p[1]};
    double t = 0.0;
    double t_planar = 0.0;
    double deviation = 0.0;
    const auto accel = [&](const Arr<2>& x) { return regularized_accel(x, eps.value()); };

    for (std::int64_t k = 1; k <= n; ++k) {
        const Arr<2> z_prev = z, w_prev = w;
        advance(z, w, h, spec.scheme, accel);
        t += physical_increment(z_prev, w_prev, z, w, h);
        if (k % stride != 0 && k != n) continue;

        const RegularizedState s{{z[0], z[1]}, {w[0], w[1]}};
        if (conformal_factor(s) < 2.0 * kCollisionRadius)
            throw CollisionError("flow_equivalence: regularized orbit passed the collision");
        advance_planar(q, p, eps, spec, t - t_planar);
        t_planar = t;
        const PlanarState image = lc_lift(s);
        const double d = std::sqrt(std::pow(image.q[0] - q[0], 2) + std::pow(image.q[1] - q[1], 2) +
                                   std::pow(image.p[0] - p[0], 2) + std::pow(image.p[1] - p[1], 2));
        deviation = std::max(deviation, d);
    }
    return deviation;
}

}  // namespace stark_toric
