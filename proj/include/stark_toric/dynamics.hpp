#pragma once

#include <cstdint>
#include <vector>

#include "stark_toric/periods.hpp"
#include "stark_toric/types.hpp"

namespace stark_toric {

enum class Scheme { Leapfrog2, Yoshida4 };

struct IntegratorSpec {
    double step = 1e-3;
    Scheme scheme = Scheme::Yoshida4;
    std::int64_t max_steps = 10'000'000;

    void validate() const;
};

/// Collision cutoff of the unregularized integrator.
inline constexpr double kCollisionRadius = 1e-3;

template <class State>
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    double energy_drift = 0.0;  // max |H - H0| over the recorded states
};

struct OscillatorState {
    double z = 0.0;
    double w = 0.0;
};

/// Regularized run: `times` is the regularized time s, `physical_times` the
/// accumulated t(s) = int_0^s |z|^2.
struct RegularizedTrajectory : Trajectory<RegularizedState> {
    std::vector<double> physical_times;
};

/// Flow of H_eps for the given duration. Throws CollisionError once
/// |q| < kCollisionRadius.
Trajectory<PlanarState> integrate_planar(const PlanarState& s0, FieldStrength eps,
                                         const IntegratorSpec& spec, double duration);

/// Flow of E1 (PLUS) or E2 (MINUS): z' = w, w' = -z -+ 2 eps z^3.
/// MINUS throws EscapeError if |z| reaches the saddle at 1/sqrt(2 eps).
Trajectory<OscillatorState> integrate_oscillator(double z0, double w0, FieldStrength eps,
                                                 OscillatorSelector sel,
                                                 const IntegratorSpec& spec, double duration);

/// Flow of the regularized energy E_eps = E1 + E2 - 2.
RegularizedTrajectory integrate_regularized(const RegularizedState& s0, FieldStrength eps,
                                            const IntegratorSpec& spec, double duration);

/// First return time to {w = 0, z > 0} starting from (turning_point, 0),
/// crossing refined by bisection to 1e-10.
double measure_period(FieldStrength eps, double c, OscillatorSelector sel,
                      const IntegratorSpec& spec = {});

/// Flows (z1, w1) by E1 for t1 * tau1(E1) and (z2, w2) by E2 for t2 * tau2(E2).
RegularizedState torus_act(double t1, double t2, const RegularizedState& s, FieldStrength eps,
                           const IntegratorSpec& spec = {});

/// Max over checkpoints of |L(state_E(s)) - state_H(t(s))| in (q, p), where
/// state_E follows E_eps in regularized time from s0 and state_H follows H_eps
/// in physical time from L(s0). Requires |E_eps(s0)| <= 1e-9.
double flow_equivalence(const RegularizedState& s0, FieldStrength eps,
                        const IntegratorSpec& spec, double s_duration);

}  // namespace stark_toric
