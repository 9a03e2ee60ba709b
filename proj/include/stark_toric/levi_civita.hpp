#pragma once

#include <array>

#include "stark_toric/types.hpp"

namespace stark_toric {

/// Values of the two separated Hamiltonians E1(z1, w1) and E2(z2, w2).
struct EnergySplit {
    double e1;
    double e2;
};

/// l(z) = z^2 / 2 in real coordinates: (z1^2 - z2^2)/2, z1 z2.
Vec2 lc_base(const Vec2& z);

/// L(z, w) = (z^2 / 2, w / conj(z)). Throws DomainError at z = 0.
PlanarState lc_lift(const RegularizedState& s);

/// E1(z, w) = w^2/2 + z^2/2 + eps z^4 / 2.
double oscillator_energy_plus(double z, double w, FieldStrength eps);
/// E2(z, w) = w^2/2 + z^2/2 - eps z^4 / 2.
double oscillator_energy_minus(double z, double w, FieldStrength eps);

EnergySplit energy_split(const RegularizedState& s, FieldStrength eps);

/// E = E1 + E2 - 2, smooth on all of T*C.
double regularized_energy(const RegularizedState& s, FieldStrength eps);

/// R(z, w) = |z|^2.
double conformal_factor(const RegularizedState& s);

/// Packs (z1, w1, z2, w2) and the reverse.
std::array<double, 4> to_array(const RegularizedState& s);
RegularizedState regularized_from_array(const std::array<double, 4>& v);

}  // namespace stark_toric
