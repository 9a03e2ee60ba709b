#include "stark_toric/levi_civita.hpp"

#include "stark_toric/errors.hpp"

namespace stark_toric {

Vec2 lc_base(const Vec2& z) {
    return {0.5 * (z[0] * z[0] - z[1] * z[1]), z[0] * z[1]};
}

PlanarState lc_lift(const RegularizedState& s) {
    const double r2 = s.z[0] * s.z[0] + s.z[1] * s.z[1];
    if (r2 == 0.0) throw DomainError("lc_lift: z = 0 has no unregularized image");
    // w / conj(z) = w z / |z|^2
    const Vec2 p{(s.w[0] * s.z[0] - s.w[1] * s.z[1]) / r2,
                 (s.w[0] * s.z[1] + s.w[1] * s.z[0]) / r2};
    return {lc_base(s.z), p};
}

double oscillator_energy_plus(double z, double w, FieldStrength eps) {
    const double z2 = z * z;
    return 0.5 * w * w + 0.5 * z2 + 0.5 * eps.value() * z2 * z2;
}

double oscillator_energy_minus(double z, double w, FieldStrength eps) {
    const double z2 = z * z;
    return 0.5 * w * w + 0.5 * z2 - 0.5 * eps.value() * z2 * z2;
}

EnergySplit energy_split(const RegularizedState& s, FieldStrength eps) {
    return {oscillator_energy_plus(s.z[0], s.w[0], eps),
            oscillator_energy_minus(s.z[1], s.w[1], eps)};
}

double regularized_energy(const RegularizedState& s, FieldStrength eps) {
    const EnergySplit e = energy_split(s, eps);
    return e.e1 + e.e2 - 2.0;
}

double conformal_factor(const RegularizedState& s) {
    return s.z[0] * s.z[0] + s.z[1] * s.z[1];
}

std::array<double, 4> to_array(const RegularizedState& s) {
    return {s.z[0], s.w[0], s.z[1], s.w[1]};
}

RegularizedState regularized_from_array(const std::array<double, 4>& v) {
    return {{v[0], v[2]}, {v[1], v[3]}};
}

}  // namespace stark_toric
