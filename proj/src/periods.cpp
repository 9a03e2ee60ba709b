#include "stark_toric/periods.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stark_toric/elliptic.hpp"
#include "stark_toric/errors.hpp"

namespace stark_toric {

namespace {

const double kTwoPow5Half = std::pow(2.0, 2.5);

void require_x(double x, const char* what) {
    if (!(x < 1.0)) throw DomainError(std::string(what) + ": argument must be < 1");
}

void require_energy(FieldStrength eps, double c, OscillatorSelector sel) {
    if (!std::isfinite(c) || c < 0.0)
        throw DomainError("slice energy must be finite and non-negative");
    if (sel == OscillatorSelector::Minus && !(8.0 * c * eps.value() < 1.0))
        throw DomainError("MINUS oscillator needs 8 c eps < 1 (bounded well), got c = " +
                          std::to_string(c) + ", eps = " + std::to_string(eps.value()));
}

// Signed argument of Phi: tau1 uses -8 eps c, tau2 uses +8 eps c.
double phi_argument(FieldStrength eps, double c, OscillatorSelector sel) {
    const double x = 8.0 * eps.value() * c;
    return sel == OscillatorSelector::Plus ? -x : x;
}

}  // namespace

std::string_view to_string(OscillatorSelector sel) {
    return sel == OscillatorSelector::Plus ? "plus" : "minus";
}

double phi(double x) {
    require_x(x, "phi");
    const double s = std::sqrt(1.0 - x);
    // (1 - s)/(1 + s) written as x/(1 + s)^2 to avoid cancellation near 0
    const double m = x / ((1.0 + s) * (1.0 + s));
    return ellip_k(EllipticModulus(m)) / std::sqrt(1.0 + s);
}

double log_phi_d1(double x) {
    require_x(x, "log_phi_d1");
    const double s = std::sqrt(1.0 - x);
    const double one_s = 1.0 + s;
    const double m = x / (one_s * one_s);
    return 1.0 / (4.0 * s * one_s) + log_k_d1(EllipticModulus(m)) / (s * one_s * one_s);
}

double separatrix_energy(FieldStrength eps) {
    return eps.value() > 0.0 ? 1.0 / (8.0 * eps.value())
                             : std::numeric_limits<double>::infinity();
}

double turning_point(FieldStrength eps, double c, OscillatorSelector sel) {
    require_energy(eps, c, sel);
    // z^2 = (-1 + sqrt(1 + 8 c eps)) / (2 eps) = 4c / (1 + sqrt(1 + 8 c eps)),
    // MINUS with eps -> -eps
    const double s = std::sqrt(1.0 - phi_argument(eps, c, sel));
    return std::sqrt(4.0 * c / (1.0 + s));
}

double tau1(FieldStrength eps, double c) {
    require_energy(eps, c, OscillatorSelector::Plus);
    const double s = std::sqrt(1.0 + 8.0 * c * eps.value());
    const double m = (1.0 - s) / (1.0 + s);
    return kTwoPow5Half / std::sqrt(1.0 + s) * ellip_k(EllipticModulus(m));
}

double tau2(FieldStrength eps, double c) {
    require_energy(eps, c, OscillatorSelector::Minus);
    const double s = std::sqrt(1.0 - 8.0 * c * eps.value());
    const double m = (1.0 - s) / (1.0 + s);
    return kTwoPow5Half / std::sqrt(1.0 + s) * ellip_k(EllipticModulus(m));
}

double period(FieldStrength eps, double c, OscillatorSelector sel) {
    return sel == OscillatorSelector::Plus ? tau1(eps, c) : tau2(eps, c);
}

double log_period_d1(FieldStrength eps, double c, OscillatorSelector sel) {
    require_energy(eps, c, sel);
    const double x = phi_argument(eps, c, sel);
    const double chain = sel == OscillatorSelector::Plus ? -8.0 * eps.value() : 8.0 * eps.value();
    return chain * log_phi_d1(x);
}

double period_oracle(FieldStrength eps, double c, OscillatorSelector sel,
                     const QuadratureSpec& spec) {
    require_energy(eps, c, sel);
    const double a = turning_point(eps, c, sel);
    // 2c - z^2 -+ eps z^4 = (A^2 - z^2)(1 +- eps (A^2 + z^2)); with z = A sin(theta)
    // the factor A cos(theta) cancels against sqrt(A^2 - z^2).
    const double sign = sel == OscillatorSelector::Plus ? 1.0 : -1.0;
    const double k = sign * eps.value() * a * a;
    const double quarter = integrate(
        [k](double t) {
            const double s = std::sin(t);
            return 1.0 / std::sqrt(1.0 + k * (1.0 + s * s));
        },
        0.0, std::numbers::pi / 2.0, spec);
    return 4.0 * quarter;
}

}  // namespace stark_toric
