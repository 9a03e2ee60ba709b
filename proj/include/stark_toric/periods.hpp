#pragma once

#include <string_view>

#include "stark_toric/quadrature.hpp"
#include "stark_toric/types.hpp"

namespace stark_toric {

/// PLUS is E1 (quartic term +eps z^4/2), MINUS is E2 (-eps z^4/2).
enum class OscillatorSelector { Plus, Minus };

std::string_view to_string(OscillatorSelector sel);

/// Phi(x) = K((1 - sqrt(1-x)) / (1 + sqrt(1-x))) / sqrt(1 + sqrt(1-x)), x < 1.
/// Both periods factor through it: tau1(c) = 2^{5/2} Phi(-8 eps c) and
/// tau2(c) = 2^{5/2} Phi(8 eps c).
double phi(double x);

/// (ln Phi)'(x). Positive and strictly increasing on (-inf, 1).
double log_phi_d1(double x);

/// Largest |z| on the bounded orbit of energy c (w = 0 there).
/// MINUS returns the inner root, inside the saddles at +-1/sqrt(2 eps).
double turning_point(FieldStrength eps, double c, OscillatorSelector sel);

/// Energy bound of the bounded MINUS well, 1/(8 eps); +inf for eps = 0.
double separatrix_energy(FieldStrength eps);

/// Period of the E1 oscillator at energy c >= 0.
double tau1(FieldStrength eps, double c);

/// Period of the bounded E2 oscillator at energy 0 <= c < 1/(8 eps).
double tau2(FieldStrength eps, double c);

double period(FieldStrength eps, double c, OscillatorSelector sel);

/// d/dc ln tau(c), through log_phi_d1 and the chain-rule factor -+8 eps.
double log_period_d1(FieldStrength eps, double c, OscillatorSelector sel);

/// Four times the quarter-period integral int_0^A dz / sqrt(2c - z^2 -+ eps z^4),
/// evaluated by quadrature after z = A sin(theta). Independent of K.
double period_oracle(FieldStrength eps, double c, OscillatorSelector sel,
                     const QuadratureSpec& spec = {});

}  // namespace stark_toric
