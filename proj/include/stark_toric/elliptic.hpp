#pragma once

#include "stark_toric/quadrature.hpp"

namespace stark_toric {

/// Parameter m of the complete elliptic integrals, m < 1.
class EllipticModulus {
public:
    explicit EllipticModulus(double m);
    double value() const { return m_; }

private:
    double m_;
};

/// K(m) and E(m) from one AGM sweep, m in (-inf, 1).
struct EllipticPair {
    double k;
    double e;
};
EllipticPair ellip_ke(EllipticModulus m);

/// K(m) = int_0^1 dz / sqrt((1 - z^2)(1 - m z^2)).
double ellip_k(EllipticModulus m);

/// Quadrature of the defining integral in the theta variable (z = sin theta).
/// Independent of the AGM path; used as an oracle.
double ellip_k_oracle(EllipticModulus m, const QuadratureSpec& spec = {});

/// dK/dm. Closed form in K and E; Maclaurin series for |m| < 1e-4.
double ellip_k_d1(EllipticModulus m);

/// dK/dm by quadrature of (1/2) int z^2 / sqrt((1-z^2)(1-m z^2)^3).
double ellip_k_d1_oracle(EllipticModulus m, const QuadratureSpec& spec = {});

/// d^2K/dm^2 by quadrature of (3/4) int z^4 / sqrt((1-z^2)(1-m z^2)^5).
double ellip_k_d2(EllipticModulus m, const QuadratureSpec& spec = {});

/// (ln K)'(m) = K'(m) / K(m).
double log_k_d1(EllipticModulus m);

/// K(m) K''(m) - 3 K'(m)^2, non-negative by Cauchy-Schwarz.
double interpolation_gap(EllipticModulus m);

}  // namespace stark_toric
