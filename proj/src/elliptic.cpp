#include "stark_toric/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stark_toric/errors.hpp"

namespace stark_toric {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAgmMaxIter = 60;
constexpr double kAgmTol = 1e-15;
constexpr double kSeriesRadius = 1e-4;

// AGM for m in [0, 1).
EllipticPair agm_nonneg(double m) {
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    // sum of 2^(n-1) c_n^2, c_0^2 = m
    double sum = 0.5 * m;
    double weight = 0.5;
    for (int i = 0; i < kAgmMaxIter; ++i) {
        if (std::abs(a - b) <= kAgmTol * a) break;
        const double c = 0.5 * (a - b);
        const double a_next = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = a_next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    const double k = kPi / (2.0 * a);
    return {k, k * (1.0 - sum)};
}

}  // namespace

EllipticModulus::EllipticModulus(double m) : m_(m) {
    if (!(m < 1.0))
        throw DomainError("elliptic modulus must satisfy m < 1, got " + std::to_string(m));
}

EllipticPair ellip_ke(EllipticModulus mod) {
    const double m = mod.value();
    if (m >= 0.0) return agm_nonneg(m);
    // K(m) = K(m/(m-1)) / sqrt(1-m),  E(m) = sqrt(1-m) E(m/(m-1))
    const double s = std::sqrt(1.0 - m);
    const EllipticPair t = agm_nonneg(m / (m - 1.0));
    return {t.k / s, t.e * s};
}

double ellip_k(EllipticModulus m) {
    const double k = ellip_ke(m).k;
    if (!std::isfinite(k)) throw NumericalError("ellip_k: result not representable");
    return k;
}

double ellip_k_oracle(EllipticModulus mod, const QuadratureSpec& spec) {
    const double m = mod.value();
    return integrate(
        [m](double t) {
            const double s = std::sin(t);
            return 1.0 / std::sqrt(1.0 - m * s * s);
        },
        0.0, kPi / 2.0, spec);
}

double ellip_k_d1(EllipticModulus mod) {
    const double m = mod.value();
    if (std::abs(m) < kSeriesRadius) {
        // K(m) = (pi/2) sum_n a_n^2 m^n with a_n = (2n-1)!!/(2n)!!
        double a = 1.0;
        double mpow = 1.0;
        double sum = 0.0;
        for (int n = 1; n <= 8; ++n) {
            a *= (2.0 * n - 1.0) / (2.0 * n);
            sum += n * a * a * mpow;
            mpow *= m;
        }
        return 0.5 * kPi * sum;
    }
    const EllipticPair ke = ellip_ke(mod);
    return (ke.e - (1.0 - m) * ke.k) / (2.0 * m * (1.0 - m));
}

double ellip_k_d1_oracle(EllipticModulus mod, const QuadratureSpec& spec) {
    const double m = mod.value();
    return integrate(
        [m](double t) {
            const double s2 = std::sin(t) * std::sin(t);
            const double d = 1.0 - m * s2;
            return 0.5 * s2 / (d * std::sqrt(d));
        },
        0.0, kPi / 2.0, spec);
}

double ellip_k_d2(EllipticModulus mod, const QuadratureSpec& spec) {
    const double m = mod.value();
    return integrate(
        [m](double t) {
            const double s2 = std::sin(t) * std::sin(t);
            const double d = 1.0 - m * s2;
            return 0.75 * s2 * s2 / (d * d * std::sqrt(d));
        },
        0.0, kPi / 2.0, spec);
}

double log_k_d1(EllipticModulus m) { return ellip_k_d1(m) / ellip_k(m); }

double interpolation_gap(EllipticModulus m) {
    const double k = ellip_k(m);
    const double d1 = ellip_k_d1(m);
    return k * ellip_k_d2(m) - 3.0 * d1 * d1;
}

}  // namespace stark_toric
