#pragma once

#include <functional>

namespace stark_toric {

/// Tolerances for the adaptive quadrature used by the oracles and the action
/// primitives. A result is accepted when the error estimate is below
/// max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    unsigned max_refinements = 30;

    void validate() const;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Throws ToleranceError if the requested accuracy is not reached within
/// spec.max_refinements levels of bisection.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

}  // namespace stark_toric
