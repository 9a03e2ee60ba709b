#include "stark_toric/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stark_toric/errors.hpp"

namespace stark_toric {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("QuadratureSpec: tolerances must be strictly positive");
    if (max_refinements < 1)
        throw DomainError("QuadratureSpec: max_refinements must be >= 1");
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    spec.validate();
    if (a == b) return 0.0;
    // Deepen one level at a time: Boost halves its absolute threshold per level,
    // so a single deep call on a noise-limited integrand costs 2^depth panels.
    double best_error = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (unsigned depth = 0; depth <= spec.max_refinements; ++depth) {
        double error = 0.0;
        double l1 = 0.0;
        const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            f, a, b, depth, spec.rel_tol, &error, &l1);
        if (!std::isfinite(value)) throw ToleranceError("integrate: non-finite result");
        const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
        if (error <= target) return value;
        if (error < 0.5 * best_error) {
            best_error = error;
            stalled = 0;
        } else if (++stalled >= 3) {
            break;
        }
    }
    throw ToleranceError("integrate: error estimate " + std::to_string(best_error) +
                         " above tolerance after " + std::to_string(spec.max_refinements) +
                         " refinements");
}

}  // namespace stark_toric
