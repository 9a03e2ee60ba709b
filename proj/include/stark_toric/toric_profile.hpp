#pragma once

#include <vector>

#include "stark_toric/periods.hpp"
#include "stark_toric/quadrature.hpp"
#include "stark_toric/types.hpp"

namespace stark_toric {

/// Default accuracy of the action primitives.
inline QuadratureSpec action_quadrature() { return {1e-10, 1e-12, 30}; }

/// T(c) = int_0^c tau(b) db for tau = tau1 (PLUS) or tau2 (MINUS), c in [0, 2].
double action_T(FieldStrength eps, double c, OscillatorSelector sel,
                const QuadratureSpec& spec = action_quadrature());

/// Point (T1(2 - c), T2(c)) of the moment image.
struct MomentImagePoint {
    double x;
    double y;
    double c;
};

MomentImagePoint moment_image(FieldStrength eps, double c,
                              const QuadratureSpec& spec = action_quadrature());

/// f'(T1(2 - c)) = -tau2(c) / tau1(2 - c).
double profile_slope(FieldStrength eps, double c);

/// f''(T1(2 - c)) = tau2(c) / tau1(2 - c)^2 * ((ln tau2)'(c) + (ln tau1)'(2 - c)),
/// with the bracket evaluated as 8 eps ((ln Phi)'(8 eps c) - (ln Phi)'(8 eps c - 16 eps)).
double profile_second_derivative(FieldStrength eps, double c);

/// Graph of f sampled on a uniform c grid, ordered by increasing x
/// (decreasing c). slopes[i] and second_derivs[i] belong to samples[i].
struct ToricProfile {
    double eps;
    std::vector<MomentImagePoint> samples;
    std::vector<double> slopes;
    std::vector<double> second_derivs;
};

/// n >= 2 samples of c over [0, 2]. Actions are accumulated panel by panel so
/// neighbouring samples share all but one quadrature. Throws InvariantError if
/// x is not strictly increasing or y not strictly decreasing.
ToricProfile profile_sample(FieldStrength eps, int n,
                            const QuadratureSpec& spec = action_quadrature());

/// Second derivative of the moment-image curve at c from actions alone: five
/// point central differences of x(c) and y(c) with step h, combined as
/// (y'' x' - y' x'') / x'^3. Needs c - 2h >= 0 and c + 2h <= 2.
double curvature_finite_difference(FieldStrength eps, double c, double h,
                                   const QuadratureSpec& spec = action_quadrature());

struct ConvexityCertificate {
    static constexpr int kSchema = 1;

    double eps = 0.0;
    std::vector<double> c_grid;
    std::vector<double> f_second;  // analytic f'' on c_grid
    double min_f_second = 0.0;
    double max_fd_residual = 0.0;  // relative, interior points only
    int fd_points = 0;
    double tol = 0.0;
    bool pass = false;
};

/// Evaluates the analytic f'' on a uniform grid of n points over [0, 2] and
/// cross-checks every interior point against curvature_finite_difference.
/// pass <=> min f'' > 0 and every relative residual <= tol.
ConvexityCertificate verify_convexity(FieldStrength eps, int n, double tol);

}  // namespace stark_toric
