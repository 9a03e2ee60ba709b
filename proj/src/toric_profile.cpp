#include "stark_toric/toric_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stark_toric/errors.hpp"

namespace stark_toric {

namespace {

constexpr double kSliceMax = 2.0;

void require_slice(double c) {
    if (!(c >= 0.0 && c <= kSliceMax))
        throw DomainError("slice energy must lie in [0, 2], got " + std::to_string(c));
}

double period_integral(FieldStrength eps, double a, double b, OscillatorSelector sel,
                       const QuadratureSpec& spec) {
    return integrate([&](double t) { return period(eps, t, sel); }, a, b, spec);
}

double grid_point(int i, int n) {
    return kSliceMax * static_cast<double>(i) / static_cast<double>(n - 1);
}

// Largest step keeping the finite-difference stencil at c inside [0, 2] and
// clear of the logarithmic singularity of tau2 at 1/(8 eps).
double fd_step(FieldStrength eps, double c, double grid_spacing) {
    double h = std::min(1e-3, grid_spacing / 4.0);
    h = std::min(h, (separatrix_energy(eps) - c) / 20.0);
    return h;
}

}  // namespace

double action_T(FieldStrength eps, double c, OscillatorSelector sel, const QuadratureSpec& spec) {
    eps.require_toric();
    require_slice(c);
    return period_integral(eps, 0.0, c, sel, spec);
}

MomentImagePoint moment_image(FieldStrength eps, double c, const QuadratureSpec& spec) {
    eps.require_toric();
    require_slice(c);
    return {action_T(eps, kSliceMax - c, OscillatorSelector::Plus, spec),
            action_T(eps, c, OscillatorSelector::Minus, spec), c};
}

double profile_slope(FieldStrength eps, double c) {
    eps.require_toric();
    require_slice(c);
    return -tau2(eps, c) / tau1(eps, kSliceMax - c);
}

double profile_second_derivative(FieldStrength eps, double c) {
    eps.require_toric();
    require_slice(c);
    const double e = eps.value();
    const double t1 = tau1(eps, kSliceMax - c);
    const double bracket =
        8.0 * e * (log_phi_d1(8.0 * e * c) - log_phi_d1(8.0 * e * c - 16.0 * e));
    return tau2(eps, c) / (t1 * t1) * bracket;
}

ToricProfile profile_sample(FieldStrength eps, int n, const QuadratureSpec& spec) {
    eps.require_toric();
    if (n < 2) throw DomainError("profile_sample: need n >= 2");

    // Cumulative actions on the grid: t1[j] = T1(c_j), t2[j] = T2(c_j).
    std::vector<double> t1(n, 0.0);
    std::vector<double> t2(n, 0.0);
    for (int j = 1; j < n; ++j) {
        const double a = grid_point(j - 1, n);
        const double b = grid_point(j, n);
        t1[j] = t1[j - 1] + period_integral(eps, a, b, OscillatorSelector::Plus, spec);
        t2[j] = t2[j - 1] + period_integral(eps, a, b, OscillatorSelector::Minus, spec);
    }

    ToricProfile profile;
    profile.eps = eps.value();
    profile.samples.reserve(n);
    profile.slopes.reserve(n);
    profile.second_derivs.reserve(n);
    // increasing x <=> decreasing c; 2 - c_j is grid point n-1-j
    for (int j = n - 1; j >= 0; --j) {
        const double c = grid_point(j, n);
        profile.samples.push_back({t1[n - 1 - j], t2[j], c});
        profile.slopes.push_back(profile_slope(eps, c));
        profile.second_derivs.push_back(profile_second_derivative(eps, c));
    }

    for (std::size_t i = 1; i < profile.samples.size(); ++i) {
        const auto& prev = profile.samples[i - 1];
        const auto& cur = profile.samples[i];
        if (!(cur.x > prev.x) || !(cur.y < prev.y))
            throw InvariantError("profile_sample: samples are not a strictly decreasing graph at c = " +
                                 std::to_string(cur.c));
    }
    return profile;
}

double curvature_finite_difference(FieldStrength eps, double c, double h,
                                   const QuadratureSpec& spec) {
    eps.require_toric();
    if (!(h > 0.0) || c - 2.0 * h < 0.0 || c + 2.0 * h > kSliceMax)
        throw DomainError("curvature_finite_difference: stencil leaves [0, 2]");
    // Increments relative to the centre avoid subtracting two large actions.
    const auto dx = [&](int k) {
        // x(c) = T1(2 - c), so x(c + kh) - x(c) = -int_{2-c-kh}^{2-c} tau1
        return -period_integral(eps, kSliceMax - c - k * h, kSliceMax - c,
                                OscillatorSelector::Plus, spec);
    };
    const auto dy = [&](int k) {
        return period_integral(eps, c, c + k * h, OscillatorSelector::Minus, spec);
    };
    const double x1 = dx(1), x2 = dx(2), xm1 = dx(-1), xm2 = dx(-2);
    const double y1 = dy(1), y2 = dy(2), ym1 = dy(-1), ym2 = dy(-2);

    const double xc = (-x2 + 8.0 * x1 - 8.0 * xm1 + xm2) / (12.0 * h);
    const double yc = (-y2 + 8.0 * y1 - 8.0 * ym1 + ym2) / (12.0 * h);
    const double xcc = (-x2 + 16.0 * x1 + 16.0 * xm1 - xm2) / (12.0 * h * h);
    const double ycc = (-y2 + 16.0 * y1 + 16.0 * ym1 - ym2) / (12.0 * h * h);
    return (ycc * xc - yc * xcc) / (xc * xc * xc);
}

ConvexityCertificate verify_convexity(FieldStrength eps, int n, double tol) {
    eps.require_toric();
    if (n < 2) throw DomainError("verify_convexity: need n >= 2");
    if (!(tol > 0.0)) throw DomainError("verify_convexity: tol must be positive");

    ConvexityCertificate cert;
    cert.eps = eps.value();
    cert.tol = tol;
    cert.c_grid.resize(n);
    cert.f_second.resize(n);
    cert.min_f_second = std::numeric_limits<double>::infinity();
    const double spacing = kSliceMax / (n - 1);

    for (int i = 0; i < n; ++i) {
        const double c = grid_point(i, n);
        cert.c_grid[i] = c;
        cert.f_second[i] = profile_second_derivative(eps, c);
        cert.min_f_second = std::min(cert.min_f_second, cert.f_second[i]);
    }
    for (int i = 1; i + 1 < n; ++i) {
        const double c = cert.c_grid[i];
        const double fd = curvature_finite_difference(eps, c, fd_step(eps, c, spacing));
        double residual = std::abs(fd - cert.f_second[i]) / std::abs(cert.f_second[i]);
        if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();
        cert.max_fd_residual = std::max(cert.max_fd_residual, residual);
        ++cert.fd_points;
    }
    cert.pass = cert.min_f_second > 0.0 && cert.max_fd_residual <= tol;
    return cert;
}

}  // namespace stark_toric
