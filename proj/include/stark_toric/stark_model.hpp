#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "stark_toric/types.hpp"

namespace stark_toric {

/// V(q) = -1/|q| + eps q1.
double potential(const Vec2& q, FieldStrength eps);

/// H(q, p) = |p|^2 / 2 + V(q).
double hamiltonian(const PlanarState& s, FieldStrength eps);

/// Gradient of V, used by the planar integrator.
Vec2 potential_gradient(const Vec2& q, FieldStrength eps);

/// The saddle (-1/sqrt(eps), 0, 0, 0).
PlanarState critical_point(FieldStrength eps);

/// -2 sqrt(eps).
double critical_value(FieldStrength eps);

/// (q, p) -> (a q, p / sqrt(a)). Satisfies H_eps(a q, p/sqrt(a)) = H_{a^2 eps}(q, p) / a.
PlanarState rescale_state(double a, const PlanarState& s);

/// Energy level of the Hill's region.
inline constexpr double kEnergyLevel = -0.5;

enum class HillClass { Bounded, Unbounded, Forbidden, CollisionLocus };

std::string_view to_string(HillClass c);

/// Classifies q against {V <= -1/2}. For 0 < eps < 1/16 the circle
/// |q| = 1/sqrt(eps) is forbidden (V >= -2 sqrt(eps) > -1/2 on it), so
/// allowed points inside it form the bounded component and allowed points
/// outside it the unbounded one. q = 0 is the collision locus.
HillClass hill_classify(const Vec2& q, FieldStrength eps);

/// Flood-fill labelling of {V <= -1/2} on a square grid of cell centres
/// restricted to the disk of radius `radius` around the origin.
class HillRaster {
public:
    static constexpr std::int32_t kForbidden = -1;
    static constexpr std::int32_t kOutside = -2;

    HillRaster(FieldStrength eps, int cells_per_side);

    double eps() const { return eps_; }
    int cells_per_side() const { return n_; }
    double radius() const { return radius_; }
    double step() const { return step_; }
    int component_count() const { return components_; }

    Vec2 center(int i, int j) const;
    bool inside(int i, int j) const { return label(i, j) != kOutside; }
    std::int32_t label(int i, int j) const { return labels_[index(i, j)]; }
    /// Label of the component seeded at (0.01, 0).
    std::int32_t bounded_label() const { return bounded_label_; }
    /// B/U/F classification of a cell; the origin cell belongs to B.
    HillClass cell_class(int i, int j) const;

    /// Disk radius used for a given eps: large enough to contain the inner
    /// edge of the unbounded component.
    static double default_radius(double eps);

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(i);
    }

    double eps_;
    int n_;
    double radius_;
    double step_;
    std::vector<std::int32_t> labels_;
    int components_ = 0;
    std::int32_t bounded_label_ = kForbidden;
};

/// Component count of the allowed region, refining the grid (256, 512, ...)
/// until two consecutive resolutions agree. Requires the toric regime.
struct HillComponents {
    int count;
    int cells_per_side;
};
HillComponents hill_components(FieldStrength eps, int max_cells_per_side = 4096);

}  // namespace stark_toric
