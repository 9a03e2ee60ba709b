#include "stark_toric/stark_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stark_toric/errors.hpp"

namespace stark_toric {

FieldStrength::FieldStrength(double eps) : eps_(eps) {
    if (!std::isfinite(eps) || eps < 0.0)
        throw DomainError("field strength must be finite and non-negative, got " +
                          std::to_string(eps));
}

void FieldStrength::require_toric() const {
    if (!toric())
        throw RegimeError("field strength must satisfy 0 < eps < 1/16, got " +
                          std::to_string(eps_));
}

void FieldStrength::require_positive() const {
    if (!(eps_ > 0.0)) throw DomainError("field strength must be positive");
}

double potential(const Vec2& q, FieldStrength eps) {
    const double r = norm(q);
    if (r == 0.0) throw DomainError("potential: q = 0 is the collision point");
    return -1.0 / r + eps.value() * q[0];
}

double hamiltonian(const PlanarState& s, FieldStrength eps) {
    return 0.5 * (s.p[0] * s.p[0] + s.p[1] * s.p[1]) + potential(s.q, eps);
}

Vec2 potential_gradient(const Vec2& q, FieldStrength eps) {
    const double r = norm(q);
    if (r == 0.0) throw DomainError("potential_gradient: q = 0 is the collision point");
    const double r3 = r * r * r;
    return {q[0] / r3 + eps.value(), q[1] / r3};
}

PlanarState critical_point(FieldStrength eps) {
    eps.require_positive();
    return {{-1.0 / std::sqrt(eps.value()), 0.0}, {0.0, 0.0}};
}

double critical_value(FieldStrength eps) {
    eps.require_positive();
    return -2.0 * std::sqrt(eps.value());
}

PlanarState rescale_state(double a, const PlanarState& s) {
    if (!(a > 0.0)) throw DomainError("rescale_state: a must be positive");
    const double inv_sqrt = 1.0 / std::sqrt(a);
    return {{a * s.q[0], a * s.q[1]}, {s.p[0] * inv_sqrt, s.p[1] * inv_sqrt}};
}

std::string_view to_string(HillClass c) {
    switch (c) {
        case HillClass::Bounded: return "BOUNDED";
        case HillClass::Unbounded: return "UNBOUNDED";
        case HillClass::Forbidden: return "FORBIDDEN";
        case HillClass::CollisionLocus: return "COLLISION_LOCUS";
    }
    return "?";
}

HillClass hill_classify(const Vec2& q, FieldStrength eps) {
    eps.require_toric();
    const double r = norm(q);
    if (r == 0.0) return HillClass::CollisionLocus;
    if (potential(q, eps) > kEnergyLevel) return HillClass::Forbidden;
    return r < 1.0 / std::sqrt(eps.value()) ? HillClass::Bounded : HillClass::Unbounded;
}

double HillRaster::default_radius(double eps) {
    return std::max(4.0 / std::sqrt(eps), 1.0 / eps);
}

HillRaster::HillRaster(FieldStrength eps, int cells_per_side)
    : eps_(eps.value()), n_(cells_per_side), radius_(default_radius(eps.value())) {
    eps.require_toric();
    if (cells_per_side < 2) throw DomainError("HillRaster: need at least 2 cells per side");
    step_ = 2.0 * radius_ / n_;
    labels_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kForbidden);

    for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < n_; ++i) {
            const Vec2 c = center(i, j);
            const double r = norm(c);
            auto& slot = labels_[index(i, j)];
            if (r > radius_) {
                slot = kOutside;
            } else if (r == 0.0 || potential(c, eps) <= kEnergyLevel) {
                slot = 0;  // allowed, not yet labelled
            }
        }
    }

    // 4-connected flood fill; labels start at 1
    std::vector<std::pair<int, int>> stack;
    std::int32_t next = 1;
    for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < n_; ++i) {
            if (labels_[index(i, j)] != 0) continue;
            labels_[index(i, j)] = next;
            stack.emplace_back(i, j);
            while (!stack.empty()) {
                const auto [ci, cj] = stack.back();
                stack.pop_back();
                constexpr int di[4] = {1, -1, 0, 0};
                constexpr int dj[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int ni = ci + di[k];
                    const int nj = cj + dj[k];
                    if (ni < 0 || nj < 0 || ni >= n_ || nj >= n_) continue;
                    auto& slot = labels_[index(ni, nj)];
                    if (slot != 0) continue;
                    slot = next;
                    stack.emplace_back(ni, nj);
                }
            }
            ++next;
        }
    }
    components_ = next - 1;

    // seed of the bounded component: the cell containing (0.01, 0)
    const auto cell_of = [&](double x) {
        return std::clamp(static_cast<int>(std::floor((x + radius_) / step_)), 0, n_ - 1);
    };
    bounded_label_ = labels_[index(cell_of(0.01), cell_of(0.0))];
}

Vec2 HillRaster::center(int i, int j) const {
    return {-radius_ + (i + 0.5) * step_, -radius_ + (j + 0.5) * step_};
}

HillClass HillRaster::cell_class(int i, int j) const {
    const std::int32_t l = label(i, j);
    if (l == kOutside || l == kForbidden) return HillClass::Forbidden;
    return l == bounded_label_ ? HillClass::Bounded : HillClass::Unbounded;
}

HillComponents hill_components(FieldStrength eps, int max_cells_per_side) {
    eps.require_toric();
    int n = 256;
    int previous = HillRaster(eps, n).component_count();
    while (2 * n <= max_cells_per_side) {
        n *= 2;
        const int current = HillRaster(eps, n).component_count();
        if (current == previous) return {current, n};
        previous = current;
    }
    return {previous, n};
}

}  // namespace stark_toric
