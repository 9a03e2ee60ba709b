#pragma once

#include <array>
#include <cmath>

namespace stark_toric {

using Vec2 = std::array<double, 2>;

inline double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }

/// Strength eps of the constant field. eps = 0 is accepted as the Kepler
/// limit; operations that need the toric regime call require_toric().
class FieldStrength {
public:
    explicit FieldStrength(double eps);
    double value() const { return eps_; }

    bool toric() const { return eps_ > 0.0 && eps_ < kCritical; }
    /// Throws RegimeError unless 0 < eps < 1/16.
    void require_toric() const;
    /// Throws DomainError unless eps > 0.
    void require_positive() const;

    static constexpr double kCritical = 1.0 / 16.0;

private:
    double eps_;
};

/// Point (q, p) of T*(R^2 \ {0}).
struct PlanarState {
    Vec2 q{};
    Vec2 p{};
};

/// Point (z, w) of T*C, complex coordinates stored as real pairs.
struct RegularizedState {
    Vec2 z{};
    Vec2 w{};
};

}  // namespace stark_toric
