#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stark_toric/errors.hpp"
#include "stark_toric/stark_model.hpp"

using namespace stark_toric;

TEST_CASE("potential and hamiltonian") {
    const FieldStrength eps(0.05);
    CHECK(potential({1.0, 0.0}, eps) == doctest::Approx(-0.95).epsilon(1e-15));
    CHECK(potential({0.0, 1.0}, eps) == -1.0);
    CHECK(potential({0.0, 1.0}, FieldStrength(0.3)) == -1.0);
    CHECK(potential({-1.0 / std::sqrt(0.05), 0.0}, eps) ==
          doctest::Approx(-2.0 * std::sqrt(0.05)).epsilon(1e-15));
    CHECK_THROWS_AS(potential({0.0, 0.0}, eps), DomainError);

    CHECK(hamiltonian({{1.0, 0.0}, {0.0, 0.0}}, eps) == doctest::Approx(-0.95).epsilon(1e-15));
    CHECK(hamiltonian(critical_point(eps), eps) == doctest::Approx(-2.0 * std::sqrt(0.05)));
    CHECK(hamiltonian(critical_point(FieldStrength(1.0 / 16)), FieldStrength(1.0 / 16)) ==
          doctest::Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS(FieldStrength(-0.1), DomainError);
}

TEST_CASE("critical point and value") {
    CHECK(critical_point(FieldStrength(1.0 / 16)).q[0] == -4.0);
    CHECK(critical_point(FieldStrength(0.01)).q[0] == doctest::Approx(-10.0).epsilon(1e-15));
    CHECK(critical_value(FieldStrength(1.0 / 16)) == -0.5);
    CHECK(critical_value(FieldStrength(0.25)) == -1.0);
    CHECK(critical_value(FieldStrength(0.04)) == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK_THROWS_AS(critical_point(FieldStrength(0.0)), DomainError);

    const FieldStrength eps(0.05);
    const Vec2 q = critical_point(eps).q;
    const auto v1 = [&](double x) { return potential({x, q[1]}, eps); };
    const auto v2 = [&](double y) { return potential({q[0], y}, eps); };
    CHECK(std::abs(oracle::central_d1(v1, q[0], 1e-5)) < 1e-6);
    CHECK(std::abs(oracle::central_d1(v2, q[1], 1e-5)) < 1e-6);

    for (double e : {0.001, 0.02, 0.05, 0.0625, 0.3}) {
        const FieldStrength f(e);
        CHECK(critical_value(f) == doctest::Approx(potential(critical_point(f).q, f)).epsilon(1e-15));
    }
}

TEST_CASE("rescaling") {
    const PlanarState s{{1.0, 0.0}, {0.0, 0.0}};
    const PlanarState id = rescale_state(1.0, s);
    CHECK(id.q == s.q);
    CHECK(id.p == s.p);
    CHECK(hamiltonian(rescale_state(4.0, s), FieldStrength(0.05)) == doctest::Approx(-0.05));
    CHECK(0.25 * hamiltonian(s, FieldStrength(0.8)) == doctest::Approx(-0.05));
    CHECK_THROWS_AS(rescale_state(0.0, s), DomainError);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0), ua(0.2, 5.0);
    for (int i = 0; i < 200; ++i) {
        const PlanarState t{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const double a = ua(rng), b = ua(rng), eps = 0.05;
        const double lhs = hamiltonian(rescale_state(a, t), FieldStrength(eps));
        const double rhs = hamiltonian(t, FieldStrength(a * a * eps)) / a;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));

        const PlanarState ab = rescale_state(a, rescale_state(b, t));
        const PlanarState direct = rescale_state(a * b, t);
        for (int k = 0; k < 2; ++k) {
            CHECK(ab.q[k] == doctest::Approx(direct.q[k]).epsilon(1e-14));
            CHECK(ab.p[k] == doctest::Approx(direct.p[k]).epsilon(1e-14));
        }
        const Vec2 scaled = critical_point(FieldStrength(a * a * eps)).q;
        CHECK(scaled[0] == doctest::Approx(critical_point(FieldStrength(eps)).q[0] / a).epsilon(1e-14));
    }
}

TEST_CASE("hill_classify examples") {
    const FieldStrength eps(0.05);
    CHECK(hill_classify({0.1, 0.0}, eps) == HillClass::Bounded);
    CHECK(hill_classify({0.0, 100.0}, eps) == HillClass::Forbidden);
    CHECK(hill_classify({0.0, 0.0}, eps) == HillClass::CollisionLocus);
    // V(-1/sqrt(eps) - 10, 0) = -1/14.47 - 0.72 <= -1/2: allowed, outer side
    CHECK(hill_classify({-1.0 / std::sqrt(0.05) - 10.0, 0.0}, eps) == HillClass::Unbounded);
    CHECK_THROWS_AS(hill_classify({0.1, 0.0}, FieldStrength(0.2)), RegimeError);
    CHECK_THROWS_AS(hill_classify({0.1, 0.0}, FieldStrength(1.0 / 16)), RegimeError);
}

TEST_CASE("flood fill agrees with the circle criterion") {
    for (double e : {0.01, 0.05, 0.06}) {
        CAPTURE(e);
        const FieldStrength eps(e);
        const HillRaster raster(eps, 1024);
        CHECK(raster.component_count() == 2);
        CHECK(raster.cell_class(512, 512) == HillClass::Bounded);  // cell touching the origin
        int checked = 0;
        for (int j = 0; j < 1024; j += 3) {
            for (int i = 0; i < 1024; i += 3) {
                if (!raster.inside(i, j)) continue;
                const Vec2 c = raster.center(i, j);
                const HillClass expected = hill_classify(c, eps);
                const HillClass got = raster.cell_class(i, j);
                if (expected == HillClass::CollisionLocus) continue;
                REQUIRE(got == expected);
                ++checked;
            }
        }
        CHECK(checked > 10000);
    }
    CHECK_THROWS_AS(HillRaster(FieldStrength(0.2), 64), RegimeError);
}

TEST_CASE("two allowed components at grid step <= 0.01") {
    const FieldStrength eps(0.05);
    const int n = static_cast<int>(std::ceil(2.0 * HillRaster::default_radius(0.05) / 0.01));
    const HillRaster raster(eps, n);
    CHECK(raster.step() <= 0.01);
    CHECK(raster.component_count() == 2);
}

TEST_CASE("adaptive component count") {
    for (double e : {0.01, 0.05, 0.0624}) {
        CAPTURE(e);
        CHECK(hill_components(FieldStrength(e)).count == 2);
    }
}
