#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stark_toric/dynamics.hpp"
#include "stark_toric/errors.hpp"
#include "stark_toric/levi_civita.hpp"
#include "stark_toric/stark_model.hpp"

using namespace stark_toric;

TEST_CASE("lc_base") {
    CHECK(lc_base({1.0, 0.0}) == Vec2{0.5, 0.0});
    CHECK(lc_base({0.0, 1.0}) == Vec2{-0.5, 0.0});
    CHECK(lc_base({0.0, -1.0}) == lc_base({0.0, 1.0}));
    CHECK(lc_base({1.0, 1.0}) == Vec2{0.0, 1.0});

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 z{u(rng), u(rng)};
        CHECK(lc_base(z) == lc_base({-z[0], -z[1]}));
    }
}

TEST_CASE("lc_lift") {
    const PlanarState a = lc_lift({{1.0, 0.0}, {0.0, 0.0}});
    CHECK(a.q == Vec2{0.5, 0.0});
    CHECK(a.p == Vec2{0.0, 0.0});
    const PlanarState b = lc_lift({{1.0, 0.0}, {2.0, 0.0}});
    CHECK(b.p == Vec2{2.0, 0.0});
    CHECK_THROWS_AS(lc_lift({{0.0, 0.0}, {1.0, 0.0}}), DomainError);
}

TEST_CASE("lc_lift is symplectic") {
    // Jacobian of (z1, z2, w1, w2) -> (q1, q2, p1, p2) by five-point differences.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::array<double, 4> x0{u(rng), u(rng), u(rng), u(rng)};
        if (std::hypot(x0[0], x0[1]) < 0.3) continue;
        double jac[4][4];
        for (int col = 0; col < 4; ++col) {
            for (int row = 0; row < 4; ++row) {
                const auto f = [&](double t) {
                    auto x = x0;
                    x[col] = t;
                    const PlanarState s = lc_lift({{x[0], x[1]}, {x[2], x[3]}});
                    const double out[4] = {s.q[0], s.q[1], s.p[0], s.p[1]};
                    return out[row];
                };
                jac[row][col] = oracle::five_point_d1(f, x0[col], 1e-3);
            }
        }
        // Omega = [[0, I], [-I, 0]]; check J^T Omega J = Omega
        const auto omega = [](int i, int j) {
            if (j == i + 2) return 1.0;
            if (i == j + 2) return -1.0;
            return 0.0;
        };
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                double v = 0.0;
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l) v += jac[k][i] * omega(k, l) * jac[l][j];
                CHECK(std::abs(v - omega(i, j)) < 1e-10);
            }
        }
    }
}

TEST_CASE("regularized energy") {
    const FieldStrength eps(0.05);
    CHECK(regularized_energy({{1.0, 0.0}, {0.0, 0.0}}, eps) == doctest::Approx(-1.475).epsilon(1e-15));

    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int i = 0; i < 500; ++i) {
        // random direction scaled to the radius-2 sphere: E = 0 at eps = 0
        std::array<double, 4> v{g(rng), g(rng), g(rng), g(rng)};
        const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
        for (auto& x : v) x *= 2.0 / r;
        const RegularizedState s = regularized_from_array(v);
        CHECK(std::abs(regularized_energy(s, FieldStrength(0.0))) < 1e-14);
        for (auto& x : v) x *= 1.01;
        CHECK(regularized_energy(regularized_from_array(v), FieldStrength(0.0)) > 0.0);
    }
}

TEST_CASE("separation and pullback identities") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0), ue(0.0, 0.2);
    for (int i = 0; i < 2000; ++i) {
        const RegularizedState s{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const FieldStrength eps(ue(rng));
        const EnergySplit e = energy_split(s, eps);
        CHECK(e.e1 >= 0.0);
        CHECK(e.e1 + e.e2 - 2.0 == regularized_energy(s, eps));
        const double r = conformal_factor(s);
        if (r < 1e-2) continue;
        const double pulled = r * (hamiltonian(lc_lift(s), eps) + 0.5);
        const double direct = regularized_energy(s, eps);
        CHECK(std::abs(direct - pulled) <= 1e-12 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("energy_split and critical points of E2") {
    const double eps = 0.05;
    const FieldStrength f(eps);
    const EnergySplit zero = energy_split({}, f);
    CHECK(zero.e1 == 0.0);
    CHECK(zero.e2 == 0.0);
    CHECK(regularized_energy({}, f) == -2.0);

    const double saddle = 1.0 / std::sqrt(2.0 * eps);
    CHECK(energy_split({{0.0, saddle}, {0.0, 0.0}}, f).e2 ==
          doctest::Approx(1.0 / (8.0 * eps)).epsilon(1e-14));

    for (double z : {0.0, saddle, -saddle}) {
        CAPTURE(z);
        const auto e2z = [&](double x) { return oscillator_energy_minus(x, 0.0, f); };
        const auto e2w = [&](double x) { return oscillator_energy_minus(z, x, f); };
        CHECK(std::abs(oracle::five_point_d1(e2z, z, 1e-3)) < 1e-8);
        CHECK(std::abs(oracle::five_point_d1(e2w, 0.0, 1e-3)) < 1e-8);
    }
}

TEST_CASE("conformal factor") {
    CHECK(conformal_factor({}) == 0.0);
    CHECK(conformal_factor({{3.0, 4.0}, {1.0, 1.0}}) == 25.0);
}

TEST_CASE("E1 and E2 are conserved separately along the E flow") {
    const FieldStrength eps(0.05);
    const RegularizedState s0{{1.1, 0.4}, {0.3, -0.7}};
    const EnergySplit e0 = energy_split(s0, eps);
    const auto traj = integrate_regularized(s0, eps, {}, 20.0);
    double drift1 = 0.0, drift2 = 0.0;
    for (const auto& s : traj.states) {
        const EnergySplit e = energy_split(s, eps);
        drift1 = std::max(drift1, std::abs(e.e1 - e0.e1));
        drift2 = std::max(drift2, std::abs(e.e2 - e0.e2));
    }
    CHECK(drift1 < 1e-9);
    CHECK(drift2 < 1e-9);
}
