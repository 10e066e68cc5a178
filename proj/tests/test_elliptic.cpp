#include <doctest.h>

#include <cmath>

#include "mumford/elliptic.hpp"
#include "mumford/phase_space.hpp"
#include "mumford/rng.hpp"

using namespace mumford;

TEST_CASE("invariants of x^3 - x") {
    const EllipticData ed = elliptic_from_cubic(0.0, -1.0, 0.0);
    CHECK(ed.g2 == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::fabs(ed.g3) < 1e-15);
    CHECK(ed.tau.imag() > 0);
}

TEST_CASE("multiple roots are rejected") {
    CHECK_THROWS_AS(elliptic_from_cubic(0.0, 0.0, 0.0), MultipleRoot);      // x^3
    CHECK_THROWS_AS(elliptic_from_cubic(-2.0, 1.0, 0.0), MultipleRoot);     // x(x-1)^2
}

TEST_CASE("wp satisfies its differential equation") {
    for (auto [f1, f2, f3] : {std::array<double, 3>{0.0, -1.0, 0.0},
                              std::array<double, 3>{2.0, -3.0, 1.5},
                              std::array<double, 3>{0.0, 0.0, 1.0}}) {
        const EllipticData ed = elliptic_from_cubic(f1, f2, f3);
        Rng rng(5);
        for (int i = 0; i < 100; ++i) {
            const cplx z = rng.real(0.03, 0.97) * ed.w1 + rng.real(0.03, 0.97) * ed.w2;
            try {
                const double scale = std::max(1.0, std::pow(std::abs(wp(z, ed)), 3));
                CHECK(wp_ode_residual(z, ed) / scale < 1e-10);
            } catch (const LatticePole&) {
            }
        }
    }
}

TEST_CASE("periodicity") {
    const EllipticData ed = elliptic_from_cubic(1.0, -2.0, 0.5);
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const cplx z = cplx(rng.real(0.1, 0.9), rng.real(0.05, 0.4));
        const cplx base = wp(z, ed);
        CHECK(std::abs(wp(z + ed.w1, ed) - base) < 1e-9 * (std::abs(base) + 1));
        CHECK(std::abs(wp(z + ed.w2, ed) - base) < 1e-9 * (std::abs(base) + 1));
        CHECK(std::abs(wp(-z, ed) - base) < 1e-9 * (std::abs(base) + 1));
        CHECK(std::abs(wp_prime(-z, ed) + wp_prime(z, ed)) < 1e-9);
    }
}

TEST_CASE("series head near the origin") {
    const EllipticData ed = elliptic_from_cubic(0.0, -1.0, 0.0);
    const cplx z(0.05, 0.013);
    const cplx head = 1.0 / (z * z) + ed.g2 * z * z / 20.0 + ed.g3 * z * z * z * z / 28.0;
    CHECK(std::abs(wp(z, ed) - head) < 1e-10);
}

TEST_CASE("half periods hit the cubic roots") {
    const EllipticData ed = elliptic_from_cubic(2.0, -3.0, 1.5);
    for (const cplx hp : {ed.omega1, ed.omega2, ed.omega1 + ed.omega2}) {
        const cplx val = wp(hp, ed);
        double best = 1e300;
        for (const auto& ek : ed.e) best = std::min(best, std::abs(val - ek));
        CHECK(best < 1e-8 * (std::abs(val) + 1));
    }
}

TEST_CASE("lattice points are poles") {
    const EllipticData ed = elliptic_from_cubic(0.0, -1.0, 0.0);
    CHECK_THROWS_AS(wp(cplx(0, 0), ed), LatticePole);
    CHECK_THROWS_AS(wp(ed.w1, ed), LatticePole);
}

TEST_CASE("wp inversion round trips") {
    const EllipticData ed = elliptic_from_cubic(1.0, -2.0, 0.5);
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        const cplx z = cplx(rng.real(0.08, 0.45), rng.real(0.05, 0.35));
        cplx p, pp;
        try {
            wp_pair(z, ed, p, pp);
        } catch (const LatticePole&) {
            continue;
        }
        const cplx back = wp_invert(ed, p, pp);
        cplx p2, pp2;
        wp_pair(back, ed, p2, pp2);
        CHECK(std::abs(p2 - p) < 1e-8 * (std::abs(p) + 1));
        CHECK(std::abs(pp2 - pp) < 1e-6 * (std::abs(pp) + 1));
    }
}

TEST_CASE("curves from seeded phase points work across the random family") {
    Rng rng(17);
    int built = 0;
    for (int t = 0; t < 20; ++t) {
        auto p0 = random_point<double>(Family::Mumford, 1, rng);
        try {
            const auto f = spectral_map(p0).f;
            const EllipticData ed = elliptic_from_cubic(f.coeff(2), f.coeff(1), f.coeff(0));
            const cplx z = 0.31 * ed.w1 + 0.17 * ed.w2;
            CHECK(wp_ode_residual(z, ed) <
                  1e-9 * std::max(1.0, std::pow(std::abs(wp(z, ed)), 3)));
            ++built;
        } catch (const MultipleRoot&) {
        }
    }
    CHECK(built >= 15);
}
