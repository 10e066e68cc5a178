#include <doctest.h>

#include <cmath>

#include "mumford/integrate.hpp"
#include "mumford/json_io.hpp"
#include "mumford/rng.hpp"

using namespace mumford;

namespace {
const std::vector<double> kPoint = {1.0, 2.0, 3.0, 5.0};  // the g=1 worked example
}

TEST_CASE("drift stays below 1e-8 over [0,1] at step 1e-3") {
    Trajectory tr = integrate(Family::Mumford, 1, kPoint, {1.0}, 1.0, 1e-3);
    CHECK(!tr.blew_up);
    CHECK(tr.drift < 1e-8);
    CHECK(tr.times.size() == 1001);
}

TEST_CASE("zero direction is a fixed point") {
    Trajectory tr = integrate(Family::Mumford, 1, kPoint, {0.0}, 0.5, 1e-2);
    CHECK(tr.drift == 0.0);
    for (size_t k = 0; k < kPoint.size(); ++k) CHECK(tr.last_state()[k] == kPoint[k]);
}

TEST_CASE("halving the step cuts the endpoint error about 16x") {
    // steps chosen above the double-precision floor of this smooth segment
    auto endpoint = [&](double h) {
        return integrate(Family::Mumford, 1, kPoint, {1.0}, 1.0, h).last_state();
    };
    const auto ref = endpoint(1e-5);
    auto err = [&](const std::vector<double>& x) {
        double m = 0;
        for (size_t i = 0; i < x.size(); ++i) m = std::max(m, std::fabs(x[i] - ref[i]));
        return m;
    };
    const double e1 = err(endpoint(2e-2));
    const double e2 = err(endpoint(1e-2));
    const double ratio = e1 / e2;
    CHECK(ratio > 8.0);
    CHECK(ratio < 32.0);
}

TEST_CASE("drift order slope on a stiff segment is fourth order") {
    const Trajectory probe = integrate(Family::Mumford, 1, kPoint, {1.0}, 20.0, 1e-3);
    REQUIRE(probe.blew_up);
    const double t_end = 0.97 * probe.blowup_time;
    double prev = 0;
    std::vector<double> drifts;
    for (double h : {1e-2, 1e-3, 1e-4})
        drifts.push_back(integrate(Family::Mumford, 1, kPoint, {1.0}, t_end, h).drift);
    (void)prev;
    const double slope01 = std::log10(drifts[0] / drifts[1]);
    const double slope12 = std::log10(drifts[1] / drifts[2]);
    CHECK(slope01 > 3.5);
    CHECK(slope01 < 4.5);
    CHECK(slope12 > 3.5);
    CHECK(slope12 < 4.5);
}

TEST_CASE("commutativity probe") {
    Rng rng(3);
    std::vector<double> p;
    for (int i = 0; i < 7; ++i) p.push_back(0.5 * rng.real());
    CHECK(commutativity_probe(Family::Mumford, 2, p, 1, 2, 0.1, 1e-3) < 1e-8);
    CHECK(commutativity_probe(Family::Mumford, 2, p, 1, 1, 0.1, 1e-3) < 1e-12);
    CHECK(commutativity_probe(Family::Mumford, 2, p, 1, 2, 0.0, 1e-3) == 0.0);
}

TEST_CASE("ny2 constraint conservation") {
    Rng rng(11);
    auto st = random_ny<double>(Family::NYII, 1, rng);
    Trajectory tr = integrate(Family::NYII, 1, st.q, {1.0}, 1.0, 1e-3, st.e);
    REQUIRE(!tr.blew_up);
    const size_t ci = tr.invariant_names.size() - 1;
    REQUIRE(tr.invariant_names[ci] == "constraint");
    double drift = 0;
    for (const auto& inv : tr.invariants)
        drift = std::max(drift, std::fabs(inv[ci] - tr.invariants.front()[ci]));
    CHECK(drift < 1e-10);
}

TEST_CASE("blow-up aborts cleanly with the partial trajectory") {
    // a large initial point reaches the guard quickly under D_1
    std::vector<double> big = {1e9, 1e9, 1e9, 1e9};
    Trajectory tr = integrate(Family::Mumford, 1, big, {1.0}, 10.0, 1e-4);
    CHECK(tr.blew_up);
    CHECK(tr.blowup_time <= 10.0);
    CHECK(!tr.states.empty());
    for (double v : tr.last_state()) CHECK(std::isfinite(v));
}

TEST_CASE("csv round trip") {
    Trajectory tr = integrate(Family::Mumford, 1, kPoint, {1.0}, 0.01, 1e-3);
    const std::string csv = trajectory_csv(tr);
    const Trajectory back = trajectory_from_csv(csv);
    REQUIRE(back.times.size() == tr.times.size());
    REQUIRE(back.coord_names == tr.coord_names);
    REQUIRE(back.invariant_names == tr.invariant_names);
    for (size_t i = 0; i < tr.times.size(); ++i) {
        CHECK(back.times[i] == doctest::Approx(tr.times[i]).epsilon(1e-15));
        for (size_t k = 0; k < tr.states[i].size(); ++k)
            CHECK(back.states[i][k] == doctest::Approx(tr.states[i][k]).epsilon(1e-15));
    }
}
