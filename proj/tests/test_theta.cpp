#include <doctest.h>

#include <cmath>

#include "mumford/phase_space.hpp"
#include "mumford/rng.hpp"
#include "mumford/theta.hpp"

using namespace mumford;

TEST_CASE("theta at the lemniscatic point") {
    // Omega = i, z = 0: 1 + 2 e^{-pi} + 2 e^{-4 pi} + ...
    const CMat omega = {{cplx(0, 1)}};
    const cplx v = theta0({cplx(0)}, omega);
    CHECK(v.real() == doctest::Approx(1.0864348112).epsilon(1e-9));
    CHECK(std::fabs(v.imag()) < 1e-13);
}

TEST_CASE("integer shifts and evenness") {
    const CMat omega = {{cplx(0.21, 1.3)}};
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        const CVec z = {cplx(rng.real(), rng.real(-0.3, 0.3))};
        const cplx base = theta0(z, omega);
        CHECK(std::abs(theta0({z[0] + 1.0}, omega) - base) < 1e-12 * std::abs(base));
        CHECK(std::abs(theta0({-z[0]}, omega) - base) < 1e-12 * std::abs(base));
    }
}

TEST_CASE("quasi-periodicity under Omega shifts") {
    constexpr double pi = 3.14159265358979323846;
    for (const CMat& omega :
         {CMat{{cplx(0.1, 1.1)}},
          CMat{{cplx(0.2, 1.0), cplx(0.05, 0.2)}, {cplx(0.05, 0.2), cplx(-0.1, 1.4)}}}) {
        const int g = static_cast<int>(omega.size());
        Rng rng(5);
        CVec z(static_cast<size_t>(g));
        for (auto& x : z) x = cplx(rng.real(-0.4, 0.4), rng.real(-0.2, 0.2));
        const cplx base = theta0(z, omega);
        for (int j = 0; j < g; ++j) {
            CVec zs = z;
            for (int i = 0; i < g; ++i) zs[static_cast<size_t>(i)] += omega[static_cast<size_t>(i)][static_cast<size_t>(j)];
            const cplx factor =
                std::exp(cplx(0, -pi) * omega[static_cast<size_t>(j)][static_cast<size_t>(j)] -
                         cplx(0, 2 * pi) * z[static_cast<size_t>(j)]);
            CHECK(std::abs(theta0(zs, omega) - factor * base) < 1e-10 * std::abs(base));
        }
    }
}

TEST_CASE("indefinite period matrices are rejected") {
    const CMat bad = {{cplx(0.3, -1.0)}};
    CHECK_THROWS_AS(theta0({cplx(0)}, bad), NonConvergent);
}

TEST_CASE("truncation tolerance is honored") {
    const CMat omega = {{cplx(0.17, 0.9)}};
    const CVec z = {cplx(0.37, 0.21)};
    const std::vector<double> zero = {0.0};
    const cplx loose = theta(z, omega, zero, zero, 1e-8);
    const cplx tight = theta(z, omega, zero, zero, 1e-14);
    CHECK(std::abs(loose - tight) < 1e-8);
}

namespace {
ThetaData pipeline_data(std::uint64_t seed, EllipticData* ed_out = nullptr) {
    Rng rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
        auto p0 = random_point<double>(Family::Mumford, 1, rng);
        try {
            const auto f = spectral_map(p0).f;
            const EllipticData ed = elliptic_from_cubic(f.coeff(2), f.coeff(1), f.coeff(0));
            ThetaData td = theta_data_from_elliptic(ed);
            if (ed_out) *ed_out = ed;
            return td;
        } catch (const Error&) {
        }
    }
    throw Error("pipeline_data: no usable seed");
}
}  // namespace

TEST_CASE("partition of unity on the g=1 pipeline") {
    EllipticData ed;
    const ThetaData td = pipeline_data(21, &ed);
    Rng rng(23);
    int used = 0;
    for (int i = 0; i < 25; ++i) {
        const CVec z = {cplx(rng.real(0, 1), rng.real(0.02, 0.95) * ed.tau.imag())};
        try {
            const CVec lams = lambda_functions(td, z);
            cplx s = 0;
            for (const cplx& l : lams) s += l;
            CHECK(std::abs(s - 1.0) < 1e-8);
            ++used;
        } catch (const DivisorHit&) {
        }
    }
    CHECK(used >= 15);
}

TEST_CASE("lemniscatic-type curve pipeline: y^2 = x^3 - x") {
    const EllipticData ed = elliptic_from_cubic(0.0, -1.0, 0.0);
    const ThetaData td = theta_data_from_elliptic(ed);
    const CVec z = {cplx(0.23, 0.4 * ed.tau.imag())};
    const CVec lams = lambda_functions(td, z);
    cplx s = 0;
    for (const cplx& l : lams) s += l;
    CHECK(std::abs(s - 1.0) < 1e-8);
}

TEST_CASE("u_from_theta is monic of degree g") {
    EllipticData ed;
    const ThetaData td = pipeline_data(31, &ed);
    Rng rng(37);
    int used = 0;
    for (int i = 0; i < 15; ++i) {
        const CVec z = {cplx(rng.real(0, 1), rng.real(0.05, 0.9) * ed.tau.imag())};
        try {
            double defect = 1;
            const UniPoly<double> u = u_from_theta(td, z, &defect);
            CHECK(u.degree() == 1);
            CHECK(u.lead() == 1.0);
            CHECK(defect < 1e-8);
            ++used;
        } catch (const DivisorHit&) {
        } catch (const NonConvergent&) {
        }
    }
    CHECK(used >= 10);
}

TEST_CASE("divisor hits are reported") {
    EllipticData ed;
    const ThetaData td = pipeline_data(41, &ed);
    // theta vanishes at the odd half period (1+tau)/2; aim z + Delta there
    const cplx zero_of_theta = 0.5 + 0.5 * ed.tau;
    const CVec z = {zero_of_theta - td.delta[0]};
    CHECK_THROWS_AS(lambda_functions(td, z), DivisorHit);
}
