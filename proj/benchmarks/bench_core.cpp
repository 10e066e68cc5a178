#include <benchmark/benchmark.h>

#include "mumford/cohomology.hpp"
#include "mumford/integrate.hpp"
#include "mumford/rng.hpp"
#include "mumford/theta.hpp"
#include "mumford/verify.hpp"

using namespace mumford;

static void FrameExactMumford(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    Rng rng(1);
    const auto p = random_point<Rational>(Family::Mumford, g, rng);
    for (auto _ : state) {
        auto fr = frame(p);
        benchmark::DoNotOptimize(fr);
    }
}
BENCHMARK(FrameExactMumford)->Arg(1)->Arg(2)->Arg(3);

static void FrameExactPrymII(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    Rng rng(2);
    const auto p = random_point<Rational>(Family::PrymII, g, rng);
    for (auto _ : state) {
        auto fr = frame(p);
        benchmark::DoNotOptimize(fr);
    }
}
BENCHMARK(FrameExactPrymII)->Arg(1)->Arg(2)->Arg(3);

static void FrameFloatMumford(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    Rng rng(3);
    const auto p = random_point<double>(Family::Mumford, g, rng);
    for (auto _ : state) {
        auto fr = frame(p);
        benchmark::DoNotOptimize(fr);
    }
}
BENCHMARK(FrameFloatMumford)->Arg(1)->Arg(2)->Arg(3);

static void LieBracket(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    Rng rng(4);
    const auto flat = random_point<Rational>(Family::Mumford, g, rng).flatten();
    for (auto _ : state) {
        auto br = lie_bracket(Family::Mumford, g, flat, 1, 2);
        benchmark::DoNotOptimize(br);
    }
}
BENCHMARK(LieBracket)->Arg(2)->Arg(3);

static void ChiQHilbert(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto chi = chi_q_hilbert(SystemKind::OddMumford, g);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(ChiQHilbert)->Arg(3)->Arg(6);

static void ThetaEval(benchmark::State& state) {
    const CMat omega = {{cplx(0.2, 1.0), cplx(0.05, 0.2)}, {cplx(0.05, 0.2), cplx(-0.1, 1.4)}};
    const CVec z = {cplx(0.3, 0.1), cplx(-0.2, 0.05)};
    for (auto _ : state) {
        auto v = theta0(z, omega);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(ThetaEval);

static void WpEval(benchmark::State& state) {
    const EllipticData ed = elliptic_from_cubic(1.0, -2.0, 0.5);
    const cplx z = 0.31 * ed.w1 + 0.17 * ed.w2;
    for (auto _ : state) {
        auto v = wp(z, ed);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(WpEval);

static void Rk4Mumford(benchmark::State& state) {
    const std::vector<double> p0 = {1.0, 2.0, 3.0, 5.0};
    for (auto _ : state) {
        auto tr = integrate(Family::Mumford, 1, p0, {1.0}, 0.1, 1e-3);
        benchmark::DoNotOptimize(tr);
    }
}
BENCHMARK(Rk4Mumford);

BENCHMARK_MAIN();
