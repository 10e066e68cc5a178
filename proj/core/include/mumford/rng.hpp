#pragma once

#include <cstdint>

#include "mumford/lax_ny.hpp"
#include "mumford/phase_space.hpp"

namespace mumford {

/// Deterministic splitmix64 generator; the seed alone fixes every sampled
/// point so reports reproduce across machines.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform integer in [lo, hi]
    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// generic-point sampling rule: numerator uniform in [-10, 10] \ {0},
    /// denominator uniform in [1, 10]
    Rational rational() {
        long num = 0;
        while (num == 0) num = uniform_int(-10, 10);
        const long den = uniform_int(1, 10);
        return Rational(num, den);
    }

    double real(double lo = -1.0, double hi = 1.0) {
        const double u = static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
        return lo + u * (hi - lo);
    }

    template <class S>
    S scalar() {
        if constexpr (is_exact_scalar_v<S>)
            return rational();
        else
            return real();
    }

  private:
    std::uint64_t state_;
};

template <class S>
MumfordLikePoint<S> random_point(Family kind, int g, Rng& rng) {
    auto p = MumfordLikePoint<S>::make(kind, g);
    for (auto& a : p.u) a = rng.scalar<S>();
    for (auto& a : p.v) a = rng.scalar<S>();
    for (auto& a : p.w) a = rng.scalar<S>();
    return p;
}

template <class S>
DLaxPoint<S> random_dlax(Family variant, int g, Rng& rng, bool nonzero_b0 = true) {
    auto p = DLaxPoint<S>::make(variant, g);
    p.a_half = rng.scalar<S>();
    for (auto& a : p.a_tail) a = rng.scalar<S>();
    for (auto& a : p.b_tail) a = rng.scalar<S>();
    for (auto& a : p.c_tail) a = rng.scalar<S>();
    for (auto& a : p.d_tail) a = rng.scalar<S>();
    if (variant == Family::DLaxII) {
        p.b0 = rng.scalar<S>();
        while (nonzero_b0 && scalar_is_zero(p.b0)) p.b0 = rng.scalar<S>();
    }
    return p;
}

template <class S>
NYState<S> random_ny(Family variant, int g, Rng& rng, bool zero_e = false) {
    auto s = NYState<S>::make(variant, g);
    for (auto& a : s.q) a = rng.scalar<S>();
    if (!zero_e)
        for (auto& a : s.e) a = rng.scalar<S>();
    if (variant == Family::NYII) {
        // repair the last entry so the alternating constraint holds
        S sum = scalar_traits<S>::zero();
        for (int k = 1; k <= s.n(); ++k) {
            if (k == s.n()) continue;
            if (k % 2 == 0)
                sum += s.qc(k);
            else
                sum -= s.qc(k);
        }
        // n() is even, so the last index contributes with +
        s.q.back() = -sum;
    }
    return s;
}

template <class S>
ChainState<S> random_chain(int n, Rng& rng) {
    ChainState<S> s;
    s.qc.resize(static_cast<size_t>(n));
    s.e.resize(static_cast<size_t>(n));
    for (auto& a : s.qc) a = rng.scalar<S>();
    for (auto& a : s.e) a = rng.scalar<S>();
    return s;
}

}  // namespace mumford
