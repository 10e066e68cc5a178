#include <doctest.h>

#include "mumford/bipoly.hpp"
#include "mumford/rng.hpp"
#include "mumford/unipoly.hpp"

using namespace mumford;
using R = Rational;
using P = UniPoly<R>;

namespace {
P x_plus(long c) { return P{R(c), R(1)}; }
}

TEST_CASE("polynomial ring arithmetic") {
    // (x+2)(x^2+x) = x^3+3x^2+2x
    const P a = x_plus(2);
    const P b{R(0), R(1), R(1)};
    CHECK(a * b == P{R(0), R(2), R(3), R(1)});

    CHECK(P{R(0), R(0), R(0), R(1)} + P() == P{R(0), R(0), R(0), R(1)});

    const P diff = x_plus(1) - x_plus(1);
    CHECK(diff.is_zero());
    CHECK(diff.coeffs().empty());
    CHECK(diff.degree() == -1);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(42);
    auto rand_poly = [&](int deg) {
        std::vector<R> c;
        for (int i = 0; i <= deg; ++i) c.push_back(rng.rational());
        return P(std::move(c));
    };
    for (int trial = 0; trial < 30; ++trial) {
        const P a = rand_poly(static_cast<int>(rng.uniform_int(0, 5)));
        const P b = rand_poly(static_cast<int>(rng.uniform_int(0, 5)));
        const P c = rand_poly(static_cast<int>(rng.uniform_int(0, 5)));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("shift and eval") {
    const P p{R(1), R(-3), R(0), R(2)};  // 2x^3 - 3x + 1
    const R s(2, 3);
    const P shifted = p.shift(s);
    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        const R x = rng.rational();
        CHECK(shifted.eval(x) == p.eval(x + s));
    }
}

TEST_CASE("exact bivariate quotient examples") {
    using B = BiPoly<R>;
    const P x{R(0), R(1)};
    const P one = P::constant(R(1));
    const B div = B::outer(x, one) - B::outer(one, x);  // x1 - x2

    // n = (x1^2+1) x2 - x1 (x2^2+1), d = x1-x2  ->  x1 x2 - 1
    const P x2p1{R(1), R(0), R(1)};
    const B n = B::outer(x2p1, x) - B::outer(x, x2p1);
    const B q = exact_bivariate_quotient(n, div);
    B expect = B::outer(x, x) - B::outer(one, one);
    CHECK(q == expect);

    // x1^2 - x2^2 over x1 - x2 -> x1 + x2
    const P xsq{R(0), R(0), R(1)};
    const B n2 = B::outer(xsq, one) - B::outer(one, xsq);
    CHECK(exact_bivariate_quotient(n2, div) == B::outer(x, one) + B::outer(one, x));

    // parity case: x2 u(x1) v(x2) - x1 v(x1) u(x2) with u even, v odd divides x1^2 - x2^2
    const P u{R(3), R(0), R(1)};  // x^2 + 3
    const P v{R(0), R(2)};        // 2x
    const B n3 = B::outer(u, v).shifted(0, 1) - B::outer(v, u).shifted(1, 0);
    const B div2 = B::outer(xsq, one) - B::outer(one, xsq);
    CHECK_NOTHROW(exact_bivariate_quotient(n3, div2));

    // non-divisible input is rejected
    const B bad = B::outer(one, one);
    CHECK_THROWS_AS(exact_bivariate_quotient(bad, div), NonDivisible);
}

TEST_CASE("quotient inverts multiplication") {
    using B = BiPoly<R>;
    Rng rng(7);
    const P x{R(0), R(1)};
    const P one = P::constant(R(1));
    for (int trial = 0; trial < 20; ++trial) {
        B a = B::zero();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                B term = B::outer(P::x_pow(i, rng.rational()), P::x_pow(j, R(1)));
                a = a + term;
            }
        for (const B& d : {B::outer(x, one) - B::outer(one, x),
                           B::outer(P{R(0), R(0), R(1)}, one) - B::outer(one, P{R(0), R(0), R(1)})}) {
            // build n = a * d through row convolution of the two representations
            B n = B::zero();
            d.for_each([&](int i, int j, const R& c) {
                B shifted = a.shifted(i, j) * c;
                n = n + shifted;
            });
            CHECK(exact_bivariate_quotient(n, d) == a);
        }
    }
}

TEST_CASE("float-mode divisibility tolerance") {
    using Bd = BiPoly<double>;
    using Pd = UniPoly<double>;
    const Pd x{0.0, 1.0};
    const Pd one = Pd::constant(1.0);
    const Bd div = Bd::outer(x, one) - Bd::outer(one, x);
    Bd n = Bd::outer(Pd{0.0, 0.0, 1.0}, one) - Bd::outer(one, Pd{0.0, 0.0, 1.0});
    CHECK_NOTHROW(exact_bivariate_quotient(n, div));
    // a relative perturbation far above 1e-9 must be rejected
    Bd bad = n + Bd::outer(one, one) * 1e-4;
    CHECK_THROWS_AS(exact_bivariate_quotient(bad, div), NonDivisible);
}
