#include <doctest.h>

#include "mumford/cohomology.hpp"

using namespace mumford;

TEST_CASE("betti numbers of the affine varieties") {
    CHECK(betti_affine(SystemKind::OddMumford, 2, 2) == 5);   // C(4,2) - C(4,0)
    CHECK(betti_affine(SystemKind::EvenMumford, 1, 1) == 3);  // C(3,1)
    CHECK(betti_affine(SystemKind::PrymI, 1, 0) == 1);
    CHECK(betti_affine(SystemKind::PrymII, 1, 1) == 8);  // 2 C(4,1)
    CHECK(betti_affine(SystemKind::OddMumford, 2, 3) == 0);
    CHECK(betti_affine(SystemKind::OddMumford, 2, -1) == 0);
}

TEST_CASE("stratum formulas") {
    CHECK(betti_stratum(2, 1, 1, StratumVariant::plain) == 4);
    CHECK(betti_stratum(2, 1, 1, StratumVariant::pm) == 5);
    CHECK(betti_stratum(1, 1, 1, StratumVariant::zero_pm) == 4);
    CHECK(betti_stratum(2, 1, 2, StratumVariant::plain) == 0);  // outside 0..r

    CHECK(betti_W(2, 1, 2) == 1);
    CHECK(betti_W(2, 2, 2) == 6);
    for (int k = 0; k <= 3; ++k) CHECK(betti_W(3, 3, k) == binomial(6, k));
}

TEST_CASE("euler characteristics, closed vs alternating") {
    CHECK(euler_char(SystemKind::OddMumford, 1) == -1);
    CHECK(euler_char(SystemKind::PrymI, 1) == -3);
    CHECK(euler_char_W(2, 1) == -2);
    for (SystemKind kind : {SystemKind::OddMumford, SystemKind::EvenMumford, SystemKind::PrymI,
                            SystemKind::PrymII})
        for (int g = 1; g <= 6; ++g)
            CHECK(euler_char_alternating(kind, g) == euler_char(kind, g));
    for (int g = 1; g <= 6; ++g)
        for (int r = 0; r <= g; ++r) CHECK(euler_char_W_alternating(g, r) == euler_char_W(g, r));
}

TEST_CASE("prym II doubles the theta-complement euler number") {
    for (int g = 1; g <= 10; ++g) {
        const BigInt lhs = 2 * binomial(2 * g + 1, g);
        const BigInt rhs = binomial(2 * g + 2, g + 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hilbert oracle, worked values") {
    // odd g=1: -q^{-1/2} + 1 - q^{1/2}
    const QRational odd1 = chi_q_hilbert(SystemKind::OddMumford, 1);
    CHECK(odd1.num() == QLaurent::term(-1, -1) + QLaurent::one() + QLaurent::term(-1, 1));
    CHECK(odd1.is_polynomial());

    // even g=1: -q^{-1} - q
    const QRational even1 = chi_q_hilbert(SystemKind::EvenMumford, 1);
    CHECK(even1.num() == QLaurent::term(-1, -2) + QLaurent::term(-1, 2));

    // prym1 g=1: -q^{-1} - 1 - q
    const QRational p1 = chi_q_hilbert(SystemKind::PrymI, 1);
    CHECK(p1.num() == QLaurent::term(-1, -2) + QLaurent::term(-1, 0) + QLaurent::term(-1, 2));

    // prym2 g=1: -q^{-1}(1+q^2)(1+q+q^2)
    const QRational p2 = chi_q_hilbert(SystemKind::PrymII, 1);
    const QLaurent expect = QLaurent::term(-1, -2) * (QLaurent::one() + QLaurent::term(1, 4)) *
                            (QLaurent::one() + QLaurent::term(1, 2) + QLaurent::term(1, 4));
    CHECK(p2.num() == expect);
    CHECK(p2.limit_at_one() == Rational(-6));
}

TEST_CASE("closed forms equal the oracle for the integer-graded systems") {
    for (SystemKind kind : {SystemKind::EvenMumford, SystemKind::PrymI, SystemKind::PrymII})
        for (int g = 1; g <= 6; ++g) CHECK(chi_q_closed(kind, g) == chi_q_hilbert(kind, g));
}

TEST_CASE("the odd closed form is convention-sensitive") {
    // descending to [1/2] reproduces the printed formula and carries a pole
    for (int g = 1; g <= 4; ++g)
        CHECK(chi_q_closed(SystemKind::OddMumford, g, FactorialConvention::full)
                  .has_pole_at_one());
    // stopping at [3/2] matches the oracle at g = 1 but not beyond
    CHECK(chi_q_closed(SystemKind::OddMumford, 1, FactorialConvention::down_to_half) ==
          chi_q_hilbert(SystemKind::OddMumford, 1));
    CHECK(chi_q_closed(SystemKind::OddMumford, 2, FactorialConvention::down_to_half) !=
          chi_q_hilbert(SystemKind::OddMumford, 2));
    // the two routes differ by exactly prod_{j=1..g} [j - 1/2]_q
    for (int g = 1; g <= 5; ++g) {
        QLaurent corr = QLaurent::one();
        for (int j = 1; j <= g; ++j) corr = corr * QLaurent::q_bracket(2 * j - 1);
        const QRational lhs = chi_q_hilbert(SystemKind::OddMumford, g);
        const QRational rhs = chi_q_closed(SystemKind::OddMumford, g, FactorialConvention::full) *
                              QRational(corr);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q -> 1 limits match the euler characteristics") {
    CHECK(q_euler_limit(SystemKind::OddMumford, 1) == Rational(-1));
    CHECK(q_euler_limit(SystemKind::EvenMumford, 1) == Rational(-2));
    CHECK(q_euler_limit(SystemKind::PrymI, 1) == Rational(-3));
    CHECK(q_euler_limit(SystemKind::PrymII, 1) == Rational(-6));
    CHECK(q_euler_limit(SystemKind::EvenMumford, 2) == Rational(5));
    CHECK(q_euler_limit(SystemKind::PrymII, 2) == Rational(20));
    for (SystemKind kind : {SystemKind::OddMumford, SystemKind::EvenMumford, SystemKind::PrymI,
                            SystemKind::PrymII})
        for (int g = 1; g <= 6; ++g)
            CHECK(q_euler_limit(kind, g) == Rational(euler_char(kind, g), BigInt(1)));
}

TEST_CASE("table generation") {
    const auto rows = cohomology_table(3);
    bool found = false;
    for (const auto& r : rows)
        if (r.kind == "odd" && r.g == 2 && r.k == 2) {
            found = true;
            CHECK(r.betti == "5");
            CHECK(r.euler == "2");
        }
    CHECK(found);
}
