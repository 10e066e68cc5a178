#include "mumford/cohomology.hpp"

#include "mumford/errors.hpp"

namespace mumford {

const char* system_kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::OddMumford: return "odd";
        case SystemKind::EvenMumford: return "even";
        case SystemKind::PrymI: return "prym1";
        case SystemKind::PrymII: return "prym2";
    }
    return "?";
}

SystemKind system_kind_from_name(const std::string& name) {
    if (name == "odd" || name == "mumford") return SystemKind::OddMumford;
    if (name == "even" || name == "even-mumford") return SystemKind::EvenMumford;
    if (name == "prym1") return SystemKind::PrymI;
    if (name == "prym2") return SystemKind::PrymII;
    throw Error("unknown system kind: " + name);
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt betti_affine(SystemKind kind, int g, int k) {
    if (k < 0 || k > g) return 0;
    switch (kind) {
        case SystemKind::OddMumford: return binomial(2 * g, k) - binomial(2 * g, k - 2);
        case SystemKind::EvenMumford: return binomial(2 * g + 1, k) - binomial(2 * g + 1, k - 2);
        case SystemKind::PrymI: return binomial(2 * g + 2, k);
        case SystemKind::PrymII: return 2 * binomial(2 * g + 2, k);
    }
    return 0;
}

BigInt betti_stratum(int g, int r, int k, StratumVariant variant) {
    if (r < 0 || r > g) throw Error("betti_stratum: r out of range");
    if (k < 0 || k > r) return 0;
    switch (variant) {
        case StratumVariant::plain: return binomial(2 * g, k) - binomial(2 * g, k - 2);
        case StratumVariant::pm: return binomial(2 * g + 1, k) - binomial(2 * g + 1, k - 2);
        case StratumVariant::zero_pm: return binomial(2 * g + 2, k);
    }
    return 0;
}

BigInt betti_W(int g, int r, int k) {
    if (r < 0 || r > g) throw Error("betti_W: r out of range");
    if (k < 0 || k > 2 * r) return 0;
    if (k <= r) return binomial(2 * g, k);
    return binomial(2 * g, 2 * r - k);
}

BigInt euler_char(SystemKind kind, int g) {
    const int sign = (g % 2 == 0) ? 1 : -1;
    switch (kind) {
        case SystemKind::OddMumford: return sign * (binomial(2 * g, g) - binomial(2 * g, g - 1));
        case SystemKind::EvenMumford:
            return sign * (binomial(2 * g + 1, g) - binomial(2 * g + 1, g - 1));
        case SystemKind::PrymI: return sign * binomial(2 * g + 1, g);
        case SystemKind::PrymII: return sign * 2 * binomial(2 * g + 1, g);
    }
    return 0;
}

BigInt euler_char_alternating(SystemKind kind, int g) {
    BigInt s = 0;
    for (int k = 0; k <= g; ++k) {
        const BigInt b = betti_affine(kind, g, k);
        s += (k % 2 == 0) ? b : -b;
    }
    return s;
}

BigInt euler_char_W(int g, int r) {
    const int sign = (r % 2 == 0) ? 1 : -1;
    return sign * (binomial(2 * g - 2, r) - binomial(2 * g - 2, r - 2));
}

BigInt euler_char_W_alternating(int g, int r) {
    BigInt s = 0;
    for (int k = 0; k <= 2 * r; ++k) {
        const BigInt b = betti_W(g, r, k);
        s += (k % 2 == 0) ? b : -b;
    }
    return s;
}

GradedPresentation graded_presentation(SystemKind kind, int g) {
    GradedPresentation p;
    auto range2 = [](int lo, int hi) {  // integer degrees lo..hi, doubled
        std::vector<int> v;
        for (int i = lo; i <= hi; ++i) v.push_back(2 * i);
        return v;
    };
    auto append = [](std::vector<int>& dst, const std::vector<int>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
    };
    switch (kind) {
        case SystemKind::OddMumford:
            append(p.generator_deg2, range2(1, g));  // u_1..u_g
            for (int i = 1; i <= g; ++i) p.generator_deg2.push_back(2 * i + 1);  // v_{i+1/2}
            append(p.generator_deg2, range2(1, g + 1));  // w
            append(p.relation_deg2, range2(1, 2 * g + 1));
            for (int i = 1; i <= g; ++i) p.timeform_deg2.push_back(-(2 * i - 1));  // deg dt_i = -i+1/2
            break;
        case SystemKind::EvenMumford:
            append(p.generator_deg2, range2(1, g));
            append(p.generator_deg2, range2(2, g + 1));
            append(p.generator_deg2, range2(1, g + 2));
            append(p.relation_deg2, range2(1, 2 * g + 2));
            for (int i = 1; i <= g; ++i) p.timeform_deg2.push_back(-2 * i);
            break;
        case SystemKind::PrymI:
            append(p.generator_deg2, range2(1, g));
            append(p.generator_deg2, range2(1, g));
            append(p.generator_deg2, range2(1, g + 1));
            append(p.relation_deg2, range2(1, 2 * g + 1));
            for (int i = 1; i <= g; ++i) p.timeform_deg2.push_back(-2 * i);
            break;
        case SystemKind::PrymII:
            append(p.generator_deg2, range2(1, g));
            append(p.generator_deg2, range2(1, g + 1));
            append(p.generator_deg2, range2(1, g + 1));
            append(p.relation_deg2, range2(1, 2 * g + 2));
            for (int i = 1; i <= g; ++i) p.timeform_deg2.push_back(-2 * i);
            break;
    }
    return p;
}

QRational chi_q_hilbert(SystemKind kind, int g) {
    if (g < 1) throw Error("chi_q_hilbert: g must be >= 1");
    const GradedPresentation p = graded_presentation(kind, g);
    QLaurent num = QLaurent::one();
    for (int d : p.relation_deg2) num = num * QLaurent::q_bracket(d);
    for (int d : p.timeform_deg2) num = num * (QLaurent::one() - QLaurent::term(1, d));
    QLaurent den = QLaurent::one();
    for (int d : p.generator_deg2) den = den * QLaurent::q_bracket(d);
    return QRational(num, den);
}

QRational chi_q_closed(SystemKind kind, int g, FactorialConvention conv) {
    if (g < 1) throw Error("chi_q_closed: g must be >= 1");
    const int sign = (g % 2 == 0) ? 1 : -1;
    QLaurent num, den;
    int qpow2 = 0;  // doubled exponent of the q-power prefactor
    switch (kind) {
        case SystemKind::OddMumford:
            // (-1)^g q^{-g^2/2} [1/2] [2g+1]! / ([g+1/2]! [g]! [g+1]!)
            qpow2 = -g * g;
            num = QLaurent::q_bracket(1) * q_factorial(2 * (2 * g + 1));
            den = q_factorial(2 * g + 1, conv) * q_factorial(2 * g) * q_factorial(2 * (g + 1));
            break;
        case SystemKind::EvenMumford:
            // (-1)^g q^{-g(g+1)/2} [1] [2g+2]! / ([g+1]! [g+2]!)
            qpow2 = -g * (g + 1);
            num = QLaurent::q_bracket(2) * q_factorial(2 * (2 * g + 2));
            den = q_factorial(2 * (g + 1)) * q_factorial(2 * (g + 2));
            break;
        case SystemKind::PrymI:
            qpow2 = -g * (g + 1);
            num = q_factorial(2 * (2 * g + 1));
            den = q_factorial(2 * g) * q_factorial(2 * (g + 1));
            break;
        case SystemKind::PrymII:
            qpow2 = -g * (g + 1);
            num = q_factorial(2 * (2 * g + 2));
            den = q_factorial(2 * (g + 1)) * q_factorial(2 * (g + 1));
            break;
    }
    num = num * QLaurent::term(sign, qpow2);
    return QRational(num, den);
}

Rational q_euler_limit(SystemKind kind, int g) { return chi_q_hilbert(kind, g).limit_at_one(); }

std::vector<CohomologyRow> cohomology_table(int gmax) {
    std::vector<CohomologyRow> rows;
    for (SystemKind kind : {SystemKind::OddMumford, SystemKind::EvenMumford, SystemKind::PrymI,
                            SystemKind::PrymII}) {
        for (int g = 1; g <= gmax; ++g) {
            const QRational chi = chi_q_hilbert(kind, g);
            for (int k = 0; k <= g; ++k) {
                CohomologyRow row;
                row.kind = system_kind_name(kind);
                row.g = g;
                row.k = k;
                row.betti = betti_affine(kind, g, k).get_str();
                row.euler = euler_char(kind, g).get_str();
                row.chi_q = chi.str();
                row.limit = chi.limit_at_one().str();
                rows.push_back(row);
            }
        }
    }
    return rows;
}

}  // namespace mumford
