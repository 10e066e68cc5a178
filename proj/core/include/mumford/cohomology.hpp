#pragma once

#include <string>
#include <vector>

#include "mumford/qseries.hpp"

namespace mumford {

enum class SystemKind { OddMumford, EvenMumford, PrymI, PrymII };

const char* system_kind_name(SystemKind k);
SystemKind system_kind_from_name(const std::string& name);

/// C(n, k) with arbitrary precision; zero for negative or out-of-range k.
BigInt binomial(long n, long k);

enum class StratumVariant { plain, pm, zero_pm };

/// dim H^k of the affine variety attached to each system (theta-divisor
/// complements and their Prym analogues); zero outside 0 <= k <= g.
BigInt betti_affine(SystemKind kind, int g, int k);

/// dim H^k(W_r \ W_{r-1}) and the two punctured variants.
BigInt betti_stratum(int g, int r, int k, StratumVariant variant);

/// dim H^k(W_r).
BigInt betti_W(int g, int r, int k);

/// Euler characteristic of the affine variety, returned from the closed
/// binomial form; equals the alternating sum of betti_affine.
BigInt euler_char(SystemKind kind, int g);
BigInt euler_char_alternating(SystemKind kind, int g);

/// chi(W_r), closed form and alternating sum.
BigInt euler_char_W(int g, int r);
BigInt euler_char_W_alternating(int g, int r);

/// Degrees of the graded presentation for each system: generators, relations
/// and time forms, all in half units (doubled exponents of q).
struct GradedPresentation {
    std::vector<int> generator_deg2;
    std::vector<int> relation_deg2;
    std::vector<int> timeform_deg2;  // negative degrees of the dt_i
};

GradedPresentation graded_presentation(SystemKind kind, int g);

/// Hilbert-series oracle for the q-Euler characteristic:
/// prod_rel (1-q^d) * prod_dt (1-q^d) / prod_gen (1-q^d), reduced.
QRational chi_q_hilbert(SystemKind kind, int g);

/// The closed product formulas; the odd system's half-integer factorial is
/// convention-dependent and may carry a pole at q = 1.
QRational chi_q_closed(SystemKind kind, int g,
                       FactorialConvention conv = FactorialConvention::full);

/// q -> 1 limit of the oracle; equals the topological Euler characteristic.
Rational q_euler_limit(SystemKind kind, int g);

struct CohomologyRow {
    std::string kind;
    int g = 0;
    int k = 0;
    std::string betti;
    std::string euler;
    std::string chi_q;
    std::string limit;
};

std::vector<CohomologyRow> cohomology_table(int gmax);

}  // namespace mumford
