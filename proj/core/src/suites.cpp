#include "mumford/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "mumford/closed_form.hpp"
#include "mumford/cohomology.hpp"
#include "mumford/integrate.hpp"
#include "mumford/json_io.hpp"
#include "mumford/rng.hpp"
#include "mumford/theta.hpp"
#include "mumford/verify.hpp"

namespace mumford {

using nlohmann::json;

std::string SuiteReport::to_json() const {
    json j;
    j["suite"] = suite;
    j["pass"] = all_pass();
    j["checks"] = json::array();
    for (const auto& c : checks) {
        json cj;
        cj["name"] = c.name;
        cj["detail"] = c.detail;
        cj["points"] = c.points;
        cj["max_residual"] = c.max_residual;
        cj["pass"] = c.pass;
        j["checks"].push_back(cj);
    }
    return j.dump(2);
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.pass ? "PASS" : "FAIL") << "  " << suite << "/" << c.name
            << (c.detail.empty() ? "" : " [" + c.detail + "]") << "  points=" << c.points
            << "  max_residual=" << c.max_residual << "\n";
    return out.str();
}

namespace {

const Family kSixFamilies[] = {Family::Mumford, Family::EvenMumford, Family::PrymI,
                               Family::PrymII, Family::DLaxI, Family::DLaxII};

std::vector<Rational> random_flat(Family fam, int g, Rng& rng) {
    if (is_mumford_like(fam)) return random_point<Rational>(fam, g, rng).flatten();
    return random_dlax<Rational>(fam, g, rng).flatten();
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!scalar_is_zero(x)) return false;
    return true;
}

double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

std::string fmt(double x) {
    std::ostringstream o;
    o.precision(3);
    o << std::scientific << x;
    return o.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Criterion 1: affine cohomology tables
// ---------------------------------------------------------------------------

SuiteReport suite_cohomology_tables(int gmax) {
    SuiteReport rep;
    rep.suite = "cohomology-tables";
    bool sums_ok = true, anchors_ok = true;
    for (SystemKind kind : {SystemKind::OddMumford, SystemKind::EvenMumford, SystemKind::PrymI,
                            SystemKind::PrymII})
        for (int g = 1; g <= gmax; ++g)
            if (euler_char_alternating(kind, g) != euler_char(kind, g)) sums_ok = false;
    anchors_ok &= betti_affine(SystemKind::OddMumford, 2, 2) == 5;
    anchors_ok &= betti_affine(SystemKind::EvenMumford, 1, 1) == 3;
    anchors_ok &= betti_affine(SystemKind::PrymI, 1, 0) == 1;
    anchors_ok &= euler_char(SystemKind::OddMumford, 1) == -1;
    anchors_ok &= euler_char(SystemKind::PrymI, 1) == -3;
    anchors_ok &= betti_affine(SystemKind::OddMumford, 3, -1) == 0;
    anchors_ok &= betti_affine(SystemKind::OddMumford, 3, 4) == 0;
    rep.checks.push_back({"alternating-sum-equals-euler", "all kinds, g<=" + std::to_string(gmax),
                          4 * gmax, sums_ok ? "0" : "mismatch", sums_ok});
    rep.checks.push_back({"betti-anchor-values", "spot values", 7, anchors_ok ? "0" : "mismatch",
                          anchors_ok});
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 2: stratum formulas
// ---------------------------------------------------------------------------

SuiteReport suite_strata(int gmax) {
    SuiteReport rep;
    rep.suite = "strata";
    bool anchors = true;
    anchors &= betti_stratum(2, 1, 1, StratumVariant::plain) == 4;
    anchors &= betti_stratum(2, 1, 1, StratumVariant::pm) == 5;
    anchors &= betti_stratum(1, 1, 1, StratumVariant::zero_pm) == 4;
    anchors &= betti_W(2, 1, 2) == 1;
    anchors &= betti_W(2, 2, 2) == 6;
    rep.checks.push_back({"stratum-anchor-values", "spot values", 5, anchors ? "0" : "mismatch",
                          anchors});
    bool chi_ok = true;
    int cases = 0;
    for (int g = 1; g <= gmax; ++g)
        for (int r = 0; r <= g; ++r, ++cases)
            if (euler_char_W_alternating(g, r) != euler_char_W(g, r)) chi_ok = false;
    rep.checks.push_back({"chi-W-closed-vs-alternating", "g<=" + std::to_string(gmax) + ", all r",
                          cases, chi_ok ? "0" : "mismatch", chi_ok});
    // W_g is the full Jacobian: betti must collapse to plain binomials
    bool wg_ok = true;
    for (int g = 1; g <= gmax; ++g)
        for (int k = 0; k <= g; ++k)
            if (betti_W(g, g, k) != binomial(2 * g, k)) wg_ok = false;
    rep.checks.push_back({"W_g-is-jacobian", "k <= g", gmax * (gmax + 3) / 2,
                          wg_ok ? "0" : "mismatch", wg_ok});
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 3: q-Euler characteristics
// ---------------------------------------------------------------------------

SuiteReport suite_q_euler(int gmax) {
    SuiteReport rep;
    rep.suite = "q-euler";
    bool closed_ok = true;
    for (SystemKind kind : {SystemKind::EvenMumford, SystemKind::PrymI, SystemKind::PrymII})
        for (int g = 1; g <= gmax; ++g)
            if (!(chi_q_hilbert(kind, g) == chi_q_closed(kind, g))) closed_ok = false;
    rep.checks.push_back({"closed-form-equals-oracle", "even/prym1/prym2, g<=" +
                              std::to_string(gmax),
                          3 * gmax, closed_ok ? "0" : "mismatch", closed_ok});

    bool limits_ok = true;
    for (SystemKind kind : {SystemKind::OddMumford, SystemKind::EvenMumford, SystemKind::PrymI,
                            SystemKind::PrymII})
        for (int g = 1; g <= gmax; ++g) {
            const Rational lim = q_euler_limit(kind, g);
            if (!(lim == Rational(euler_char(kind, g), BigInt(1)))) limits_ok = false;
        }
    rep.checks.push_back({"q-limit-equals-euler", "all kinds, g<=" + std::to_string(gmax), 4 * gmax,
                          limits_ok ? "0" : "mismatch", limits_ok});

    bool anchors = true;
    anchors &= q_euler_limit(SystemKind::OddMumford, 1) == Rational(-1);
    anchors &= q_euler_limit(SystemKind::EvenMumford, 1) == Rational(-2);
    anchors &= q_euler_limit(SystemKind::PrymI, 1) == Rational(-3);
    anchors &= q_euler_limit(SystemKind::PrymII, 1) == Rational(-6);
    rep.checks.push_back({"limit-anchor-values", "g=1 all kinds", 4, anchors ? "0" : "mismatch",
                          anchors});

    // the odd closed form is convention-dependent; report, never assert
    const bool full_pole = chi_q_closed(SystemKind::OddMumford, 2, FactorialConvention::full)
                               .has_pole_at_one();
    const bool partial_matches_g1 =
        chi_q_closed(SystemKind::OddMumford, 1, FactorialConvention::down_to_half) ==
        chi_q_hilbert(SystemKind::OddMumford, 1);
    rep.checks.push_back({"odd-convention-flag",
                          std::string("full:") + (full_pole ? "pole-at-1" : "finite") +
                              " down_to_half(g=1):" +
                              (partial_matches_g1 ? "matches-oracle" : "mismatch"),
                          2, "reported", true});
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 4: exact invariance
// ---------------------------------------------------------------------------

SuiteReport suite_invariance(std::uint64_t seed, int points) {
    SuiteReport rep;
    rep.suite = "invariance";
    Rng rng(seed);
    for (Family fam : kSixFamilies)
        for (int g = 1; g <= 3; ++g) {
            bool ok = true;
            for (int p = 0; p < points; ++p) {
                if (is_mumford_like(fam)) {
                    auto pt = random_point<Rational>(fam, g, rng);
                    for (int i = 1; i <= g; ++i)
                        if (!all_zero(invariant_derivative(pt, i))) ok = false;
                } else {
                    auto pt = random_dlax<Rational>(fam, g, rng);
                    for (int i = 1; i <= g; ++i) {
                        if (!all_zero(invariant_derivative(pt, i))) ok = false;
                        if (fam == Family::DLaxII && !scalar_is_zero(b0_derivative(pt, i)))
                            ok = false;
                    }
                }
            }
            rep.checks.push_back({"spectral-derivative-zero",
                                  std::string(family_name(fam)) + " g=" + std::to_string(g),
                                  points, ok ? "0" : "nonzero", ok});
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 5: exact commutativity
// ---------------------------------------------------------------------------

SuiteReport suite_commutativity(std::uint64_t seed, int points) {
    SuiteReport rep;
    rep.suite = "commutativity";
    Rng rng(seed);
    for (Family fam : kSixFamilies)
        for (int g = 2; g <= 3; ++g) {
            bool ok = true;
            for (int p = 0; p < points; ++p) {
                const std::vector<Rational> flat = random_flat(fam, g, rng);
                for (int i = 1; i <= g; ++i)
                    for (int j = i + 1; j <= g; ++j)
                        if (!all_zero(lie_bracket(fam, g, flat, i, j))) ok = false;
            }
            rep.checks.push_back({"lie-bracket-zero",
                                  std::string(family_name(fam)) + " g=" + std::to_string(g),
                                  points, ok ? "0" : "nonzero", ok});
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 6: exact map identities
// ---------------------------------------------------------------------------

SuiteReport suite_map_identities(std::uint64_t seed, int points) {
    SuiteReport rep;
    rep.suite = "map-identities";
    Rng rng(seed);
    for (Family fam : {Family::DLaxI, Family::DLaxII})
        for (int g = 1; g <= 2; ++g) {
            bool diagram_ok = true, inverse_ok = true, push_ok = true;
            for (int p = 0; p < points; ++p) {
                const auto T = random_dlax<Rational>(fam, g, rng);
                const auto sd = dlax_invariants(T);
                const auto l = phi_map(T);
                const auto f = phi_small(fam, sd.f1, sd.f2, g);
                if (!scalar_is_zero(level_set_residual(l, f))) diagram_ok = false;
                const auto rebuilt =
                    (fam == Family::DLaxI)
                        ? phi_inverse(l, sd.f1, fam)
                        : phi_inverse(l, sd.f1, fam, 1, T.b0);
                if (!(rebuilt.flatten() == T.flatten())) inverse_ok = false;
                for (int i = 1; i <= g; ++i)
                    if (!all_zero(pushforward_residual(T, i))) push_ok = false;
            }
            const std::string d = std::string(family_name(fam)) + " g=" + std::to_string(g);
            rep.checks.push_back({"psi-phi-square", d, points, diagram_ok ? "0" : "nonzero",
                                  diagram_ok});
            rep.checks.push_back({"phi-roundtrip", d, points, inverse_ok ? "0" : "nonzero",
                                  inverse_ok});
            rep.checks.push_back({"pushforward-residual-zero", d, points,
                                  push_ok ? "0" : "nonzero", push_ok});
        }
    // psi' o Lambda = lambda o psi''
    for (int g = 1; g <= 2; ++g) {
        bool odd_ok = true, even_ok = true;
        for (int p = 0; p < points; ++p) {
            {
                const auto chain = random_chain<Rational>(2 * g + 1, rng);
                const auto T = lambda_map(chain);
                const auto sd = dlax_invariants(T);
                const auto h = psi_doubleprime(chain);
                const auto [f1, f2] = lambda_small<Rational>(Family::NYI, h, chain.e, g);
                if (!(sd.f1 == f1 && sd.f2 == f2)) odd_ok = false;
            }
            {
                auto st = random_ny<Rational>(Family::NYII, g, rng);
                try {
                    const auto chain = qcheck_from_q(st);
                    const auto T = lambda_map(chain);
                    const auto sd = dlax_invariants(T);
                    const auto h = psi_doubleprime(chain);
                    const auto [f1, f2] = lambda_small<Rational>(Family::NYII, h, st.e, g);
                    if (!(sd.f1 == f1 && sd.f2 == f2)) even_ok = false;
                } catch (const Unsolvable&) {
                    // degenerate gauge solve; skip the sample
                }
            }
        }
        rep.checks.push_back({"diagram-QT-odd", "N=" + std::to_string(2 * g + 1), points,
                              odd_ok ? "0" : "nonzero", odd_ok});
        rep.checks.push_back({"diagram-QT-even", "N=" + std::to_string(2 * g + 2) +
                                  " canonical gauge",
                              points, even_ok ? "0" : "nonzero", even_ok});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 7: fiber structure and independence rank
// ---------------------------------------------------------------------------

SuiteReport suite_fiber(std::uint64_t seed, int points) {
    SuiteReport rep;
    rep.suite = "fiber";
    Rng rng(seed);
    for (int g = 1; g <= 2; ++g) {
        bool sheets_ok = true;
        for (int p = 0; p < points; ++p) {
            const auto l = random_point<Rational>(Family::Mumford, g, rng);
            const auto f = spectral_map(l).f;
            Rational b0star = rng.rational();
            while (scalar_is_zero(b0star)) b0star = rng.rational();
            UniPoly<Rational> f1;
            f1.set_coeff(g + 1, Rational(2));
            for (int j = 0; j <= g; ++j) f1.set_coeff(j, rng.rational());
            const UniPoly<Rational> f2 =
                f1 * f1 * Rational(1, 4) - f * (b0star * b0star);
            // the two sheets over (f1, f2)
            const auto Tp = phi_inverse(l, f1, Family::DLaxII, 1, b0star);
            const auto Tm = phi_inverse(l, f1, Family::DLaxII, -1, b0star);
            const auto sp = dlax_invariants(Tp), sm = dlax_invariants(Tm);
            if (!(sp.f1 == f1 && sp.f2 == f2 && sm.f1 == f1 && sm.f2 == f2)) sheets_ok = false;
            if (!(Tp.b0 == b0star) || !(Tm.b0 == -b0star)) sheets_ok = false;
            if (Tp.flatten() == Tm.flatten()) sheets_ok = false;
            if (!(phi_map(Tp).flatten() == l.flatten())) sheets_ok = false;
            if (!(phi_map(Tm).flatten() == l.flatten())) sheets_ok = false;
            // b0^2 equals the pulled-back f1^(1) - f2^(1)
            if (!(f1.coeff(g) - f2.coeff(2 * g + 1) == b0star * b0star)) sheets_ok = false;
        }
        rep.checks.push_back({"two-sheet-fiber", "variant II g=" + std::to_string(g), points,
                              sheets_ok ? "0" : "mismatch", sheets_ok});
    }
    int total = 0, full = 0;
    for (Family fam : kSixFamilies)
        for (int g = 1; g <= 3; ++g)
            for (int p = 0; p < points; ++p) {
                ++total;
                int rank = 0;
                if (is_mumford_like(fam))
                    rank = independence_rank<Rational>(random_point<Rational>(fam, g, rng));
                else
                    rank = independence_rank<Rational>(random_dlax<Rational>(fam, g, rng));
                if (rank == g) ++full;
            }
    const bool rank_ok = full * 100 >= total * 95;
    rep.checks.push_back({"independence-rank", "rank=g at " + std::to_string(full) + "/" +
                              std::to_string(total),
                          total, rank_ok ? "0" : "rank drop", rank_ok});
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 8: numerical conservation
// ---------------------------------------------------------------------------

namespace {

/// Deterministically scan seeds for an initial point whose trajectory stays
/// finite over [0, t_end].
template <class MakeState>
std::pair<Trajectory, std::uint64_t> first_stable(MakeState&& make, std::uint64_t seed0,
                                                  double t_end, double step) {
    for (std::uint64_t s = seed0; s < seed0 + 64; ++s) {
        try {
            Trajectory tr = make(s, t_end, step);
            if (!tr.blew_up) return {tr, s};
        } catch (const Error&) {
        }
    }
    throw Error("no stable seed found");
}

}  // namespace

SuiteReport suite_conservation(std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "conservation";

    auto mumford_traj = [&](std::uint64_t s, double t_end, double step) {
        Rng rng(s);
        auto p = random_point<double>(Family::Mumford, 1, rng);
        std::vector<double> dir = {1.0};
        return integrate(Family::Mumford, 1, p.flatten(), dir, t_end, step);
    };
    auto [tr_m, seed_m] = first_stable(mumford_traj, seed + 1, 1.0, 1e-3);
    rep.checks.push_back({"mumford-drift", "g=1 seed=" + std::to_string(seed_m) + " step=1e-3",
                          static_cast<int>(tr_m.times.size()), fmt(tr_m.drift),
                          tr_m.drift < 1e-8});

    auto mumford2_traj = [&](std::uint64_t s, double t_end, double step) {
        Rng rng(s);
        auto p = random_point<double>(Family::Mumford, 2, rng);
        std::vector<double> dir = {1.0, 0.5};
        return integrate(Family::Mumford, 2, p.flatten(), dir, t_end, step);
    };
    auto [tr_m2, seed_m2] = first_stable(mumford2_traj, seed + 1, 1.0, 1e-3);
    rep.checks.push_back({"mumford-drift", "g=2 seed=" + std::to_string(seed_m2) + " step=1e-3",
                          static_cast<int>(tr_m2.times.size()), fmt(tr_m2.drift),
                          tr_m2.drift < 1e-8});

    auto ny1_traj = [&](std::uint64_t s, double t_end, double step) {
        Rng rng(s);
        auto st = random_ny<double>(Family::NYI, 1, rng);
        return integrate(Family::NYI, 1, st.q, {1.0}, t_end, step, st.e);
    };
    auto [tr_n1, seed_n1] = first_stable(ny1_traj, seed + 1, 1.0, 1e-3);
    rep.checks.push_back({"ny1-trace-drift", "g=1 seed=" + std::to_string(seed_n1) + " step=1e-3",
                          static_cast<int>(tr_n1.times.size()), fmt(tr_n1.drift),
                          tr_n1.drift < 1e-8});

    auto ny2_traj = [&](std::uint64_t s, double t_end, double step) {
        Rng rng(s);
        auto st = random_ny<double>(Family::NYII, 1, rng);
        return integrate(Family::NYII, 1, st.q, {1.0}, t_end, step, st.e);
    };
    auto [tr_n2, seed_n2] = first_stable(ny2_traj, seed + 1, 1.0, 1e-3);
    double cdrift = 0;
    {
        const size_t ci = tr_n2.invariant_names.size() - 1;  // constraint column
        for (const auto& inv : tr_n2.invariants)
            cdrift = std::max(cdrift, std::fabs(inv[ci] - tr_n2.invariants.front()[ci]));
    }
    rep.checks.push_back({"ny2-trace-drift", "g=1 seed=" + std::to_string(seed_n2) + " step=1e-3",
                          static_cast<int>(tr_n2.times.size()), fmt(tr_n2.drift),
                          tr_n2.drift < 1e-8});
    rep.checks.push_back({"ny2-constraint-drift", "g=1 seed=" + std::to_string(seed_n2),
                          static_cast<int>(tr_n2.times.size()), fmt(cdrift), cdrift < 1e-10});

    // RK4 order: drift slope across steps 1e-2, 1e-3, 1e-4. A mild window
    // sits on the roundoff floor at the finest step, so the slope is read
    // off a segment approaching the blow-up divisor where the truncation
    // constant is large.
    {
        const std::vector<double> p = {1.0, 2.0, 3.0, 5.0};
        const Trajectory probe = integrate(Family::Mumford, 1, p, {1.0}, 20.0, 1e-3);
        const double t_end = 0.97 * (probe.blew_up ? probe.blowup_time : 20.0);
        std::vector<double> hs = {1e-2, 1e-3, 1e-4};
        std::vector<double> ds;
        for (double h : hs) {
            Trajectory t = integrate(Family::Mumford, 1, p, {1.0}, t_end, h);
            ds.push_back(std::max(t.drift, 1e-300));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < hs.size(); ++i) {
            const double x = std::log10(hs[i]), y = std::log10(ds[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(hs.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        rep.checks.push_back({"rk4-order-slope", "drift slope, steps 1e-2..1e-4", 3, fmt(slope),
                              slope >= 3.5 && slope <= 4.5});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 9: g = 1 closed forms
// ---------------------------------------------------------------------------

namespace {

double sup_error_flat(const Trajectory& tr, const std::function<std::vector<double>(double)>& f,
                      size_t ncoord) {
    double worst = 0;
    for (size_t i = 0; i < tr.times.size(); i += 25) {
        const std::vector<double> x = f(tr.times[i]);
        for (size_t k = 0; k < ncoord; ++k)
            worst = std::max(worst, std::fabs(x[k] - tr.states[i][k]));
    }
    return worst;
}

}  // namespace

SuiteReport suite_closed_forms(std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "closed-forms";
    const double t_end = 0.5, step = 1e-3;

    // Mumford g=1 closed form vs RK4
    {
        double worst = 0;
        int found = 0;
        std::uint64_t s = seed + 1;
        while (found < 5 && s < seed + 200) {
            Rng rng(s++);
            auto p0 = random_point<double>(Family::Mumford, 1, rng);
            try {
                G1ExactFlow flow = mumford_g1_exact(p0);
                Trajectory tr = integrate(Family::Mumford, 1, p0.flatten(), {1.0}, t_end, step);
                if (tr.blew_up) continue;
                const double err = sup_error_flat(
                    tr, [&](double t) { return flow.at(t).flatten(); }, 4);
                worst = std::max(worst, err);
                ++found;
            } catch (const Error&) {
                continue;
            }
        }
        rep.checks.push_back({"mumford-g1-exact-vs-rk4", "5 seeded initial conditions", found,
                              fmt(worst), found == 5 && worst < 1e-6});
    }

    // Noumi-Yamada closed forms vs RK4, with the conserved identities
    for (Family fam : {Family::NYI, Family::NYII}) {
        double worst = 0, id_worst = 0;
        int found = 0;
        std::uint64_t s = seed + 1;
        while (found < 5 && s < seed + 400) {
            Rng rng(s++);
            auto q0 = random_ny<double>(fam, 1, rng);
            try {
                NYExactFlow flow = q1_exact(q0);
                Trajectory tr = integrate(fam, 1, q0.q, {1.0}, t_end, step, q0.e);
                if (tr.blew_up) continue;
                bool poled = false;
                double err = 0;
                for (size_t i = 0; i < tr.times.size(); i += 25) {
                    std::vector<double> qv;
                    try {
                        qv = flow.at(tr.times[i]);
                    } catch (const PoleHit&) {
                        poled = true;
                        break;
                    }
                    for (size_t k = 0; k < qv.size(); ++k)
                        err = std::max(err, std::fabs(qv[k] - tr.states[i][k]));
                    // identities along the closed form
                    if (fam == Family::NYI) {
                        const double sum = qv[0] + qv[1] + qv[2];
                        id_worst = std::max(id_worst, std::fabs(sum - flow.h[0]));
                    } else {
                        id_worst = std::max(id_worst, std::fabs(qv[0] + qv[2] - flow.b0));
                        id_worst = std::max(id_worst, std::fabs(qv[1] + qv[3] - flow.b0));
                    }
                }
                if (poled) continue;
                worst = std::max(worst, err);
                ++found;
            } catch (const Error&) {
                continue;
            }
        }
        rep.checks.push_back({std::string(family_name(fam)) + "-exact-vs-rk4",
                              "5 seeded initial conditions", found, fmt(worst),
                              found == 5 && worst < 1e-6});
        rep.checks.push_back({std::string(family_name(fam)) + "-identities",
                              fam == Family::NYI ? "sum q = h_1/2" : "q1+q3 = q2+q4 = b0", found,
                              fmt(id_worst), found == 5 && id_worst < 1e-9});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Criterion 10: theta machinery
// ---------------------------------------------------------------------------

SuiteReport suite_theta(std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "theta";
    Rng rng(seed + 7);

    // quasi-periodicity, g = 1 and 2
    {
        double worst = 0;
        for (int g = 1; g <= 2; ++g)
            for (int trial = 0; trial < 4; ++trial) {
                CMat omega(static_cast<size_t>(g), CVec(static_cast<size_t>(g)));
                for (int i = 0; i < g; ++i)
                    for (int j = 0; j <= i; ++j) {
                        cplx v(rng.real(-0.4, 0.4), 0.0);
                        if (i == j) v += cplx(0, 1.0 + 0.5 * rng.real(0, 1));
                        else v += cplx(0, 0.15 * rng.real(-1, 1));
                        omega[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                        omega[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
                    }
                CVec z(static_cast<size_t>(g));
                for (auto& x : z) x = cplx(rng.real(-0.4, 0.4), rng.real(-0.2, 0.2));
                const cplx base = theta0(z, omega, 1e-13);
                for (int j = 0; j < g; ++j) {
                    CVec zs = z;
                    for (int i = 0; i < g; ++i) zs[static_cast<size_t>(i)] += omega[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    const cplx lhs = theta0(zs, omega, 1e-13);
                    const cplx factor = std::exp(cplx(0, -3.14159265358979323846) *
                                                     omega[static_cast<size_t>(j)][static_cast<size_t>(j)] -
                                                 cplx(0, 2 * 3.14159265358979323846) * z[static_cast<size_t>(j)]);
                    worst = std::max(worst, std::abs(lhs - factor * base) / std::abs(base));
                }
            }
        rep.checks.push_back({"quasi-periodicity", "g=1,2 random period matrices", 8, fmt(worst),
                              worst < 1e-10});
    }

    // wp ODE residual on random cell points
    {
        double worst = 0;
        int count = 0;
        std::uint64_t s = seed + 11;
        EllipticData ed;
        while (true) {
            Rng r2(s++);
            auto p0 = random_point<double>(Family::Mumford, 1, r2);
            try {
                auto f = spectral_map(p0).f;
                ed = elliptic_from_cubic(f.coeff(2), f.coeff(1), f.coeff(0));
                break;
            } catch (const Error&) {
            }
        }
        for (int i = 0; i < 100; ++i) {
            const cplx z = rng.real(0.05, 0.95) * ed.w1 + rng.real(0.05, 0.95) * ed.w2;
            try {
                double scale = std::abs(wp(z, ed));
                worst = std::max(worst, wp_ode_residual(z, ed) / std::max(1.0, scale * scale * scale));
                ++count;
            } catch (const LatticePole&) {
            }
        }
        rep.checks.push_back({"wp-ode-residual", "100 random cell points", count, fmt(worst),
                              worst < 1e-10});
    }

    // partition of unity, monicity and flow matching on the g = 1 pipeline
    {
        double lam_worst = 0, monic_worst = 0, match_worst = 0;
        int done = 0;
        std::uint64_t s = seed + 21;
        while (done < 3 && s < seed + 200) {
            Rng r2(s++);
            auto p0 = random_point<double>(Family::Mumford, 1, r2);
            try {
                const auto f = spectral_map(p0).f;
                const EllipticData ed = elliptic_from_cubic(f.coeff(2), f.coeff(1), f.coeff(0));
                const ThetaData td = theta_data_from_elliptic(ed);
                for (int i = 0; i < 10; ++i) {
                    const CVec z = {cplx(rng.real(0, 1), rng.real(0, ed.tau.imag()))};
                    try {
                        const CVec lams = lambda_functions(td, z);
                        cplx sum = 0;
                        for (const cplx& l : lams) sum += l;
                        lam_worst = std::max(lam_worst, std::abs(sum - 1.0));
                        double defect = 0;
                        u_from_theta(td, z, &defect);
                        monic_worst = std::max(monic_worst, defect);
                    } catch (const DivisorHit&) {
                    } catch (const NonConvergent&) {
                    }
                }
                // flow matching: u1 from theta along z(t) vs RK4
                Trajectory tr = integrate(Family::Mumford, 1, p0.flatten(), {1.0}, 0.4, 1e-3);
                if (tr.blew_up) continue;
                auto u1_theta = [&](const cplx& z) {
                    const CVec lams = lambda_functions(td, {z});
                    const cplx xk0 = td.branch_x[static_cast<size_t>(td.V[0])];
                    const cplx xk1 = td.branch_x[static_cast<size_t>(td.V[1])];
                    return -(lams[0] * xk1 + lams[1] * xk0);
                };
                // locate z0 by grid + Newton on the holomorphic map
                const double u10 = p0.u[0];
                cplx z0;
                bool found = false;
                double bestd = 1e300;
                cplx bestz;
                for (int i = 1; i < 24 && !found; ++i)
                    for (int j = 1; j < 24; ++j) {
                        const cplx z = cplx((i + 0.5) / 24.0, (j + 0.5) / 24.0 * ed.tau.imag());
                        try {
                            const double d = std::abs(u1_theta(z) - u10);
                            if (d < bestd) {
                                bestd = d;
                                bestz = z;
                            }
                        } catch (const Error&) {
                        }
                    }
                z0 = bestz;
                const double hstep = 1e-5;
                for (int it = 0; it < 40; ++it) {
                    const cplx fz = u1_theta(z0) - u10;
                    if (std::abs(fz) < 1e-12) break;
                    const cplx d = (u1_theta(z0 + hstep) - u1_theta(z0 - hstep)) / (2 * hstep);
                    if (std::abs(d) < 1e-12) break;
                    z0 -= fz / d;
                }
                if (std::abs(u1_theta(z0) - u10) > 1e-9) continue;
                // velocity sign: match du1/dt = v_{3/2}(0)
                const cplx vel = 1.0 / ed.w1;
                const cplx du = (u1_theta(z0 + vel * hstep) - u1_theta(z0 - vel * hstep)) /
                                (2 * hstep);
                const double sigma = (std::abs(du.real() - p0.v[0]) <
                                      std::abs(-du.real() - p0.v[0]))
                                         ? 1.0
                                         : -1.0;
                double err = 0;
                for (size_t i = 0; i < tr.times.size(); i += 40) {
                    const cplx z = z0 + sigma * tr.times[i] / ed.w1;
                    try {
                        const cplx u1 = u1_theta(z);
                        err = std::max(err, std::abs(u1.real() - tr.states[i][0]));
                    } catch (const DivisorHit&) {
                    }
                }
                match_worst = std::max(match_worst, err);
                ++done;
            } catch (const Error&) {
            }
        }
        rep.checks.push_back({"lambda-partition-of-unity", "g=1 pipeline", done, fmt(lam_worst),
                              done == 3 && lam_worst < 1e-8});
        rep.checks.push_back({"u-from-theta-monic", "g=1 pipeline", done, fmt(monic_worst),
                              done == 3 && monic_worst < 1e-8});
        rep.checks.push_back({"u-from-theta-matches-flow", "g=1 pipeline", done, fmt(match_worst),
                              done == 3 && match_worst < 1e-6});
    }
    return rep;
}

std::vector<SuiteReport> run_all_suites(std::uint64_t seed) {
    return {suite_cohomology_tables(), suite_strata(),      suite_q_euler(),
            suite_invariance(seed),    suite_commutativity(seed), suite_map_identities(seed),
            suite_fiber(seed),         suite_conservation(seed),  suite_closed_forms(seed),
            suite_theta(seed)};
}

std::vector<GaugeSweepRow> sweep_gauge(std::uint64_t seed, int g, int samples) {
    Rng rng(seed);
    auto st = random_ny<Rational>(Family::NYII, g, rng);
    std::vector<GaugeSweepRow> rows;
    auto add = [&](const std::string& label, const Rational& c) {
        const auto chain = lift_with_gauge(st, c);
        const Mat2<Rational> t = lambda_product(chain);
        GaugeSweepRow row;
        row.gauge = label;
        std::ostringstream tr, dt;
        const UniPoly<Rational> trace = t.trace(), det = t.det();
        for (int i = trace.degree(); i >= 0; --i) tr << trace.coeff(i).str() << (i ? "," : "");
        for (int i = det.degree(); i >= 0; --i) dt << det.coeff(i).str() << (i ? "," : "");
        row.trace = tr.str();
        row.det = dt.str();
        row.b0 = t.b.coeff(g).str();
        rows.push_back(row);
    };
    try {
        add("canonical", shape_gauge(st));
    } catch (const Unsolvable&) {
    }
    for (int i = 0; i < samples; ++i) add("c=" + std::to_string(i), Rational(i));
    return rows;
}

}  // namespace mumford
