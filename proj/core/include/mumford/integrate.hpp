#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mumford/flows.hpp"
#include "mumford/lax_ny.hpp"
#include "mumford/verify.hpp"

namespace mumford {

using FlatField = std::function<std::vector<double>(const std::vector<double>&)>;
using InvariantFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;      // flat coordinates per sample
    std::vector<std::vector<double>> invariants;  // invariant log per sample
    std::vector<std::string> coord_names;
    std::vector<std::string> invariant_names;
    double drift = 0.0;  // max over samples of |inv_i(t) - inv_i(0)|
    bool blew_up = false;
    double blowup_time = 0.0;

    const std::vector<double>& last_state() const { return states.back(); }
    double t_final() const { return times.back(); }
};

inline constexpr double kBlowUpThreshold = 1e12;

namespace detail {

inline bool exceeded(const std::vector<double>& x) {
    for (double v : x) {
        if (std::isnan(v)) throw Error("integrate: NaN coordinate");
        if (std::fabs(v) > kBlowUpThreshold) return true;
    }
    return false;
}

}  // namespace detail

/// Classical fixed-step RK4 on a flat field with per-sample invariant
/// logging. A blow-up (coordinate beyond 1e12, the affine flow reaching the
/// deleted divisor) aborts cleanly with the trajectory so far.
inline Trajectory integrate_flat(const FlatField& field, const InvariantFn& invariants,
                                 std::vector<double> y, double t_end, double step) {
    if (step <= 0) throw Error("integrate: step must be positive");
    Trajectory out;
    double t = 0;
    auto record = [&](double tv, const std::vector<double>& yv) {
        out.times.push_back(tv);
        out.states.push_back(yv);
        if (invariants) {
            out.invariants.push_back(invariants(yv));
            const auto& first = out.invariants.front();
            const auto& cur = out.invariants.back();
            for (size_t i = 0; i < cur.size(); ++i)
                out.drift = std::max(out.drift, std::fabs(cur[i] - first[i]));
        }
    };
    record(t, y);
    const auto axpy = [](std::vector<double> a, double s, const std::vector<double>& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
        return a;
    };
    while (t < t_end - 1e-15) {
        const double h = std::min(step, t_end - t);
        try {
            const std::vector<double> k1 = field(y);
            const std::vector<double> k2 = field(axpy(y, h / 2, k1));
            const std::vector<double> k3 = field(axpy(y, h / 2, k2));
            const std::vector<double> k4 = field(axpy(y, h, k3));
            std::vector<double> ynew = y;
            for (size_t i = 0; i < y.size(); ++i)
                ynew[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            if (detail::exceeded(ynew)) {
                out.blew_up = true;
                out.blowup_time = t + h;
                return out;
            }
            y = std::move(ynew);
        } catch (const NonDivisible&) {
            // float-mode shape loss only happens on the way into a pole
            out.blew_up = true;
            out.blowup_time = t;
            return out;
        }
        t += h;
        record(t, y);
    }
    return out;
}

inline FlatField make_field(Family fam, int g, const std::vector<double>& direction,
                            const std::vector<double>& ny_params = {}) {
    if (is_mumford_like(fam) || is_dlax(fam)) {
        return [fam, g, direction](const std::vector<double>& y) {
            if (is_mumford_like(fam))
                return directional_field(MumfordLikePoint<double>::unflatten(fam, g, y), direction);
            return directional_field(DLaxPoint<double>::unflatten(fam, g, y), direction);
        };
    }
    if (is_ny(fam)) {
        const double scale = direction.empty() ? 1.0 : direction[0];
        return [fam, g, ny_params, scale](const std::vector<double>& y) {
            NYState<double> s = NYState<double>::make(fam, g);
            s.q = y;
            s.e = ny_params;
            std::vector<double> r = ny_rhs(s);
            for (double& v : r) v *= scale;
            return r;
        };
    }
    throw Error("make_field: unknown family");
}

inline InvariantFn make_invariant_fn(Family fam, int g, const std::vector<double>& ny_params = {}) {
    if (is_mumford_like(fam)) {
        return [fam, g](const std::vector<double>& y) {
            auto sd = spectral_map(MumfordLikePoint<double>::unflatten(fam, g, y));
            std::vector<double> out;
            for (int i = 0; i < sd.f.degree(); ++i) out.push_back(sd.f.coeff(i));
            return out;
        };
    }
    if (is_dlax(fam)) {
        return [fam, g](const std::vector<double>& y) {
            auto sd = dlax_invariants(DLaxPoint<double>::unflatten(fam, g, y));
            std::vector<double> out;
            for (int i = 0; i <= sd.f1.degree(); ++i) out.push_back(sd.f1.coeff(i));
            for (int i = 0; i <= sd.f2.degree(); ++i) out.push_back(sd.f2.coeff(i));
            return out;
        };
    }
    if (is_ny(fam)) {
        return [fam, g, ny_params](const std::vector<double>& y) {
            NYState<double> s = NYState<double>::make(fam, g);
            s.q = y;
            s.e = ny_params;
            std::vector<double> out;
            if (fam == Family::NYI) {
                out = psi_doubleprime(qcheck_from_q(s));
            } else {
                out = psi_doubleprime(s, GaugeParam<double>{});
                out.push_back(s.constraint_defect());
            }
            return out;
        };
    }
    throw Error("make_invariant_fn: unknown family");
}

inline std::vector<std::string> coord_names(Family fam, int g) {
    std::vector<std::string> names;
    auto push = [&](const std::string& stem, int count, int start = 1) {
        for (int j = start; j < start + count; ++j) names.push_back(stem + std::to_string(j));
    };
    if (is_mumford_like(fam)) {
        push("u", g);
        push("v", fam == Family::PrymII ? g + 1 : g);
        push("w", fam == Family::Mumford ? g + 1 : (fam == Family::EvenMumford ? g + 2 : g + 1));
    } else if (is_dlax(fam)) {
        names.push_back("a0");
        push("a", g);
        if (fam == Family::DLaxII) names.push_back("b0");
        push("b", g);
        push("c", g + 1);
        push("d", g);
    } else {
        push("q", fam == Family::NYI ? 2 * g + 1 : 2 * g + 2);
    }
    return names;
}

inline std::vector<std::string> invariant_names(Family fam, int g) {
    std::vector<std::string> names;
    if (is_mumford_like(fam)) {
        const int deg = (fam == Family::Mumford)       ? 2 * g + 1
                        : (fam == Family::EvenMumford) ? 2 * g + 2
                        : (fam == Family::PrymI)       ? 4 * g + 2
                                                       : 4 * g + 4;
        for (int i = 0; i < deg; ++i) names.push_back("f" + std::to_string(i));
    } else if (is_dlax(fam)) {
        for (int i = 0; i <= g + (fam == Family::DLaxII ? 1 : 0); ++i)
            names.push_back("tr" + std::to_string(i));
        for (int i = 0; i <= 2 * g + 1 + (fam == Family::DLaxII ? 1 : 0); ++i)
            names.push_back("det" + std::to_string(i));
    } else {
        for (int i = 0; i <= g; ++i) names.push_back("h" + std::to_string(i));
        if (fam == Family::NYII) names.push_back("constraint");
    }
    return names;
}

/// Integrate a family flow from a flat initial state. `direction` selects
/// sum c_i D_i for the six Lax-type families; the Noumi-Yamada states evolve
/// by their own right-hand side (optionally scaled by direction[0]).
inline Trajectory integrate(Family fam, int g, const std::vector<double>& p0,
                            const std::vector<double>& direction, double t_end, double step,
                            const std::vector<double>& ny_params = {}) {
    Trajectory tr = integrate_flat(make_field(fam, g, direction, ny_params),
                                   make_invariant_fn(fam, g, ny_params), p0, t_end, step);
    tr.coord_names = coord_names(fam, g);
    tr.invariant_names = invariant_names(fam, g);
    return tr;
}

/// Norm of the order-of-flows discrepancy: time s along D_i then D_j versus
/// the reverse order. Vanishing brackets push this to O(step^4).
inline double commutativity_probe(Family fam, int g, const std::vector<double>& p0, int i, int j,
                                  double s, double step) {
    auto unit = [g](int k) {
        std::vector<double> c(static_cast<size_t>(g), 0.0);
        c[static_cast<size_t>(k - 1)] = 1.0;
        return c;
    };
    auto flow = [&](const std::vector<double>& y, int k) {
        Trajectory t = integrate_flat(make_field(fam, g, unit(k)), nullptr, y, s, step);
        if (t.blew_up) throw BlowUp(t.blowup_time, "commutativity_probe: flow blew up");
        return t.last_state();
    };
    if (s == 0.0) return 0.0;
    const std::vector<double> ab = flow(flow(p0, i), j);
    const std::vector<double> ba = flow(flow(p0, j), i);
    double m = 0;
    for (size_t k = 0; k < ab.size(); ++k) m = std::max(m, std::fabs(ab[k] - ba[k]));
    return m;
}

/// CSV export: header `t,<coordinates>,<invariants>`, one row per sample.
std::string trajectory_csv(const Trajectory& tr);
Trajectory trajectory_from_csv(const std::string& csv);

}  // namespace mumford
