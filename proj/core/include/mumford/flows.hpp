#pragma once

#include <functional>
#include <vector>

#include "mumford/bipoly.hpp"
#include "mumford/perturbed.hpp"
#include "mumford/phase_space.hpp"

namespace mumford {

template <class S>
using Tangent = std::vector<S>;  // same flat layout as the point's flatten()

template <class S>
struct VectorFieldFrame {
    std::vector<Tangent<S>> rows;  // rows[i-1] = D_i applied to all coordinates
    int g() const { return static_cast<int>(rows.size()); }
};

namespace detail {

template <class S>
double pattern_tolerance(const BiPoly<S>& q) {
    if constexpr (is_exact_scalar_v<S>)
        return 0.0;
    else
        return 1e-9 * (q.max_abs() + 1.0);
}

/// Read the frame rows out of a generating polynomial. `x2_exp_of_field(i)`
/// gives the x2 exponent carrying D_i; `slot_of_x1_exp(e)` returns the flat
/// tangent index for the coordinate stored at x1^e, or -1 when the x1
/// exponent is required to vanish (monic slot, parity gap).
template <class S>
void extract_rows(const BiPoly<S>& q, int g, const std::function<int(int)>& x2_exp_of_field,
                  const std::function<int(int)>& slot_of_x1_exp,
                  std::vector<Tangent<S>>& rows, const char* what) {
    const double tol = pattern_tolerance(q);
    std::vector<int> field_of_exp;  // x2 exponent -> field index, -1 when outside the pattern
    for (int i = 1; i <= g; ++i) {
        const int e = x2_exp_of_field(i);
        if (e >= static_cast<int>(field_of_exp.size())) field_of_exp.resize(e + 1, -1);
        field_of_exp[static_cast<size_t>(e)] = i;
    }
    q.for_each([&](int i1, int j2, const S& v) {
        const bool negligible = !is_exact_scalar_v<S> && abs_approx(v) <= tol;
        const int field = (j2 < static_cast<int>(field_of_exp.size()))
                              ? field_of_exp[static_cast<size_t>(j2)]
                              : -1;
        if (field < 0) {
            if (!negligible)
                throw PatternOverflow(std::string(what) + ": x2 exponent outside the D(x) pattern");
            return;
        }
        const int slot = slot_of_x1_exp(i1);
        if (slot < 0) {
            if (!negligible)
                throw ShapeViolation(std::string(what) +
                                     ": derivative hit a monic or parity-forbidden coefficient");
            return;
        }
        rows[static_cast<size_t>(field - 1)][static_cast<size_t>(slot)] += v;
    });
}

template <class S>
BiPoly<S> antisym(const UniPoly<S>& p, const UniPoly<S>& q) {
    return BiPoly<S>::outer(p, q) - BiPoly<S>::outer(q, p);
}

}  // namespace detail

/// Commuting vector fields D_1..D_g for the four Mumford-type families,
/// evaluated by building the generating bivariate polynomials and matching
/// coefficients against the family's D(x) pattern.
template <class S>
VectorFieldFrame<S> frame(const MumfordLikePoint<S>& p) {
    using P = MumfordLikePoint<S>;
    const int g = p.g;
    const bool prym = (p.kind == Family::PrymI || p.kind == Family::PrymII);
    const UniPoly<S> u = p.u_poly(), v = p.v_poly(), w = p.w_poly();
    const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);

    BiPoly<S> qu, qv, qw;
    if (!prym) {
        BiPoly<S> div = BiPoly<S>::outer(UniPoly<S>{scalar_traits<S>::zero(),
                                                    scalar_traits<S>::one()},
                                         UniPoly<S>::constant(scalar_traits<S>::one())) -
                        BiPoly<S>::outer(UniPoly<S>::constant(scalar_traits<S>::one()),
                                         UniPoly<S>{scalar_traits<S>::zero(),
                                                    scalar_traits<S>::one()});
        qu = exact_bivariate_quotient(detail::antisym(u, v), div);
        BiPoly<S> wu = exact_bivariate_quotient(detail::antisym(w, u), div);
        BiPoly<S> uu = BiPoly<S>::outer(u, u);
        BiPoly<S> vu = BiPoly<S>::outer(v, u);
        if (p.kind == Family::Mumford) {
            qv = (wu - uu) * half;
            qw = exact_bivariate_quotient(detail::antisym(v, w), div) + vu;
        } else {  // alpha(x) = x + w1 - u1, evaluated at x1 + x2
            const S c = p.w[0] - p.u[0];
            qv = (wu - uu.times_x1_plus_x2_plus(c)) * half;
            qw = exact_bivariate_quotient(detail::antisym(v, w), div) +
                 vu.times_x1_plus_x2_plus(c);
        }
    } else {
        // divisor x1^2 - x2^2; numerators carry the x1/x2 prefactors
        BiPoly<S> div;
        {
            UniPoly<S> x2 = UniPoly<S>::x_pow(2);
            UniPoly<S> one = UniPoly<S>::constant(scalar_traits<S>::one());
            div = BiPoly<S>::outer(x2, one) - BiPoly<S>::outer(one, x2);
        }
        qu = exact_bivariate_quotient(
            BiPoly<S>::outer(u, v).shifted(0, 1) - BiPoly<S>::outer(v, u).shifted(1, 0), div);
        BiPoly<S> wu = exact_bivariate_quotient(detail::antisym(w, u), div);
        qv = (wu - BiPoly<S>::outer(u, u)).shifted(1, 0) * half;
        qw = exact_bivariate_quotient(
                 BiPoly<S>::outer(v, w).shifted(1, 0) - BiPoly<S>::outer(w, v).shifted(0, 1),
                 div) +
             BiPoly<S>::outer(v, u).shifted(1, 0);
    }

    const int nu = static_cast<int>(p.u.size());
    const int nv = static_cast<int>(p.v.size());
    VectorFieldFrame<S> out;
    out.rows.assign(static_cast<size_t>(g),
                    Tangent<S>(static_cast<size_t>(p.dim()), scalar_traits<S>::zero()));
    auto pattern = [&](int i) {
        if (p.kind == Family::PrymI) return 2 * (g - i);
        if (p.kind == Family::PrymII) return 2 * (g - i) + 1;
        return g - i;
    };
    auto slot_map = [&](auto exp_of, int count, int base) {
        return [exp_of, count, base](int e) {
            for (int j = 1; j <= count; ++j)
                if (exp_of(j) == e) return base + j - 1;
            return -1;
        };
    };
    detail::extract_rows<S>(qu, g, pattern,
                            slot_map([&](int j) { return P::u_exp(p.kind, g, j); }, nu, 0),
                            out.rows, "u");
    detail::extract_rows<S>(qv, g, pattern,
                            slot_map([&](int j) { return P::v_exp(p.kind, g, j); }, nv, nu),
                            out.rows, "v");
    detail::extract_rows<S>(
        qw, g, pattern,
        slot_map([&](int j) { return P::w_exp(p.kind, g, j); },
                 static_cast<int>(p.w.size()), nu + nv),
        out.rows, "w");
    return out;
}

/// D_1..D_g on the D_g^(I/II) phase space.
template <class S>
VectorFieldFrame<S> frame(const DLaxPoint<S>& p) {
    const int g = p.g;
    const UniPoly<S> a = p.a_poly(), b = p.b_poly(), c = p.c_poly(), d = p.d_poly();
    const UniPoly<S> delta = a - d;
    const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);

    BiPoly<S> div;
    {
        UniPoly<S> x = UniPoly<S>::x_pow(1);
        UniPoly<S> one = UniPoly<S>::constant(scalar_traits<S>::one());
        div = BiPoly<S>::outer(x, one) - BiPoly<S>::outer(one, x);
    }
    BiPoly<S> qa = exact_bivariate_quotient(detail::antisym(c, b), div) * half -
                   BiPoly<S>::outer(b, b) * half;
    BiPoly<S> qb = exact_bivariate_quotient(detail::antisym(b, delta), div) * half;
    BiPoly<S> qc = exact_bivariate_quotient(detail::antisym(delta, c), div) * half +
                   BiPoly<S>::outer(delta, b) * half;
    BiPoly<S> qd = -qa;

    const bool variant2 = (p.variant == Family::DLaxII);
    VectorFieldFrame<S> out;
    out.rows.assign(static_cast<size_t>(g),
                    Tangent<S>(static_cast<size_t>(p.dim()), scalar_traits<S>::zero()));
    auto pattern = [g](int i) { return g - i; };
    // flat layout: a_half, a_tail(g), [b0], b_tail(g), c_tail(g+1), d_tail(g)
    const int idx_b0 = g + 1;
    const int base_b = variant2 ? g + 2 : g + 1;  // first b_tail slot
    const int base_c = base_b + g;
    const int base_d = base_c + g + 1;
    detail::extract_rows<S>(
        qa, g, pattern, [g](int e) { return (e > g) ? -1 : (e == g ? 0 : g - e); }, out.rows, "a");
    detail::extract_rows<S>(
        qb, g, pattern,
        [g, variant2, idx_b0, base_b](int e) {
            if (e > g) return -1;
            if (e == g) return variant2 ? idx_b0 : -1;  // monic for variant I
            return base_b + (g - e) - 1;
        },
        out.rows, "b");
    detail::extract_rows<S>(
        qc, g, pattern,
        [g, base_c](int e) {
            // the x^{g+1} coefficient is monic (I) or the shared b0 (II); its
            // derivative must vanish either way
            return (e > g) ? -1 : base_c + (g + 1 - e) - 1;
        },
        out.rows, "c");
    detail::extract_rows<S>(
        qd, g, pattern,
        [g, base_d](int e) { return (e >= g) ? -1 : base_d + (g - e) - 1; }, out.rows, "d");
    return out;
}

/// Linear combination sum_i c_i D_i of the frame rows.
template <class S, class Point>
Tangent<S> directional_field(const Point& p, const std::vector<S>& c) {
    VectorFieldFrame<S> fr = frame(p);
    if (static_cast<int>(c.size()) != fr.g())
        throw Error("directional_field: direction length must equal g");
    Tangent<S> out(fr.rows.empty() ? 0 : fr.rows[0].size(), scalar_traits<S>::zero());
    for (size_t i = 0; i < fr.rows.size(); ++i)
        for (size_t k = 0; k < out.size(); ++k) out[k] += c[i] * fr.rows[i][k];
    return out;
}

/// Derivative of every spectral coefficient along D_i, computed exactly by
/// chaining the spectral map over perturbation pairs. The contract is that
/// all entries vanish.
template <class S>
std::vector<S> invariant_derivative(const MumfordLikePoint<S>& p, int i) {
    using PS = Perturbed<S>;
    VectorFieldFrame<S> fr = frame(p);
    const Tangent<S>& row = fr.rows.at(static_cast<size_t>(i - 1));
    const std::vector<S> flat = p.flatten();
    std::vector<PS> lifted(flat.size());
    for (size_t k = 0; k < flat.size(); ++k) lifted[k] = PS(flat[k], row[k]);
    auto lp = MumfordLikePoint<PS>::unflatten(p.kind, p.g, lifted);
    SpectralData<PS> sd = spectral_map(lp);
    std::vector<S> out;
    for (int k = 0; k <= sd.f.degree(); ++k) out.push_back(sd.f.coeff(k).deriv);
    return out;
}

template <class S>
std::vector<S> invariant_derivative(const DLaxPoint<S>& p, int i) {
    using PS = Perturbed<S>;
    VectorFieldFrame<S> fr = frame(p);
    const Tangent<S>& row = fr.rows.at(static_cast<size_t>(i - 1));
    const std::vector<S> flat = p.flatten();
    std::vector<PS> lifted(flat.size());
    for (size_t k = 0; k < flat.size(); ++k) lifted[k] = PS(flat[k], row[k]);
    auto lp = DLaxPoint<PS>::unflatten(p.variant, p.g, lifted);
    SpectralData<PS> sd = dlax_invariants(lp);
    std::vector<S> out;
    for (int k = 0; k <= sd.f1.degree(); ++k) out.push_back(sd.f1.coeff(k).deriv);
    for (int k = 0; k <= sd.f2.degree(); ++k) out.push_back(sd.f2.coeff(k).deriv);
    return out;
}

/// Derivative of the b0 coordinate along D_i (a constant of motion for
/// variant II).
template <class S>
S b0_derivative(const DLaxPoint<S>& p, int i) {
    if (p.variant != Family::DLaxII) throw Error("b0_derivative: variant II only");
    VectorFieldFrame<S> fr = frame(p);
    return fr.rows.at(static_cast<size_t>(i - 1)).at(static_cast<size_t>(1 + p.g));
}

}  // namespace mumford
