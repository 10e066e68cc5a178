#pragma once

#include <utility>
#include <vector>

#include "mumford/phase_space.hpp"
#include "mumford/unipoly.hpp"

namespace mumford {

/// State of the cyclic dressing chain: the q-check variables together with
/// the parameters e, both indexed cyclically.
template <class S>
struct ChainState {
    std::vector<S> qc, e;

    int n() const { return static_cast<int>(qc.size()); }
    const S& qcc(int k) const {  // cyclic, 1-based
        int i = (k - 1) % n();
        if (i < 0) i += n();
        return qc[static_cast<size_t>(i)];
    }
    const S& ecc(int k) const {
        int i = (k - 1) % n();
        if (i < 0) i += n();
        return e[static_cast<size_t>(i)];
    }
};

/// 2x2 polynomial matrix, the working form of the Lax products.
template <class S>
struct Mat2 {
    UniPoly<S> a, b, c, d;

    static Mat2 identity() {
        Mat2 m;
        m.a = UniPoly<S>::constant(scalar_traits<S>::one());
        m.d = m.a;
        return m;
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        Mat2 r;
        r.a = x.a * y.a + x.b * y.c;
        r.b = x.a * y.b + x.b * y.d;
        r.c = x.c * y.a + x.d * y.c;
        r.d = x.c * y.b + x.d * y.d;
        return r;
    }
    UniPoly<S> trace() const { return a + d; }
    UniPoly<S> det() const { return a * d - b * c; }
};

// ---------------------------------------------------------------------------
// Right-hand sides
// ---------------------------------------------------------------------------

/// The isospectral (alpha = 0) Noumi-Yamada right-hand side, verbatim cyclic
/// sums for both periodicities.
template <class S>
std::vector<S> ny_rhs(const NYState<S>& s) {
    const int g = s.g, N = s.n();
    std::vector<S> out(static_cast<size_t>(N), scalar_traits<S>::zero());
    if (s.variant == Family::NYI) {
        for (int k = 1; k <= N; ++k) {
            S sum = scalar_traits<S>::zero();
            for (int i = 1; i <= g; ++i) sum += s.qc(k + 2 * i - 1) - s.qc(k + 2 * i);
            out[static_cast<size_t>(k - 1)] = s.qc(k) * sum + s.ec(k) - s.ec(k + 1);
        }
    } else {
        for (const auto& msg : validate(s))
            throw ShapeViolation(std::string("ny_rhs: ") + msg);
        for (int k = 1; k <= N; ++k) {
            S sum = scalar_traits<S>::zero();
            for (int i = 1; i <= g; ++i)
                for (int j = i; j <= g; ++j)
                    sum += s.qc(k + 2 * i - 1) * s.qc(k + 2 * j) -
                           s.qc(k + 2 * i) * s.qc(k + 2 * j + 1);
            S esum = scalar_traits<S>::zero();
            S qsum = scalar_traits<S>::zero();
            for (int i = 1; i <= g + 1; ++i) {
                esum += s.ec(k + 2 * i - 1) - s.ec(k + 2 * i);
                qsum += s.qc(k + 2 * i - 1);
            }
            out[static_cast<size_t>(k - 1)] =
                s.qc(k) * sum + esum * s.qc(k) + (s.ec(k) - s.ec(k + 1)) * qsum;
        }
    }
    return out;
}

/// Dressing-chain right-hand side. The cyclic linear system
/// qc_k' + qc_{k+1}' = r_k is uniquely solvable only for odd period.
template <class S>
std::vector<S> dressing_rhs(const ChainState<S>& s) {
    const int N = s.n();
    if (N % 2 == 0) throw EvenPeriod("dressing_rhs: even period is under-determined");
    std::vector<S> r(static_cast<size_t>(N));
    for (int k = 1; k <= N; ++k)
        r[static_cast<size_t>(k - 1)] =
            s.qcc(k + 1) * s.qcc(k + 1) - s.qcc(k) * s.qcc(k) + s.ecc(k) - s.ecc(k + 1);
    std::vector<S> out(static_cast<size_t>(N));
    const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);
    for (int k = 1; k <= N; ++k) {
        S acc = scalar_traits<S>::zero();
        for (int j = 0; j < N; ++j) {
            const S& rj = r[static_cast<size_t>((k - 1 + j) % N)];
            if (j % 2 == 0)
                acc += rj;
            else
                acc -= rj;
        }
        out[static_cast<size_t>(k - 1)] = half * acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Variable transformation q_k = qc_k + qc_{k+1}
// ---------------------------------------------------------------------------

template <class S>
NYState<S> q_from_qcheck(const ChainState<S>& s) {
    const int N = s.n();
    NYState<S> out;
    out.variant = (N % 2 == 1) ? Family::NYI : Family::NYII;
    out.g = (N % 2 == 1) ? (N - 1) / 2 : (N - 2) / 2;
    out.q.resize(static_cast<size_t>(N));
    out.e = s.e;
    for (int k = 1; k <= N; ++k) out.q[static_cast<size_t>(k - 1)] = s.qcc(k) + s.qcc(k + 1);
    return out;
}

/// Gauge choice for lifting q to qc when the period is even: either an
/// explicit value of qc_1 or the canonical one solving the D_g^(II) shape
/// constraint (equal x^g coefficients of the Lax product's diagonal).
template <class S>
struct GaugeParam {
    bool canonical = true;
    S c = scalar_traits<S>::zero();

    static GaugeParam value(S v) { return {false, std::move(v)}; }
};

template <class S>
Mat2<S> lambda_product(const ChainState<S>& s);

template <class S>
ChainState<S> lift_with_gauge(const NYState<S>& s, const S& c) {
    const int N = s.n();
    ChainState<S> out;
    out.e = s.e;
    out.qc.resize(static_cast<size_t>(N));
    out.qc[0] = c;
    for (int k = 1; k < N; ++k)
        out.qc[static_cast<size_t>(k)] = s.q[static_cast<size_t>(k - 1)] - out.qc[static_cast<size_t>(k - 1)];
    const S defect = out.qc[static_cast<size_t>(N - 1)] + out.qc[0] - s.q[static_cast<size_t>(N - 1)];
    if constexpr (is_exact_scalar_v<S>) {
        if (!scalar_is_zero(defect)) throw Unsolvable("lift: constraint violated, no lift exists");
    } else {
        if (abs_approx(defect) > 1e-9) throw Unsolvable("lift: constraint violated, no lift exists");
    }
    return out;
}

/// Gauge fixing the D_g^(II) shape: the x^g coefficient of a - d in the Lax
/// product is affine in the gauge and must vanish for the product to land in
/// the variant-II phase space.
template <class S>
S shape_gauge(const NYState<S>& s) {
    if (s.variant != Family::NYII) throw Error("shape_gauge: even period only");
    auto defect = [&](const S& c) {
        Mat2<S> t = lambda_product(lift_with_gauge(s, c));
        return (t.a - t.d).coeff(s.g);
    };
    const S s0 = defect(scalar_traits<S>::zero());
    const S s1 = defect(scalar_traits<S>::one());
    const S slope = s1 - s0;
    if (scalar_is_zero(slope)) throw Unsolvable("shape_gauge: degenerate state");
    return -s0 / slope;
}

template <class S>
ChainState<S> qcheck_from_q(const NYState<S>& s, const GaugeParam<S>& gauge = {}) {
    const int N = s.n();
    if (N % 2 == 1) {
        ChainState<S> out;
        out.e = s.e;
        out.qc.resize(static_cast<size_t>(N));
        const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);
        for (int k = 1; k <= N; ++k) {
            S acc = scalar_traits<S>::zero();
            for (int j = 0; j < N; ++j) {
                const S& qj = s.qc(k + j);
                if (j % 2 == 0)
                    acc += qj;
                else
                    acc -= qj;
            }
            out.qc[static_cast<size_t>(k - 1)] = half * acc;
        }
        return out;
    }
    return lift_with_gauge(s, gauge.canonical ? shape_gauge(s) : gauge.c);
}

// ---------------------------------------------------------------------------
// The Lax product and the maps of the three diagrams
// ---------------------------------------------------------------------------

/// T(x) = l_N(x - e_N) l_{N-1}(x - e_{N-1}) ... l_1(x - e_1)
template <class S>
Mat2<S> lambda_product(const ChainState<S>& s) {
    Mat2<S> t = Mat2<S>::identity();
    for (int k = 1; k <= s.n(); ++k) {
        Mat2<S> lk;
        const S& q = s.qcc(k);
        lk.a = UniPoly<S>::constant(q);
        lk.b = UniPoly<S>::constant(scalar_traits<S>::one());
        lk.c = UniPoly<S>{q * q - s.ecc(k), scalar_traits<S>::one()};  // (x - e_k) + qc_k^2
        lk.d = lk.a;
        t = lk * t;
    }
    return t;
}

template <class S>
DLaxPoint<S> lambda_map(const ChainState<S>& s) {
    const int N = s.n();
    const Family variant = (N % 2 == 1) ? Family::DLaxI : Family::DLaxII;
    const int g = (N % 2 == 1) ? (N - 1) / 2 : (N - 2) / 2;
    Mat2<S> t = lambda_product(s);
    return DLaxPoint<S>::from_polys(variant, g, t.a, t.b, t.c, t.d);
}

/// Trace coefficients h = (h_{1/2}, ..., h_{g+1/2}) of the Lax product.
template <class S>
std::vector<S> psi_doubleprime(const ChainState<S>& s) {
    const int N = s.n();
    const int g = (N % 2 == 1) ? (N - 1) / 2 : (N - 2) / 2;
    const UniPoly<S> tr = lambda_product(s).trace();
    if (N % 2 == 1) {
        if (tr.degree() > g) throw ShapeViolation("psi'': trace degree too high");
    } else {
        if (!approx_equal(tr.coeff(g + 1), scalar_from_int<S>(2), tr.max_abs()) ||
            tr.degree() != g + 1)
            throw ShapeViolation("psi'': trace must open with 2 x^{g+1}");
    }
    std::vector<S> h;
    for (int j = 0; j <= g; ++j) h.push_back(tr.coeff(g - j));
    return h;
}

template <class S>
std::vector<S> psi_doubleprime(const NYState<S>& s, const GaugeParam<S>& gauge = {}) {
    if (s.variant == Family::NYI) return psi_doubleprime(qcheck_from_q(s));
    return psi_doubleprime(qcheck_from_q(s, gauge));
}

/// Phi of the two diagrams: variant I maps (a,b;c,d) to the Mumford triple
/// (u, v, w) = (b, (a-d)/2, c); variant II carries the 1/b0 prefactor and is
/// only defined off the b0 = 0 locus.
template <class S>
MumfordLikePoint<S> phi_map(const DLaxPoint<S>& p) {
    const UniPoly<S> a = p.a_poly(), b = p.b_poly(), c = p.c_poly(), d = p.d_poly();
    const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);
    UniPoly<S> u = b, v = (a - d) * half, w = c;
    if (p.variant == Family::DLaxII) {
        if (scalar_is_zero(p.b0)) throw ZeroB0("phi_map: b0 = 0");
        u = u.scaled_by_inverse(p.b0);
        v = v.scaled_by_inverse(p.b0);
        w = w.scaled_by_inverse(p.b0);
    }
    return mumford_like_from_polys(Family::Mumford, p.g, u, v, w);
}

/// phi of the two diagrams, mapping the invariant pair to the spectral curve
/// of the Mumford image.
template <class S>
UniPoly<S> phi_small(Family variant, const UniPoly<S>& f1, const UniPoly<S>& f2, int g) {
    const S quarter = scalar_traits<S>::one() / scalar_from_int<S>(4);
    if (variant == Family::DLaxI) {
        if (f1.degree() > g) throw ShapeViolation("phi_small: f1 degree too high");
        if (f2.degree() != 2 * g + 1 || !(f2.lead() == scalar_traits<S>::one()))
            throw ShapeViolation("phi_small: f2 must be monic of degree 2g+1");
        return f1 * f1 * quarter + f2;
    }
    if (f1.degree() != g + 1 || !(f1.lead() == scalar_from_int<S>(2)))
        throw ShapeViolation("phi_small: f1 must open with 2 x^{g+1}");
    if (f2.degree() != 2 * g + 2 || !(f2.lead() == scalar_traits<S>::one()))
        throw ShapeViolation("phi_small: f2 must be monic of degree 2g+2");
    const S denom = f1.coeff(g) - f2.coeff(2 * g + 1);
    if (scalar_is_zero(denom)) throw DegenerateFiber("phi_small: f1^(1) = f2^(1)");
    UniPoly<S> f = (f1 * f1 * quarter - f2).scaled_by_inverse(denom);
    if (f.degree() != 2 * g + 1 || !(f.lead() == scalar_traits<S>::one()))
        throw ShapeViolation("phi_small: top-degree cancellation failed");
    return f;
}

/// Inverse of Phi into the fiber over (f1, f2). Variant I ignores sigma and
/// b0star; variant II lands on the sheet b0 = sigma b0star.
template <class S>
DLaxPoint<S> phi_inverse(const MumfordLikePoint<S>& l, const UniPoly<S>& f1, Family variant,
                         int sigma = 1, const S& b0star = scalar_traits<S>::one()) {
    if (l.kind != Family::Mumford) throw Error("phi_inverse: expects a Mumford point");
    const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);
    const UniPoly<S> u = l.u_poly(), v = l.v_poly(), w = l.w_poly();
    const UniPoly<S> f1h = f1 * half;
    if (variant == Family::DLaxI)
        return DLaxPoint<S>::from_polys(variant, l.g, v + f1h, u, w, -v + f1h);
    if (scalar_is_zero(b0star)) throw ZeroB0("phi_inverse: b0* = 0");
    if (sigma != 1 && sigma != -1) throw Error("phi_inverse: sigma must be +1 or -1");
    const S sb = (sigma == 1) ? b0star : -b0star;
    return DLaxPoint<S>::from_polys(variant, l.g, v * sb + f1h, u * sb, w * sb, -(v * sb) + f1h);
}

/// lambda of diagram (diag-QT): the invariant pair reached from the trace
/// vector. Each factor has determinant -x, so the second component of
/// psi' o Lambda is prod (x - e_k) for both parities: -det T for odd period,
/// +det T for even.
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> lambda_small(Family ny_variant, const std::vector<S>& h,
                                               const std::vector<S>& e, int g) {
    UniPoly<S> f1;
    if (ny_variant == Family::NYII) f1.set_coeff(g + 1, scalar_from_int<S>(2));
    for (int j = 0; j <= g; ++j) f1.set_coeff(g - j, h.at(static_cast<size_t>(j)));
    UniPoly<S> f2 = UniPoly<S>::constant(scalar_traits<S>::one());
    for (const S& ek : e) f2 = f2 * UniPoly<S>{-ek, scalar_traits<S>::one()};
    return {f1, f2};
}

// ---------------------------------------------------------------------------
// g = 1 coordinate relations
// ---------------------------------------------------------------------------

/// Verbatim variant-I relations: u1 and v_{3/2} of the Mumford image in terms
/// of q, h and e.
template <class S>
std::pair<S, S> q1_relations(const NYState<S>& s, const std::vector<S>& h) {
    if (s.variant != Family::NYI || s.g != 1) throw Error("q1_relations: variant I, g = 1 only");
    const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);
    const S u1 = -s.ec(2) + s.qc(1) * s.qc(2);
    const S v32 = -s.qc(2) * (u1 + s.ec(1)) + half * (h.at(0) * u1 - h.at(1));
    return {u1, v32};
}

/// Verbatim variant-II relations (the b0 identity b0 = q1+q3 = q2+q4 is
/// checked; the displayed v line is evaluated as printed).
template <class S>
std::pair<S, S> q1_relations_II(const NYState<S>& s, const S& b0, const std::vector<S>& h) {
    if (s.variant != Family::NYII || s.g != 1) throw Error("q1_relations_II: variant II, g = 1 only");
    if (scalar_is_zero(b0)) throw ZeroB0("q1_relations_II: b0 = 0");
    const S half = scalar_traits<S>::one() / scalar_from_int<S>(2);
    const S u1 = (-s.ec(2) * s.qc(3) - s.ec(3) * s.qc(1) + s.qc(1) * s.qc(2) * s.qc(3)) / b0;
    const S v32 = (u1 * (s.ec(3) - s.qc(2) * s.qc(3)) + half * (h.at(0) * u1 - h.at(1))) / b0;
    return {u1, v32};
}

/// b0 from the variant-II state; throws when the two displayed expressions
/// disagree (they agree exactly on the constraint surface for g = 1).
template <class S>
S b0_from_state(const NYState<S>& s) {
    if (s.variant != Family::NYII) throw Error("b0_from_state: variant II only");
    if (s.g == 1) {
        const S b1 = s.qc(1) + s.qc(3);
        const S b2 = s.qc(2) + s.qc(4);
        if constexpr (is_exact_scalar_v<S>) {
            if (!(b1 == b2)) throw ShapeViolation("b0_from_state: q1+q3 != q2+q4");
        } else {
            if (abs_approx(b1 - b2) > 1e-9) throw ShapeViolation("b0_from_state: q1+q3 != q2+q4");
        }
        return b1;
    }
    // general genus: read b0 off the Lax product at the canonical gauge
    return lambda_map(qcheck_from_q(s)).b0;
}

// ---------------------------------------------------------------------------
// Exact inverse of the Lax product by factor peeling. T(e_k) has rank one
// because det l_k(x - e_k) vanishes at e_k, which exposes qc_k = a(e_k)/b(e_k);
// the factor is then divided out and the process repeats.
// ---------------------------------------------------------------------------

template <class S>
std::vector<S> peel_chain(Mat2<S> t, const std::vector<S>& e) {
    const int N = static_cast<int>(e.size());
    std::vector<S> qc;
    qc.reserve(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        const S& ek = e[static_cast<size_t>(k)];
        const S bek = t.b.eval(ek);
        if (scalar_is_zero(bek)) throw Error("peel_chain: b(e_k) = 0, state not generic");
        const S q = t.a.eval(ek) / bek;
        qc.push_back(q);
        if (k == N - 1) break;
        // T <- T * l_k(x - e_k)^{-1}; the adjugate divides out -(x - e_k)
        Mat2<S> adj;
        adj.a = UniPoly<S>::constant(q);
        adj.b = UniPoly<S>::constant(-scalar_traits<S>::one());
        adj.c = UniPoly<S>{ek - q * q, -scalar_traits<S>::one()};
        adj.d = adj.a;
        Mat2<S> prod = t * adj;
        const UniPoly<S> divisor{-ek, scalar_traits<S>::one()};
        t.a = -exact_div(prod.a, divisor);
        t.b = -exact_div(prod.b, divisor);
        t.c = -exact_div(prod.c, divisor);
        t.d = -exact_div(prod.d, divisor);
    }
    return qc;
}

}  // namespace mumford
