#pragma once

#include <string>
#include <vector>

#include "mumford/unipoly.hpp"

namespace mumford {

enum class Family { Mumford, EvenMumford, PrymI, PrymII, DLaxI, DLaxII, NYI, NYII };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Mumford: return "mumford";
        case Family::EvenMumford: return "even-mumford";
        case Family::PrymI: return "prym1";
        case Family::PrymII: return "prym2";
        case Family::DLaxI: return "dlax1";
        case Family::DLaxII: return "dlax2";
        case Family::NYI: return "ny1";
        case Family::NYII: return "ny2";
    }
    return "?";
}

Family family_from_name(const std::string& name);

inline bool is_mumford_like(Family f) {
    return f == Family::Mumford || f == Family::EvenMumford || f == Family::PrymI ||
           f == Family::PrymII;
}
inline bool is_dlax(Family f) { return f == Family::DLaxI || f == Family::DLaxII; }
inline bool is_ny(Family f) { return f == Family::NYI || f == Family::NYII; }

/// Spectral/invariant data. Mumford-like families fill `f`; the Lax-chain
/// families fill the (f1, f2) pair of the relevant diagram together with the
/// trace vector h = (h_{1/2}, ..., h_{g+1/2}).
template <class S>
struct SpectralData {
    UniPoly<S> f;
    UniPoly<S> f1, f2;
    std::vector<S> h;
};

// ---------------------------------------------------------------------------
// Mumford-type points (odd Mumford, even Mumford, Prym I/II). Coefficients
// are stored in subscript order: u[0] = u_1 multiplies the second-highest
// power of u(x); monic leading coefficients are implicit.
// ---------------------------------------------------------------------------

template <class S>
struct MumfordLikePoint {
    Family kind = Family::Mumford;
    int g = 1;
    std::vector<S> u, v, w;

    static MumfordLikePoint make(Family kind, int g) {
        MumfordLikePoint p;
        p.kind = kind;
        p.g = g;
        p.u.assign(static_cast<size_t>(u_count(kind, g)), scalar_traits<S>::zero());
        p.v.assign(static_cast<size_t>(v_count(kind, g)), scalar_traits<S>::zero());
        p.w.assign(static_cast<size_t>(w_count(kind, g)), scalar_traits<S>::zero());
        return p;
    }

    static int u_count(Family, int g) { return g; }
    static int v_count(Family kind, int g) { return kind == Family::PrymII ? g + 1 : g; }
    static int w_count(Family kind, int g) {
        switch (kind) {
            case Family::Mumford: return g + 1;
            case Family::EvenMumford: return g + 2;
            default: return g + 1;  // Prym I/II store the independent coefficients
        }
    }

    // exponent of x carried by the j-th stored coefficient (j = 1-based subscript)
    static int u_exp(Family kind, int g, int j) {
        switch (kind) {
            case Family::PrymI: return 2 * g - 2 * j;
            case Family::PrymII: return 2 * g + 1 - 2 * j;
            default: return g - j;
        }
    }
    static int v_exp(Family kind, int g, int j) {
        switch (kind) {
            case Family::PrymI: return 2 * g - 2 * j + 1;
            case Family::PrymII: return 2 * g + 2 - 2 * j;
            default: return g - j;
        }
    }
    static int w_exp(Family kind, int g, int j) {
        switch (kind) {
            case Family::Mumford: return g + 1 - j;
            case Family::EvenMumford: return g + 2 - j;
            case Family::PrymI: return 2 * g + 2 - 2 * j;
            default: return 2 * g + 3 - 2 * j;
        }
    }
    static int u_monic_exp(Family kind, int g) {
        switch (kind) {
            case Family::PrymI: return 2 * g;
            case Family::PrymII: return 2 * g + 1;
            default: return g;
        }
    }
    static int w_monic_exp(Family kind, int g) {
        switch (kind) {
            case Family::Mumford: return g + 1;
            case Family::EvenMumford: return g + 2;
            case Family::PrymI: return 2 * g + 2;
            default: return 2 * g + 3;
        }
    }

    UniPoly<S> u_poly() const {
        UniPoly<S> p = UniPoly<S>::x_pow(u_monic_exp(kind, g));
        for (int j = 1; j <= static_cast<int>(u.size()); ++j)
            p.set_coeff(u_exp(kind, g, j), u[static_cast<size_t>(j - 1)]);
        return p;
    }
    UniPoly<S> v_poly() const {
        UniPoly<S> p;
        for (int j = 1; j <= static_cast<int>(v.size()); ++j)
            p.set_coeff(v_exp(kind, g, j), v[static_cast<size_t>(j - 1)]);
        return p;
    }
    UniPoly<S> w_poly() const {
        UniPoly<S> p = UniPoly<S>::x_pow(w_monic_exp(kind, g));
        for (int j = 1; j <= static_cast<int>(w.size()); ++j)
            p.set_coeff(w_exp(kind, g, j), w[static_cast<size_t>(j - 1)]);
        return p;
    }

    int dim() const { return static_cast<int>(u.size() + v.size() + w.size()); }
    std::vector<S> flatten() const {
        std::vector<S> out;
        out.reserve(static_cast<size_t>(dim()));
        out.insert(out.end(), u.begin(), u.end());
        out.insert(out.end(), v.begin(), v.end());
        out.insert(out.end(), w.begin(), w.end());
        return out;
    }
    static MumfordLikePoint unflatten(Family kind, int g, const std::vector<S>& x) {
        MumfordLikePoint p = make(kind, g);
        size_t k = 0;
        for (auto& a : p.u) a = x.at(k++);
        for (auto& a : p.v) a = x.at(k++);
        for (auto& a : p.w) a = x.at(k++);
        if (k != x.size()) throw Error("MumfordLikePoint: flat size mismatch");
        return p;
    }
};

template <class S>
using MumfordPoint = MumfordLikePoint<S>;

// ---------------------------------------------------------------------------
// D_g^(I/II) Lax points. Variant I: b, c monic; a and d of degree g sharing
// the leading coefficient a_{1/2}. Variant II: a, d monic of degree g+1
// sharing the x^g coefficient; b and c share the leading coefficient b0.
// ---------------------------------------------------------------------------

template <class S>
struct DLaxPoint {
    Family variant = Family::DLaxI;
    int g = 1;
    S a_half = scalar_traits<S>::zero();
    std::vector<S> a_tail;  // a_{3/2} .. a_{(2g+1)/2}
    S b0 = scalar_traits<S>::zero();  // variant II only
    std::vector<S> b_tail;  // b_1 .. b_g
    std::vector<S> c_tail;  // c_1 .. c_{g+1}
    std::vector<S> d_tail;  // d_{3/2} .. d_{(2g+1)/2}

    static DLaxPoint make(Family variant, int g) {
        DLaxPoint p;
        p.variant = variant;
        p.g = g;
        p.a_tail.assign(static_cast<size_t>(g), scalar_traits<S>::zero());
        p.b_tail.assign(static_cast<size_t>(g), scalar_traits<S>::zero());
        p.c_tail.assign(static_cast<size_t>(g) + 1, scalar_traits<S>::zero());
        p.d_tail.assign(static_cast<size_t>(g), scalar_traits<S>::zero());
        return p;
    }

    UniPoly<S> a_poly() const {
        UniPoly<S> p;
        if (variant == Family::DLaxII) p.set_coeff(g + 1, scalar_traits<S>::one());
        p.set_coeff(g, a_half);
        for (int j = 1; j <= g; ++j) p.set_coeff(g - j, a_tail[static_cast<size_t>(j - 1)]);
        return p;
    }
    UniPoly<S> d_poly() const {
        UniPoly<S> p;
        if (variant == Family::DLaxII) p.set_coeff(g + 1, scalar_traits<S>::one());
        p.set_coeff(g, a_half);
        for (int j = 1; j <= g; ++j) p.set_coeff(g - j, d_tail[static_cast<size_t>(j - 1)]);
        return p;
    }
    UniPoly<S> b_poly() const {
        UniPoly<S> p;
        p.set_coeff(g, variant == Family::DLaxI ? scalar_traits<S>::one() : b0);
        for (int j = 1; j <= g; ++j) p.set_coeff(g - j, b_tail[static_cast<size_t>(j - 1)]);
        return p;
    }
    UniPoly<S> c_poly() const {
        UniPoly<S> p;
        p.set_coeff(g + 1, variant == Family::DLaxI ? scalar_traits<S>::one() : b0);
        for (int j = 1; j <= g + 1; ++j) p.set_coeff(g + 1 - j, c_tail[static_cast<size_t>(j - 1)]);
        return p;
    }

    int dim() const { return variant == Family::DLaxI ? 4 * g + 2 : 4 * g + 3; }
    std::vector<S> flatten() const {
        std::vector<S> out;
        out.reserve(static_cast<size_t>(dim()));
        out.push_back(a_half);
        out.insert(out.end(), a_tail.begin(), a_tail.end());
        if (variant == Family::DLaxII) out.push_back(b0);
        out.insert(out.end(), b_tail.begin(), b_tail.end());
        out.insert(out.end(), c_tail.begin(), c_tail.end());
        out.insert(out.end(), d_tail.begin(), d_tail.end());
        return out;
    }
    static DLaxPoint unflatten(Family variant, int g, const std::vector<S>& x) {
        DLaxPoint p = make(variant, g);
        size_t k = 0;
        p.a_half = x.at(k++);
        for (auto& a : p.a_tail) a = x.at(k++);
        if (variant == Family::DLaxII) p.b0 = x.at(k++);
        for (auto& a : p.b_tail) a = x.at(k++);
        for (auto& a : p.c_tail) a = x.at(k++);
        for (auto& a : p.d_tail) a = x.at(k++);
        if (k != x.size()) throw Error("DLaxPoint: flat size mismatch");
        return p;
    }

    /// Reconstruct a point from full entry polynomials, validating the shape.
    static DLaxPoint from_polys(Family variant, int g, const UniPoly<S>& a, const UniPoly<S>& b,
                                const UniPoly<S>& c, const UniPoly<S>& d);
};

// ---------------------------------------------------------------------------
// Noumi-Yamada states at alpha = 0. N = 2g+1 (I) or 2g+2 (II); q carries the
// dynamics, e the fixed parameters; variant II requires the alternating-sum
// constraint.
// ---------------------------------------------------------------------------

template <class S>
struct NYState {
    Family variant = Family::NYI;
    int g = 1;
    std::vector<S> q, e;

    int n() const { return variant == Family::NYI ? 2 * g + 1 : 2 * g + 2; }

    static NYState make(Family variant, int g) {
        NYState s;
        s.variant = variant;
        s.g = g;
        s.q.assign(static_cast<size_t>(s.n()), scalar_traits<S>::zero());
        s.e.assign(static_cast<size_t>(s.n()), scalar_traits<S>::zero());
        return s;
    }

    const S& qc(int k) const {  // cyclic, 1-based
        int i = (k - 1) % n();
        if (i < 0) i += n();
        return q[static_cast<size_t>(i)];
    }
    const S& ec(int k) const {
        int i = (k - 1) % n();
        if (i < 0) i += n();
        return e[static_cast<size_t>(i)];
    }

    /// sum q_{2k} - sum q_{2k-1}; the defining constraint of Q_g^(II) is that
    /// this vanishes.
    S constraint_defect() const {
        S s = scalar_traits<S>::zero();
        for (int k = 1; k <= n(); ++k) {
            if (k % 2 == 0)
                s += qc(k);
            else
                s -= qc(k);
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

template <class S>
std::vector<std::string> validate(const MumfordLikePoint<S>& p) {
    std::vector<std::string> out;
    if (p.g < 1) out.push_back("genus must be >= 1");
    if (static_cast<int>(p.u.size()) != MumfordLikePoint<S>::u_count(p.kind, p.g))
        out.push_back("u coefficient count mismatch");
    if (static_cast<int>(p.v.size()) != MumfordLikePoint<S>::v_count(p.kind, p.g))
        out.push_back("v coefficient count mismatch");
    if (static_cast<int>(p.w.size()) != MumfordLikePoint<S>::w_count(p.kind, p.g))
        out.push_back("w coefficient count mismatch");
    return out;
}

template <class S>
std::vector<std::string> validate(const DLaxPoint<S>& p) {
    std::vector<std::string> out;
    if (p.g < 1) out.push_back("genus must be >= 1");
    if (static_cast<int>(p.a_tail.size()) != p.g) out.push_back("a coefficient count mismatch");
    if (static_cast<int>(p.b_tail.size()) != p.g) out.push_back("b coefficient count mismatch");
    if (static_cast<int>(p.c_tail.size()) != p.g + 1) out.push_back("c coefficient count mismatch");
    if (static_cast<int>(p.d_tail.size()) != p.g) out.push_back("d coefficient count mismatch");
    return out;
}

template <class S>
std::vector<std::string> validate(const NYState<S>& s) {
    std::vector<std::string> out;
    if (s.g < 1) out.push_back("genus must be >= 1");
    if (static_cast<int>(s.q.size()) != s.n()) out.push_back("q length mismatch");
    if (static_cast<int>(s.e.size()) != s.n()) out.push_back("e length mismatch");
    if (s.variant == Family::NYII) {
        const S defect = s.constraint_defect();
        if constexpr (is_exact_scalar_v<S>) {
            if (!scalar_is_zero(defect)) out.push_back("constraint sum mismatch");
        } else {
            if (abs_approx(defect) > 1e-9) out.push_back("constraint sum mismatch");
        }
    }
    return out;
}

/// Equality up to the float-mode tolerance; exact scalars compare exactly.
template <class S>
bool approx_equal(const S& a, const S& b, double scale = 1.0) {
    if constexpr (is_exact_scalar_v<S>)
        return a == b;
    else
        return abs_approx(a - b) <= 1e-9 * (scale + 1.0);
}

/// Parity / monicity validation of raw polynomials against a Mumford-like
/// shape; used when reconstructing points from full polynomials.
template <class S>
MumfordLikePoint<S> mumford_like_from_polys(Family kind, int g, const UniPoly<S>& u,
                                            const UniPoly<S>& v, const UniPoly<S>& w) {
    using P = MumfordLikePoint<S>;
    MumfordLikePoint<S> p = P::make(kind, g);
    auto take = [&](const UniPoly<S>& poly, int monic_exp, auto exp_of, std::vector<S>& dst,
                    const char* name) {
        const double scale = poly.max_abs();
        if (monic_exp >= 0) {
            if (!approx_equal(poly.coeff(monic_exp), scalar_traits<S>::one(), scale))
                throw ShapeViolation(std::string(name) + ": not monic at required degree");
            if (poly.degree() > monic_exp)
                throw ShapeViolation(std::string(name) + ": degree too high");
        }
        std::vector<bool> allowed(static_cast<size_t>(std::max(poly.degree(), monic_exp)) + 2,
                                  false);
        if (monic_exp >= 0) allowed[static_cast<size_t>(monic_exp)] = true;
        for (int j = 1; j <= static_cast<int>(dst.size()); ++j) {
            const int e = exp_of(j);
            dst[static_cast<size_t>(j - 1)] = poly.coeff(e);
            if (e >= 0) allowed[static_cast<size_t>(e)] = true;
        }
        for (int i = 0; i <= poly.degree(); ++i)
            if (!allowed[static_cast<size_t>(i)] &&
                !approx_equal(poly.coeff(i), scalar_traits<S>::zero(), scale))
                throw ShapeViolation(std::string(name) + ": coefficient outside shape");
    };
    take(u, P::u_monic_exp(kind, g), [&](int j) { return P::u_exp(kind, g, j); }, p.u, "u");
    take(v, -1, [&](int j) { return P::v_exp(kind, g, j); }, p.v, "v");
    take(w, P::w_monic_exp(kind, g), [&](int j) { return P::w_exp(kind, g, j); }, p.w, "w");
    if (v.degree() > (p.v.empty() ? -1 : P::v_exp(kind, g, 1)))
        throw ShapeViolation("v: degree too high");
    return p;
}

template <class S>
DLaxPoint<S> DLaxPoint<S>::from_polys(Family variant, int g, const UniPoly<S>& a,
                                      const UniPoly<S>& b, const UniPoly<S>& c,
                                      const UniPoly<S>& d) {
    DLaxPoint<S> p = make(variant, g);
    const S one = scalar_traits<S>::one();
    const double scale =
        std::max(std::max(a.max_abs(), b.max_abs()), std::max(c.max_abs(), d.max_abs()));
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw ShapeViolation(what);
    };
    if (variant == Family::DLaxI) {
        expect(a.degree() <= g && d.degree() <= g, "a/d degree too high");
        expect(approx_equal(a.coeff(g), d.coeff(g), scale),
               "a and d must share the leading coefficient");
        expect(b.degree() == g && approx_equal(b.coeff(g), one, scale),
               "b must be monic of degree g");
        expect(c.degree() == g + 1 && approx_equal(c.coeff(g + 1), one, scale),
               "c must be monic of degree g+1");
        p.a_half = a.coeff(g);
    } else {
        expect(a.degree() == g + 1 && approx_equal(a.coeff(g + 1), one, scale),
               "a must be monic of degree g+1");
        expect(d.degree() == g + 1 && approx_equal(d.coeff(g + 1), one, scale),
               "d must be monic of degree g+1");
        expect(approx_equal(a.coeff(g), d.coeff(g), scale),
               "a and d must share the x^g coefficient");
        expect(b.degree() <= g, "b degree too high");
        expect(c.degree() <= g + 1, "c degree too high");
        expect(approx_equal(b.coeff(g), c.coeff(g + 1), scale),
               "b and c must share the leading coefficient b0");
        p.a_half = a.coeff(g);
        p.b0 = b.coeff(g);
    }
    for (int j = 1; j <= g; ++j) {
        p.a_tail[static_cast<size_t>(j - 1)] = a.coeff(g - j);
        p.b_tail[static_cast<size_t>(j - 1)] = b.coeff(g - j);
        p.d_tail[static_cast<size_t>(j - 1)] = d.coeff(g - j);
    }
    for (int j = 1; j <= g + 1; ++j) p.c_tail[static_cast<size_t>(j - 1)] = c.coeff(g + 1 - j);
    return p;
}

/// u w + v^2 with the family's mandated degree, monicity and parity.
template <class S>
SpectralData<S> spectral_map(const MumfordLikePoint<S>& p) {
    SpectralData<S> out;
    out.f = p.u_poly() * p.w_poly() + p.v_poly() * p.v_poly();
    const int expect_deg = MumfordLikePoint<S>::u_monic_exp(p.kind, p.g) +
                           MumfordLikePoint<S>::w_monic_exp(p.kind, p.g);
    if (out.f.degree() != expect_deg || !(out.f.lead() == scalar_traits<S>::one()))
        throw ShapeViolation("spectral_map: image degree/monicity violated");
    if (p.kind == Family::PrymI || p.kind == Family::PrymII) {
        for (int i = 1; i <= out.f.degree(); i += 2)
            if (!scalar_is_zero(out.f.coeff(i)))
                throw ShapeViolation("spectral_map: Prym image must be even in x");
    }
    return out;
}

/// The per-variant invariants of the diagrams: (Tr T, -det T) for variant I,
/// (Tr T, det T) for variant II, plus the trace vector h in subscript order.
template <class S>
SpectralData<S> dlax_invariants(const DLaxPoint<S>& p) {
    SpectralData<S> out;
    const UniPoly<S> a = p.a_poly(), b = p.b_poly(), c = p.c_poly(), d = p.d_poly();
    out.f1 = a + d;
    const UniPoly<S> det = a * d - b * c;
    out.f2 = (p.variant == Family::DLaxI) ? -det : det;
    for (int j = 0; j <= p.g; ++j) out.h.push_back(out.f1.coeff(p.g - j));
    if (p.variant == Family::DLaxII &&
        !(out.f1.coeff(p.g + 1) == scalar_from_int<S>(2)))
        throw ShapeViolation("dlax_invariants: trace must open with 2 x^{g+1}");
    return out;
}

/// Max-norm distance between the spectral image of p and a target curve f.
template <class S>
S level_set_residual(const MumfordLikePoint<S>& p, const UniPoly<S>& f) {
    const UniPoly<S> diff = spectral_map(p).f - f;
    S m = scalar_traits<S>::zero();
    for (int i = 0; i <= diff.degree(); ++i) {
        S a = diff.coeff(i);
        if (a < scalar_traits<S>::zero()) a = -a;
        if (m < a) m = a;
    }
    return m;
}

}  // namespace mumford
