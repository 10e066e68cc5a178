#include "mumford/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace mumford {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx agm(cplx a, cplx b) {
    for (int i = 0; i < 80; ++i) {
        if (std::abs(a - b) <= 1e-16 * (std::abs(a) + std::abs(b))) break;
        const cplx a1 = (a + b) / 2.0;
        cplx b1 = std::sqrt(a * b);
        // optimal branch: keep the means on the same side
        if (std::abs(a1 - b1) > std::abs(a1 + b1)) b1 = -b1;
        a = a1;
        b = b1;
    }
    return a;
}

/// complete elliptic integral of the first kind, modulus k
cplx ellK(cplx k) { return kPi / (2.0 * agm(1.0 - k, 1.0 + k)); }

/// Lagrange-reduce a lattice basis; keeps Im(w2/w1) > 0.
void reduce_basis(cplx& w1, cplx& w2) {
    for (int i = 0; i < 64; ++i) {
        if (std::abs(w2) < std::abs(w1)) std::swap(w1, w2);
        const double mu = std::round((w2.real() * w1.real() + w2.imag() * w1.imag()) /
                                     std::norm(w1));
        if (mu == 0) break;
        w2 -= mu * w1;
    }
    if ((w1.real() * w2.imag() - w1.imag() * w2.real()) < 0) w2 = -w2;
}

struct WpSeries {
    std::vector<double> c;  // c[k] for k >= 2, coefficients of z^{2k-2}
};

WpSeries wp_series(double g2, double g3, int terms = 28) {
    WpSeries s;
    s.c.assign(static_cast<size_t>(terms) + 1, 0.0);
    if (terms >= 2) s.c[2] = g2 / 20.0;
    if (terms >= 3) s.c[3] = g3 / 28.0;
    for (int k = 4; k <= terms; ++k) {
        double acc = 0;
        for (int m = 2; m <= k - 2; ++m) acc += s.c[static_cast<size_t>(m)] * s.c[static_cast<size_t>(k - m)];
        s.c[static_cast<size_t>(k)] = 3.0 * acc / ((2 * k + 1) * (k - 3));
    }
    return s;
}

}  // namespace

std::array<cplx, 3> cubic_roots(double c2, double c1, double c0) {
    // depressed form t^3 + p t + q with x = t - c2/3
    const double p = c1 - c2 * c2 / 3.0;
    const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    const cplx disc = cplx(q * q / 4.0 + p * p * p / 27.0, 0.0);
    const cplx sq = std::sqrt(disc);
    cplx u3 = -q / 2.0 + sq;
    if (std::abs(u3) < 1e-30) u3 = -q / 2.0 - sq;
    const cplx u = std::pow(u3, 1.0 / 3.0);
    std::array<cplx, 3> out;
    const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
    for (int i = 0; i < 3; ++i) {
        cplx uk = u;
        for (int j = 0; j < i; ++j) uk *= omega;
        cplx t = (std::abs(uk) < 1e-30) ? cplx(0) : uk - p / (3.0 * uk);
        cplx x = t - c2 / 3.0;
        // one Newton polish pass
        for (int it = 0; it < 3; ++it) {
            const cplx fx = ((x + c2) * x + c1) * x + c0;
            const cplx dfx = (3.0 * x + 2.0 * c2) * x + c1;
            if (std::abs(dfx) < 1e-30) break;
            x -= fx / dfx;
        }
        out[static_cast<size_t>(i)] = x;
    }
    return out;
}

EllipticData elliptic_from_cubic(double f1, double f2, double f3) {
    EllipticData ed;
    ed.f1 = f1;
    ed.f2 = f2;
    ed.f3 = f3;
    ed.roots = cubic_roots(f1, f2, f3);
    double scale = 1.0;
    for (const auto& r : ed.roots) scale = std::max(scale, std::abs(r));
    // squarefreeness via the coefficient discriminant (root separation alone
    // is unreliable: the closed-form solver splits double roots by ~1e-8)
    const double disc = 18.0 * f1 * f2 * f3 - 4.0 * f1 * f1 * f1 * f3 + f1 * f1 * f2 * f2 -
                        4.0 * f2 * f2 * f2 - 27.0 * f3 * f3;
    if (std::fabs(disc) < 1e-10 * std::pow(scale, 6))
        throw MultipleRoot("elliptic_from_cubic: repeated root");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(ed.roots[static_cast<size_t>(i)] - ed.roots[static_cast<size_t>(j)]) <
                1e-7 * scale)
                throw MultipleRoot("elliptic_from_cubic: repeated root");

    ed.g2 = (f1 * f1 - 3.0 * f2) / 12.0;
    ed.g3 = -ed.f_eval(-f1 / 3.0) / 16.0;
    for (int i = 0; i < 3; ++i)
        ed.e[static_cast<size_t>(i)] = (ed.roots[static_cast<size_t>(i)] + f1 / 3.0) / 4.0;

    // periods in the normal form of the real invariants (reflect g3 < 0)
    double g2 = ed.g2, g3 = ed.g3;
    const double delta = g2 * g2 * g2 - 27.0 * g3 * g3;
    std::array<cplx, 3> es = ed.e;
    std::sort(es.begin(), es.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    const bool neg_g3 = g3 < 0;
    if (neg_g3) {
        std::array<cplx, 3> rit = {-es[2], -es[1], -es[0]};
        es = rit;
        g3 = -g3;
    }
    cplx om, omp;
    if (delta > 0) {
        std::sort(es.begin(), es.end(),
                  [](const cplx& a, const cplx& b) { return a.real() > b.real(); });
        const cplx e1 = es[0].real(), e2 = es[1].real(), e3 = es[2].real();
        const cplx m = (e2 - e3) / (e1 - e3);
        const cplx Km = ellK(std::sqrt(m));
        const cplx Kpm = ellK(std::sqrt(1.0 - m));
        om = Km / std::sqrt(e1 - e3);
        omp = cplx(0, 1) * om * Kpm / Km;
    } else if (delta < 0) {
        // put the real root in the middle slot
        std::sort(es.begin(), es.end(),
                  [](const cplx& a, const cplx& b) { return a.imag() > b.imag(); });
        const cplx e1 = es[0], e3 = es[2];
        const cplx e2 = cplx(es[1].real(), 0.0);
        const cplx H = std::sqrt((e2 - e3) * (e2 - e1));
        const cplx m = 0.5 - 3.0 * e2 / (4.0 * H);
        const cplx Km = ellK(std::sqrt(m));
        const cplx Kpm = ellK(std::sqrt(1.0 - m));
        const cplx om2 = Km / std::sqrt(H);
        const cplx om2p = cplx(0, 1) * Kpm * om2 / Km;
        om = (om2 - om2p) / 2.0;
        omp = (om2 + om2p) / 2.0;
    } else {
        throw MultipleRoot("elliptic_from_cubic: vanishing discriminant");
    }
    cplx p1, p2;
    if (delta > 0) {
        if (neg_g3) {
            p1 = 2.0 * omp.imag();
            p2 = cplx(0.0, 2.0 * om.real());
        } else {
            p1 = 2.0 * om.real();
            p2 = cplx(0.0, 2.0 * omp.imag());
        }
    } else {
        if (neg_g3) {
            p1 = 4.0 * omp.imag();
            p2 = 2.0 * cplx(omp.imag(), omp.real());
        } else {
            p1 = 4.0 * omp.real();
            p2 = 2.0 * omp;
        }
    }
    ed.w1 = p1;
    ed.w2 = p2;
    reduce_basis(ed.w1, ed.w2);
    ed.omega1 = ed.w1 / 2.0;
    ed.omega2 = ed.w2 / 2.0;
    ed.tau = ed.omega2 / ed.omega1;
    if (!(ed.tau.imag() > 0)) throw NonConvergent("elliptic_from_cubic: bad period orientation");

    // validation: wp at the half periods must reproduce the cubic's roots
    for (const cplx hp : {ed.omega1, ed.omega2, ed.omega1 + ed.omega2}) {
        const cplx val = wp(hp, ed);
        double best = 1e300;
        for (const auto& ek : ed.e) best = std::min(best, std::abs(val - ek));
        if (best > 1e-7 * (std::abs(val) + 1.0))
            throw NonConvergent("elliptic_from_cubic: period validation failed");
    }
    return ed;
}

void wp_pair(cplx z, const EllipticData& ed, cplx& p, cplx& pp) {
    // reduce into the fundamental cell around 0
    const cplx w1 = ed.w1, w2 = ed.w2;
    const double det = w1.real() * w2.imag() - w1.imag() * w2.real();
    const double alpha = (z.real() * w2.imag() - z.imag() * w2.real()) / det;
    const double beta = (z.imag() * w1.real() - z.real() * w1.imag()) / det;
    z -= std::round(alpha) * w1 + std::round(beta) * w2;
    // shortest representative
    for (const cplx d : {w1, w2, w1 + w2, w1 - w2}) {
        while (std::abs(z - d) < std::abs(z)) z -= d;
        while (std::abs(z + d) < std::abs(z)) z += d;
    }
    const double cell = std::min({std::abs(w1), std::abs(w2), std::abs(w1 + w2), std::abs(w1 - w2)});
    if (std::abs(z) < 1e-12 * cell) throw LatticePole("wp: z at a lattice point");

    int doublings = 0;
    while (std::abs(z) > 0.3 * cell) {
        z /= 2.0;
        ++doublings;
    }
    static thread_local double cached_g2 = 0, cached_g3 = 0;
    static thread_local WpSeries series;
    if (series.c.empty() || cached_g2 != ed.g2 || cached_g3 != ed.g3) {
        series = wp_series(ed.g2, ed.g3);
        cached_g2 = ed.g2;
        cached_g3 = ed.g3;
    }
    const cplx z2 = z * z;
    cplx acc = 0, dacc = 0, zpow = z2;  // zpow = z^{2k-2}
    for (size_t k = 2; k < series.c.size(); ++k) {
        acc += series.c[k] * zpow;
        dacc += series.c[k] * static_cast<double>(2 * k - 2) * zpow / z;
        zpow *= z2;
    }
    p = 1.0 / z2 + acc;
    pp = -2.0 / (z2 * z) + dacc;
    // duplication by elliptic-curve point doubling on eta^2 = t^3 - (g2/4)t - g3/4
    for (int i = 0; i < doublings; ++i) {
        const cplx eta = pp / 2.0;
        if (std::abs(eta) < 1e-14 * (std::abs(p) + 1.0))
            throw LatticePole("wp: duplication through a half period");
        const cplx lam = (3.0 * p * p - ed.g2 / 4.0) / (2.0 * eta);
        const cplx pnew = lam * lam - 2.0 * p;
        const cplx etanew = lam * (p - pnew) - eta;
        p = pnew;
        pp = 2.0 * etanew;
    }
}

cplx wp(cplx z, const EllipticData& ed) {
    cplx p, pp;
    wp_pair(z, ed, p, pp);
    return p;
}

cplx wp_prime(cplx z, const EllipticData& ed) {
    cplx p, pp;
    wp_pair(z, ed, p, pp);
    return pp;
}

double wp_ode_residual(cplx z, const EllipticData& ed) {
    cplx p, pp;
    wp_pair(z, ed, p, pp);
    return std::abs(pp * pp - (4.0 * p * p * p - ed.g2 * p - ed.g3));
}

cplx wp_invert(const EllipticData& ed, cplx p0, cplx q0) {
    const int n = 48;
    std::vector<cplx> seeds;
    std::vector<double> score;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx z = (i + 0.5) / n * ed.w1 + (j + 0.5) / n * ed.w2;
            try {
                const cplx val = wp(z, ed);
                seeds.push_back(z);
                score.push_back(std::abs(val - p0));
            } catch (const LatticePole&) {
            }
        }
    std::vector<size_t> order(seeds.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return score[a] < score[b]; });

    const double scale = std::abs(p0) + std::abs(q0) + 1.0;
    for (size_t trial = 0; trial < std::min<size_t>(order.size(), 12); ++trial) {
        cplx z = seeds[order[trial]];
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            cplx p, pp;
            try {
                wp_pair(z, ed, p, pp);
            } catch (const LatticePole&) {
                break;
            }
            const cplx f = p - p0;
            if (std::abs(f) < 1e-12 * scale) {
                ok = true;
                break;
            }
            if (std::abs(pp) < 1e-14) break;
            cplx step = f / pp;
            if (std::abs(step) > 0.2 * std::abs(ed.w1)) step *= 0.2 * std::abs(ed.w1) / std::abs(step);
            z -= step;
        }
        if (!ok) continue;
        cplx p, pp;
        wp_pair(z, ed, p, pp);
        if (std::abs(pp - q0) > std::abs(pp + q0)) {
            z = -z;
            wp_pair(z, ed, p, pp);
        }
        if (std::abs(p - p0) < 1e-9 * scale && std::abs(pp - q0) < 1e-7 * scale) return z;
    }
    throw NonConvergent("wp_invert: no preimage found");
}

}  // namespace mumford
