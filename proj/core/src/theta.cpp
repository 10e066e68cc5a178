#include "mumford/theta.hpp"

#include <algorithm>
#include <cmath>

namespace mumford {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Jacobi eigenvalue sweep for small symmetric matrices.
std::vector<double> sym_eigenvalues(std::vector<std::vector<double>> m) {
    const size_t n = m.size();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
        if (off < 1e-28) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::fabs(m[p][q]) < 1e-20) continue;
                const double phi = 0.5 * std::atan2(2 * m[p][q], m[q][q] - m[p][p]);
                const double c = std::cos(phi), s = std::sin(phi);
                for (size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (size_t i = 0; i < n; ++i) ev[i] = m[i][i];
    return ev;
}

cplx dot(const CVec& a, const CVec& b) {
    cplx s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

CVec matvec(const CMat& m, const CVec& v) {
    CVec out(m.size(), cplx(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace

double min_eig_im(const CMat& omega) {
    const size_t g = omega.size();
    std::vector<std::vector<double>> im(g, std::vector<double>(g, 0.0));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) im[i][j] = omega[i][j].imag();
    const auto ev = sym_eigenvalues(im);
    return *std::min_element(ev.begin(), ev.end());
}

cplx theta(const CVec& z, const CMat& omega, const std::vector<double>& char_a,
           const std::vector<double>& char_b, double tol) {
    const int g = static_cast<int>(z.size());
    const double lam = min_eig_im(omega);
    if (!(lam > 0)) throw NonConvergent("theta: Im(Omega) not positive definite");

    // characteristic reduction: theta[a;b](z) = e(...) * theta(z + Omega a + b)
    CVec a(char_a.begin(), char_a.end()), b(char_b.begin(), char_b.end());
    CVec zs = z;
    {
        const CVec oa = matvec(omega, a);
        for (int i = 0; i < g; ++i) zs[static_cast<size_t>(i)] += oa[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
    }
    double im_norm = 0;
    for (const cplx& v : zs) im_norm += v.imag() * v.imag();
    im_norm = std::sqrt(im_norm);

    // truncation radius from the shell bound
    int R = 1;
    const double sg = std::sqrt(static_cast<double>(g));
    for (; R < 120; ++R) {
        double bound = 0;
        for (int m = R + 1; m < R + 400; ++m) {
            const double count = std::pow(2.0 * m + 1.0, g) - std::pow(2.0 * m - 1.0, g);
            const double t = count * std::exp(-kPi * lam * m * m + 2 * kPi * m * sg * im_norm);
            bound += t;
            if (t < 1e-300) break;
        }
        if (bound < tol) break;
    }
    if (R >= 120) throw NonConvergent("theta: truncation radius exploded");

    cplx sum = 0;
    std::vector<int> n(static_cast<size_t>(g), -R);
    while (true) {
        CVec nv(n.begin(), n.end());
        const cplx quad = dot(nv, matvec(omega, nv));
        const cplx lin = dot(nv, zs);
        sum += std::exp(cplx(0, kPi) * quad + cplx(0, 2 * kPi) * lin);
        int i = 0;
        for (; i < g; ++i) {
            if (n[static_cast<size_t>(i)] < R) {
                ++n[static_cast<size_t>(i)];
                break;
            }
            n[static_cast<size_t>(i)] = -R;
        }
        if (i == g) break;
    }
    // prefactor exp(pi i a^T Omega a + 2 pi i a . (z + b))
    CVec zpb = z;
    for (int i = 0; i < g; ++i) zpb[static_cast<size_t>(i)] += b[static_cast<size_t>(i)];
    const cplx pref = std::exp(cplx(0, kPi) * dot(a, matvec(omega, a)) +
                               cplx(0, 2 * kPi) * dot(a, zpb));
    return pref * sum;
}

ThetaData theta_data_from_elliptic(const EllipticData& ed) {
    ThetaData td;
    td.g = 1;
    td.omega = {{ed.tau}};

    // canonical branch ordering: by real part, then imaginary part
    std::array<cplx, 3> roots = ed.roots;
    std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });

    // match each root to the half period whose wp value reproduces it
    const std::array<cplx, 3> hp = {ed.omega1, ed.omega2, ed.omega1 + ed.omega2};
    const std::array<std::pair<double, double>, 3> chars = {
        std::make_pair(0.0, 0.5),  // omega1 <-> 1/2
        std::make_pair(0.5, 0.0),  // omega2 <-> tau/2
        std::make_pair(0.5, 0.5),  // omega1+omega2 <-> (1+tau)/2
    };
    for (const cplx& r : roots) {
        const cplx target = (r + ed.f1 / 3.0) / 4.0;
        int best = 0;
        double bd = 1e300;
        for (int i = 0; i < 3; ++i) {
            const double d = std::abs(wp(hp[static_cast<size_t>(i)], ed) - target);
            if (d < bd) {
                bd = d;
                best = i;
            }
        }
        td.eta.push_back({chars[static_cast<size_t>(best)].first});
        td.eta_p.push_back({chars[static_cast<size_t>(best)].second});
        td.branch_x.push_back(r);
    }

    // Delta = sum over odd-position branch points a_1, a_3
    td.delta = {cplx(0)};
    for (int k : {0, 2}) {
        td.delta[0] += ed.tau * td.eta[static_cast<size_t>(k)][0] + td.eta_p[static_cast<size_t>(k)][0];
    }

    // V: the (g+1)-subset on which the lambda_k sum to 1, probed at sample z
    const std::array<std::array<int, 2>, 3> candidates = {{{0, 1}, {0, 2}, {1, 2}}};
    double best_defect = 1e300;
    std::array<int, 2> best{0, 1};
    for (const auto& cand : candidates) {
        td.V.assign(cand.begin(), cand.end());
        double defect = 0;
        bool usable = true;
        for (double s : {0.13, 0.31, 0.57}) {
            CVec z = {cplx(s, 0.11 + 0.2 * s)};
            try {
                const CVec lams = lambda_functions(td, z);
                cplx sum = 0;
                for (const cplx& l : lams) sum += l;
                defect = std::max(defect, std::abs(sum - 1.0));
            } catch (const DivisorHit&) {
                usable = false;
                break;
            }
        }
        if (usable && defect < best_defect) {
            best_defect = defect;
            best = cand;
        }
    }
    if (best_defect > 1e-6)
        throw NonConvergent("theta_data_from_elliptic: no partition subset found");
    td.V.assign(best.begin(), best.end());
    return td;
}

CVec lambda_functions(const ThetaData& td, const CVec& z) {
    CVec zd = z;
    for (size_t i = 0; i < zd.size(); ++i) zd[i] += td.delta[i];
    const std::vector<double> zero(static_cast<size_t>(td.g), 0.0);
    const CVec origin(static_cast<size_t>(td.g), cplx(0));
    const cplx th0 = theta(origin, td.omega, zero, zero, td.tol);
    const cplx thz = theta(zd, td.omega, zero, zero, td.tol);
    double scale = std::abs(th0);
    if (std::abs(thz) < 1e-12 * scale)
        throw DivisorHit("lambda_functions: z + Delta on the theta divisor");
    CVec out;
    for (int k : td.V) {
        const auto& a = td.eta[static_cast<size_t>(k)];
        const auto& b = td.eta_p[static_cast<size_t>(k)];
        const cplx n0 = theta(origin, td.omega, a, b, td.tol);
        const cplx nz = theta(zd, td.omega, a, b, td.tol);
        const cplx ratio = (n0 * nz) / (th0 * thz);
        out.push_back(ratio * ratio);
    }
    return out;
}

UniPoly<double> u_from_theta(const ThetaData& td, const CVec& z, double* monic_defect) {
    const CVec lams = lambda_functions(td, z);
    // complex accumulation; the result is real for real data up to tolerance
    std::vector<cplx> acc(static_cast<size_t>(td.g) + 1, cplx(0));
    for (size_t idx = 0; idx < td.V.size(); ++idx) {
        // prod_{j != k} (x - x_j)
        std::vector<cplx> prod = {cplx(1)};
        for (size_t jdx = 0; jdx < td.V.size(); ++jdx) {
            if (jdx == idx) continue;
            const cplx xj = td.branch_x[static_cast<size_t>(td.V[jdx])];
            std::vector<cplx> next(prod.size() + 1, cplx(0));
            for (size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] += prod[i];
                next[i] -= xj * prod[i];
            }
            prod = next;
        }
        for (size_t i = 0; i < prod.size(); ++i) acc[i] += lams[idx] * prod[i];
    }
    const double lead_err = std::abs(acc.back() - 1.0);
    if (monic_defect) *monic_defect = lead_err;
    if (lead_err > 1e-6) throw NonConvergent("u_from_theta: leading coefficient far from 1");
    std::vector<double> coeffs(acc.size());
    for (size_t i = 0; i + 1 < acc.size(); ++i) coeffs[i] = (acc[i] / acc.back()).real();
    coeffs.back() = 1.0;
    return UniPoly<double>(coeffs);
}

}  // namespace mumford
