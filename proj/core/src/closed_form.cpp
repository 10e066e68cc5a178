#include "mumford/closed_form.hpp"

#include <cmath>

namespace mumford {

MumfordPoint<double> G1ExactFlow::at(double t) const {
    cplx p, pp;
    try {
        wp_pair(rho * t + c, ed, p, pp);
    } catch (const LatticePole&) {
        throw PoleHit("g1 closed form: trajectory at a pole");
    }
    if (std::abs(p) > 1e10) throw PoleHit("g1 closed form: wp beyond pole guard");
    const cplx X = 4.0 * p - ed.f1 / 3.0;
    const cplx v = vfac * pp;
    const double scale = std::abs(X) + std::abs(v) + 1.0;
    if (std::abs(X.imag()) > 1e-7 * scale || std::abs(v.imag()) > 1e-7 * scale)
        throw NormalizationMismatch("g1 closed form: non-real trajectory value");
    MumfordPoint<double> out = MumfordPoint<double>::make(Family::Mumford, 1);
    out.u[0] = -X.real();
    out.v[0] = v.real();
    // w = (f - v^2) / u, exact on the level set
    UniPoly<double> num = f - UniPoly<double>::constant(out.v[0] * out.v[0]);
    auto [q, r] = divmod(num, UniPoly<double>{out.u[0], 1.0});
    if (r.max_abs() > 1e-6 * (num.max_abs() + 1.0))
        throw NormalizationMismatch("g1 closed form: level-set division not exact");
    out.w[0] = q.coeff(1);
    out.w[1] = q.coeff(0);
    return out;
}

G1ExactFlow mumford_g1_exact(const MumfordPoint<double>& p0, double kappa) {
    if (p0.g != 1 || p0.kind != Family::Mumford)
        throw Error("mumford_g1_exact: genus-1 Mumford point required");
    if (kappa == 0.0) throw Error("mumford_g1_exact: zero clock factor");
    G1ExactFlow flow;
    flow.p0 = p0;
    flow.f = spectral_map(p0).f;
    flow.ed = elliptic_from_cubic(flow.f.coeff(2), flow.f.coeff(1), flow.f.coeff(0));
    flow.rho = std::fabs(kappa);
    flow.vfac = -4.0 * flow.rho / kappa;
    const double x0 = -p0.u[0];
    const cplx P0 = (x0 + flow.ed.f1 / 3.0) / 4.0;
    const cplx Q0 = -kappa * p0.v[0] / (4.0 * flow.rho);
    // consistency of the initial pair with the curve equation
    const cplx lhs = Q0 * Q0;
    const cplx rhs = 4.0 * P0 * P0 * P0 - flow.ed.g2 * P0 - flow.ed.g3;
    if (std::abs(lhs - rhs) > 1e-7 * (std::abs(lhs) + std::abs(rhs) + 1.0))
        throw NormalizationMismatch("mumford_g1_exact: initial data off the level set");
    flow.c = wp_invert(flow.ed, P0, Q0);
    return flow;
}

NYExactFlow q1_exact(const NYState<double>& q0) {
    if (q0.g != 1) throw Error("q1_exact: g = 1 only");
    NYExactFlow flow;
    flow.variant = q0.variant;
    flow.e = q0.e;

    const ChainState<double> chain = qcheck_from_q(q0);
    const DLaxPoint<double> T0 = lambda_map(chain);
    const SpectralData<double> sd = dlax_invariants(T0);
    flow.f1 = sd.f1;
    flow.h = sd.h;
    const Family dvar = (q0.variant == Family::NYI) ? Family::DLaxI : Family::DLaxII;
    // the NY field pushes forward to -2 D_1 on the Lax side; Phi then carries
    // an extra b0 in variant II
    double kappa = -2.0;
    if (dvar == Family::DLaxII) {
        flow.b0 = T0.b0;
        if (std::fabs(flow.b0) < 1e-12) throw ZeroB0("q1_exact: b0 = 0");
        flow.b0star = std::fabs(flow.b0);
        flow.sigma = flow.b0 >= 0 ? 1 : -1;
        kappa = -2.0 * flow.b0;
    }
    const UniPoly<double> fcurve = phi_small(dvar, sd.f1, sd.f2, 1);
    const MumfordPoint<double> l0 = phi_map(T0);
    flow.mflow = mumford_g1_exact(l0, kappa);
    (void)fcurve;  // equals mflow.f by the diagram; asserted in tests

    // round-trip check at t = 0
    const std::vector<double> back = flow.at(0.0);
    for (size_t i = 0; i < back.size(); ++i)
        if (std::fabs(back[i] - q0.q[i]) > 1e-6 * (std::fabs(q0.q[i]) + 1.0))
            throw NormalizationMismatch("q1_exact: t = 0 round trip failed");
    return flow;
}

std::vector<double> NYExactFlow::at(double t) const {
    const MumfordPoint<double> l = mflow.at(t);
    const Family dvar = (variant == Family::NYI) ? Family::DLaxI : Family::DLaxII;
    const DLaxPoint<double> T =
        (dvar == Family::DLaxI) ? phi_inverse(l, f1, dvar) : phi_inverse(l, f1, dvar, sigma, b0star);
    Mat2<double> m;
    m.a = T.a_poly();
    m.b = T.b_poly();
    m.c = T.c_poly();
    m.d = T.d_poly();
    std::vector<double> qc;
    try {
        qc = peel_chain(m, e);
    } catch (const NonDivisible&) {
        throw PoleHit("q1_exact: factor peeling degenerated near a pole");
    }
    const int N = static_cast<int>(e.size());
    std::vector<double> q(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k)
        q[static_cast<size_t>(k)] = qc[static_cast<size_t>(k)] + qc[static_cast<size_t>((k + 1) % N)];
    return q;
}

std::vector<double> q1_displayed_formula_I(const NYExactFlow& flow, double t) {
    if (flow.variant != Family::NYI) throw Error("displayed formula: variant I only");
    const MumfordPoint<double> l = flow.mflow.at(t);
    const double X = -l.u[0];
    const double W = -2.0 * l.v[0];  // the displayed P', read from M1-solution
    const double h12 = flow.h.at(0), h32 = flow.h.at(1);
    const double e1 = flow.e.at(0), e2 = flow.e.at(1), e3 = flow.e.at(2);
    const double den = -W + h12 * X + h32;
    if (std::fabs(den) < 1e-12 || std::fabs(X - e1) < 1e-12)
        throw PoleHit("displayed formula: pole");
    return {den / (2.0 * (X - e1)), -2.0 * (X - e1) * (X - e2) / den,
            -(h12 * e1 + h32) / (X - e1) + 2.0 * (X - e2) * (e3 - e1) / den};
}

}  // namespace mumford
