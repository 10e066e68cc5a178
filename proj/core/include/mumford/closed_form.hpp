#pragma once

#include "mumford/elliptic.hpp"
#include "mumford/lax_ny.hpp"
#include "mumford/phase_space.hpp"

namespace mumford {

/// Closed-form genus-1 Mumford trajectory under the clock du1/dt = kappa v:
/// x(t) = -u1(t) solves (dx/dt)^2 = kappa^2 f(x), realized through the
/// Weierstrass function via x = 4 wp(|kappa| t + c) - f1/3; v tracks
/// -du1/dt / kappa and w is reconstructed from the level-set identity
/// u w + v^2 = f. kappa = 1 is the D_1 flow; the Noumi-Yamada flows push
/// forward to kappa = -2 (variant I) and kappa = -2 b0 (variant II).
struct G1ExactFlow {
    EllipticData ed;
    UniPoly<double> f;
    cplx c;            // time shift fixed by the initial data
    double rho = 1;    // wp argument rate, |kappa|
    double vfac = -4;  // v_{3/2}(t) = vfac * wp'(rho t + c)
    MumfordPoint<double> p0;

    MumfordPoint<double> at(double t) const;
};

G1ExactFlow mumford_g1_exact(const MumfordPoint<double>& p0, double kappa = 1.0);

/// Closed-form solution of the g = 1 isospectral Noumi-Yamada systems,
/// obtained by transporting the exact Mumford trajectory back through the
/// fiber maps (Phi inverse, then factor peeling of the Lax product).
struct NYExactFlow {
    Family variant = Family::NYI;
    std::vector<double> e;
    std::vector<double> h;       // trace coefficients (h_{1/2}, h_{3/2})
    UniPoly<double> f1;          // psi' first component, constant along the flow
    double b0 = 0, b0star = 0;   // variant II sheet data
    int sigma = 1;
    G1ExactFlow mflow;

    std::vector<double> at(double t) const;  // the q_i(t)
};

NYExactFlow q1_exact(const NYState<double>& q0);

/// Verbatim evaluation of the displayed variant-I solution formulas, with
/// P = -u1(t) and P' read as -2 v_{3/2}(t). Returns the displayed triple,
/// which matches the relation-derived solution with the first two components
/// swapped; the mismatch against ny_rhs is what NormalizationMismatch
/// detection reports.
std::vector<double> q1_displayed_formula_I(const NYExactFlow& flow, double t);

}  // namespace mumford
