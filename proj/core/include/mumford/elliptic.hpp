#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mumford/errors.hpp"

namespace mumford {

using cplx = std::complex<double>;

/// Genus-1 curve data: a squarefree real monic cubic y^2 = f(x), the
/// invariants of the Weierstrass function obtained from x = 4 wp - f1/3, and
/// the period lattice of dx/y (equal to the wp lattice).
struct EllipticData {
    double f1 = 0, f2 = 0, f3 = 0;  // f(x) = x^3 + f1 x^2 + f2 x + f3
    std::array<cplx, 3> roots{};    // roots of f
    double g2 = 0, g3 = 0;
    cplx omega1, omega2;            // half periods, Im(omega2/omega1) > 0
    cplx tau;                       // omega2 / omega1
    std::array<cplx, 3> e{};        // roots of 4t^3 - g2 t - g3, e[k] = (roots[k]+f1/3)/4
    cplx w1, w2;                    // lattice-reduced full-period basis

    double f_eval(double x) const { return ((x + f1) * x + f2) * x + f3; }
    cplx f_eval(cplx x) const { return ((x + f1) * x + f2) * x + f3; }
};

/// Roots of a monic cubic with real coefficients.
std::array<cplx, 3> cubic_roots(double c2, double c1, double c0);

/// Build EllipticData from a squarefree monic cubic. Throws MultipleRoot for
/// a repeated root and NonConvergent when the period validation fails.
EllipticData elliptic_from_cubic(double f1, double f2, double f3);

/// Weierstrass wp and wp' by lattice reduction, Laurent series and
/// duplication. Throws LatticePole at (numerical) lattice points.
cplx wp(cplx z, const EllipticData& ed);
cplx wp_prime(cplx z, const EllipticData& ed);
void wp_pair(cplx z, const EllipticData& ed, cplx& p, cplx& pp);

/// Invert wp: find c in the fundamental cell with wp(c) = p0 and
/// wp'(c) = q0 (the pair must satisfy the curve equation). Grid-seeded
/// Newton; throws NonConvergent on failure.
cplx wp_invert(const EllipticData& ed, cplx p0, cplx q0);

/// |wp'(z)^2 - (4 wp^3 - g2 wp - g3)| at z, the ODE residual.
double wp_ode_residual(cplx z, const EllipticData& ed);

}  // namespace mumford
