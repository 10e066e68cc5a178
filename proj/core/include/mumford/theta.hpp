#pragma once

#include <vector>

#include "mumford/elliptic.hpp"
#include "mumford/unipoly.hpp"

namespace mumford {

using CVec = std::vector<cplx>;
using CMat = std::vector<std::vector<cplx>>;

/// Riemann theta with rational characteristics, truncated lattice sum over a
/// max-norm ball whose radius is chosen from a Gaussian tail bound. The
/// result is accurate to `tol` (absolute, relative to the leading Gaussian
/// scale). Throws NonConvergent if Im(Omega) is not positive definite.
cplx theta(const CVec& z, const CMat& omega, const std::vector<double>& char_a,
           const std::vector<double>& char_b, double tol = 1e-13);

inline cplx theta0(const CVec& z, const CMat& omega, double tol = 1e-13) {
    const std::vector<double> zero(z.size(), 0.0);
    return theta(z, omega, zero, zero, tol);
}

/// smallest eigenvalue of the symmetric matrix Im(Omega)
double min_eig_im(const CMat& omega);

/// Theta data for the branch-point calculus: the period matrix, one
/// half-integer characteristic per finite branch point, the shift Delta, the
/// index subset V of size g+1 and the branch x-coordinates.
struct ThetaData {
    int g = 1;
    CMat omega;
    std::vector<std::vector<double>> eta;    // characteristics, one per branch point
    std::vector<std::vector<double>> eta_p;
    CVec delta;
    std::vector<int> V;
    CVec branch_x;
    double tol = 1e-13;
};

/// Build the genus-1 pipeline from a squarefree cubic: tau from the lattice,
/// characteristics by matching wp at half periods to the cubic's roots,
/// Delta from the odd-position branch points, V by probing the partition
/// identity.
ThetaData theta_data_from_elliptic(const EllipticData& ed);

/// The lambda_k(z), k in V: squared ratios of shifted theta values. Their
/// sum is 1. Throws DivisorHit when the denominator theta vanishes.
CVec lambda_functions(const ThetaData& td, const CVec& z);

/// u(x) = sum_{k in V} lambda_k(z) prod_{j in V, j != k} (x - x(a_j)),
/// monic of degree g by the partition identity; returned with the leading
/// coefficient normalized away after a tolerance check.
UniPoly<double> u_from_theta(const ThetaData& td, const CVec& z, double* monic_defect = nullptr);

}  // namespace mumford
