#pragma once

#include <vector>

#include "mumford/flows.hpp"
#include "mumford/lax_ny.hpp"
#include "mumford/perturbed.hpp"

namespace mumford {

/// Evaluate D_i (or a direction) at a flat coordinate vector, generically
/// over the scalar so the same code path serves values and perturbations.
template <class T>
std::vector<T> eval_field(Family fam, int g, int i, const std::vector<T>& flat) {
    if (is_mumford_like(fam)) {
        auto p = MumfordLikePoint<T>::unflatten(fam, g, flat);
        return frame(p).rows.at(static_cast<size_t>(i - 1));
    }
    if (is_dlax(fam)) {
        auto p = DLaxPoint<T>::unflatten(fam, g, flat);
        return frame(p).rows.at(static_cast<size_t>(i - 1));
    }
    throw Error("eval_field: family has no frame");
}

/// Directional derivative of a polynomial map at p along v, computed by
/// evaluating the map over perturbation pairs; exact for exact scalars.
template <class S, class F>
std::vector<S> jvp(F&& map, const std::vector<S>& p, const std::vector<S>& v) {
    if (p.size() != v.size()) throw Error("jvp: dimension mismatch");
    std::vector<Perturbed<S>> lifted(p.size());
    for (size_t k = 0; k < p.size(); ++k) lifted[k] = Perturbed<S>(p[k], v[k]);
    std::vector<Perturbed<S>> out = map(lifted);
    std::vector<S> d(out.size());
    for (size_t k = 0; k < out.size(); ++k) d[k] = out[k].deriv;
    return d;
}

/// [D_i, D_j](p); identically zero for every family of the toolkit.
template <class S>
std::vector<S> lie_bracket(Family fam, int g, const std::vector<S>& p, int i, int j) {
    const std::vector<S> di = eval_field(fam, g, i, p);
    const std::vector<S> dj = eval_field(fam, g, j, p);
    auto field_j = [fam, g, j](const auto& x) { return eval_field(fam, g, j, x); };
    auto field_i = [fam, g, i](const auto& x) { return eval_field(fam, g, i, x); };
    std::vector<S> a = jvp(field_j, p, di);
    const std::vector<S> b = jvp(field_i, p, dj);
    for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

/// Flat form of Phi (variant read off the point's family tag).
template <class T>
std::vector<T> phi_flat(Family variant, int g, const std::vector<T>& flat) {
    auto p = DLaxPoint<T>::unflatten(variant, g, flat);
    return phi_map(p).flatten();
}

/// jvp(Phi; p; D_i(p)) - D_i(Phi(p)), exactly zero when Phi intertwines the
/// two flows. The variant-II map rescales by 1/b0, so its intertwining
/// constant is b0: the pushed field equals b0 times the Mumford field (the
/// two agree verbatim on the b0 = 1 slice).
template <class S>
std::vector<S> pushforward_residual(const DLaxPoint<S>& p, int i) {
    if (p.variant == Family::DLaxII && scalar_is_zero(p.b0))
        throw ZeroB0("pushforward_residual: b0 = 0");
    const Family variant = p.variant;
    const int g = p.g;
    const std::vector<S> flat = p.flatten();
    const std::vector<S> di = eval_field(variant, g, i, flat);
    auto phi = [variant, g](const auto& x) { return phi_flat(variant, g, x); };
    std::vector<S> pushed = jvp(phi, flat, di);
    std::vector<S> target = eval_field(Family::Mumford, g, i, phi_flat(variant, g, flat));
    if (variant == Family::DLaxII)
        for (S& x : target) x *= p.b0;
    for (size_t k = 0; k < pushed.size(); ++k) pushed[k] -= target[k];
    return pushed;
}

/// Rank of a row-major matrix over the scalar field (Gaussian elimination;
/// floats use a relative pivot threshold).
template <class S>
int matrix_rank(std::vector<std::vector<S>> m) {
    int rank = 0;
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    double scale = 0;
    for (const auto& r : m)
        for (const auto& x : r) scale = std::max(scale, abs_approx(x));
    const double tol = is_exact_scalar_v<S> ? 0.0 : 1e-9 * (scale + 1.0);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        double best = abs_approx(m[pivot][col]);
        for (size_t r = row + 1; r < rows; ++r)
            if (abs_approx(m[r][col]) > best) {
                best = abs_approx(m[r][col]);
                pivot = r;
            }
        const bool zero = is_exact_scalar_v<S> ? scalar_is_zero(m[pivot][col]) : best <= tol;
        if (zero) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = row + 1; r < rows; ++r) {
            if (scalar_is_zero(m[r][col])) continue;
            const S factor = m[r][col] / m[row][col];
            for (size_t cI = col; cI < cols; ++cI) m[r][cI] -= factor * m[row][cI];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Rank of the g x dim frame matrix at p; g at generic points.
template <class S, class Point>
int independence_rank(const Point& p) {
    return matrix_rank(frame(p).rows);
}

}  // namespace mumford
