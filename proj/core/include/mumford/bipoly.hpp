#pragma once

#include <utility>
#include <vector>

#include "mumford/unipoly.hpp"

namespace mumford {

/// Dense bivariate polynomial: entry (i, j) is the coefficient of x1^i x2^j.
template <class S>
class BiPoly {
  public:
    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }

    /// p(x1) * q(x2)
    static BiPoly outer(const UniPoly<S>& p, const UniPoly<S>& q) {
        BiPoly r;
        if (p.is_zero() || q.is_zero()) return r;
        r.resize(p.degree() + 1, q.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i)
            for (int j = 0; j <= q.degree(); ++j) r.at(i, j) = p.coeff(i) * q.coeff(j);
        return r;
    }

    int deg1() const { return n1_ - 1; }
    int deg2() const { return n2_ - 1; }
    bool is_zero() const { return n1_ == 0; }

    S coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= n1_ || j >= n2_) return scalar_traits<S>::zero();
        return c_[static_cast<size_t>(i) * n2_ + j];
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        r.resize(std::max(a.n1_, b.n1_), std::max(a.n2_, b.n2_));
        for (int i = 0; i < r.n1_; ++i)
            for (int j = 0; j < r.n2_; ++j) r.at(i, j) = a.coeff(i, j) + b.coeff(i, j);
        r.trim();
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const S& s) {
        BiPoly r = a;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    /// multiply by x1^k1 x2^k2
    BiPoly shifted(int k1, int k2) const {
        if (is_zero()) return {};
        BiPoly r;
        r.resize(n1_ + k1, n2_ + k2);
        for (int i = 0; i < n1_; ++i)
            for (int j = 0; j < n2_; ++j) r.at(i + k1, j + k2) = coeff(i, j);
        return r;
    }

    /// multiply by (x1 + x2 + a)
    BiPoly times_x1_plus_x2_plus(const S& a) const {
        BiPoly r = shifted(1, 0) + shifted(0, 1) + (*this) * a;
        return r;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& x : c_) m = std::max(m, abs_approx(x));
        return m;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        const int n1 = std::max(a.n1_, b.n1_), n2 = std::max(a.n2_, b.n2_);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                if (!(a.coeff(i, j) == b.coeff(i, j))) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < n1_; ++i)
            for (int j = 0; j < n2_; ++j) {
                const S& v = c_[static_cast<size_t>(i) * n2_ + j];
                if (!scalar_is_zero(v)) f(i, j, v);
            }
    }

    S& at(int i, int j) { return c_[static_cast<size_t>(i) * n2_ + j]; }

    void resize(int n1, int n2) {
        std::vector<S> c(static_cast<size_t>(n1) * n2, scalar_traits<S>::zero());
        for (int i = 0; i < std::min(n1, n1_); ++i)
            for (int j = 0; j < std::min(n2, n2_); ++j)
                c[static_cast<size_t>(i) * n2 + j] = coeff(i, j);
        c_ = std::move(c);
        n1_ = n1;
        n2_ = n2;
    }

    void trim() {
        int m1 = 0, m2 = 0;
        for (int i = 0; i < n1_; ++i)
            for (int j = 0; j < n2_; ++j)
                if (!scalar_is_zero(coeff(i, j))) {
                    m1 = std::max(m1, i + 1);
                    m2 = std::max(m2, j + 1);
                }
        if (m1 != n1_ || m2 != n2_) resize(m1, m2);
        if (m1 == 0 || m2 == 0) {
            c_.clear();
            n1_ = n2_ = 0;
        }
    }

  private:
    int n1_ = 0, n2_ = 0;  // allocated sizes (degree + 1)
    std::vector<S> c_;
};

/// Exact quotient n / d for divisors monic in x1 (the toolkit only divides by
/// x1 - x2 and x1^2 - x2^2). Treats both sides as polynomials in x1 with
/// UniPoly-in-x2 coefficients; throws NonDivisible on a nonzero remainder.
template <class S>
BiPoly<S> exact_bivariate_quotient(const BiPoly<S>& n, const BiPoly<S>& d) {
    if (d.is_zero()) throw Error("exact_bivariate_quotient: zero divisor");
    const int dd = d.deg1();
    // divisor rows as UniPoly in x2; leading x1-row must be the constant 1
    std::vector<UniPoly<S>> drow(static_cast<size_t>(dd) + 1);
    for (int i = 0; i <= dd; ++i) {
        std::vector<S> row;
        for (int j = 0; j <= d.deg2(); ++j) row.push_back(d.coeff(i, j));
        drow[static_cast<size_t>(i)] = UniPoly<S>(std::move(row));
    }
    if (!(drow.back() == UniPoly<S>::constant(scalar_traits<S>::one())))
        throw Error("exact_bivariate_quotient: divisor not monic in x1");

    std::vector<UniPoly<S>> rrow(static_cast<size_t>(std::max(n.deg1(), 0)) + 1);
    for (int i = 0; i <= n.deg1(); ++i) {
        std::vector<S> row;
        for (int j = 0; j <= n.deg2(); ++j) row.push_back(n.coeff(i, j));
        rrow[static_cast<size_t>(i)] = UniPoly<S>(std::move(row));
    }

    const int qd = static_cast<int>(rrow.size()) - 1 - dd;
    std::vector<UniPoly<S>> qrow(static_cast<size_t>(std::max(qd, -1)) + 1);
    for (int k = static_cast<int>(rrow.size()) - 1; k >= dd; --k) {
        UniPoly<S> factor = rrow[static_cast<size_t>(k)];
        if (factor.is_zero()) continue;
        qrow[static_cast<size_t>(k - dd)] = factor;
        for (int i = 0; i <= dd; ++i)
            rrow[static_cast<size_t>(k - dd + i)] =
                rrow[static_cast<size_t>(k - dd + i)] - factor * drow[static_cast<size_t>(i)];
    }
    // remainder check: x1-rows below dd
    double rem_norm = 0;
    bool rem_zero = true;
    for (int i = 0; i < std::min<int>(dd, static_cast<int>(rrow.size())); ++i) {
        if (!rrow[static_cast<size_t>(i)].is_zero()) rem_zero = false;
        rem_norm = std::max(rem_norm, rrow[static_cast<size_t>(i)].max_abs());
    }
    if constexpr (is_exact_scalar_v<S>) {
        if (!rem_zero) throw NonDivisible("exact_bivariate_quotient: nonzero remainder");
    } else {
        if (rem_norm > 1e-9 * (n.max_abs() + 1.0))
            throw NonDivisible("exact_bivariate_quotient: remainder above tolerance");
    }

    BiPoly<S> q;
    int maxj = 0;
    for (const auto& row : qrow) maxj = std::max(maxj, row.degree() + 1);
    if (qrow.empty() || maxj == 0) return q;
    q.resize(static_cast<int>(qrow.size()), maxj);
    for (int i = 0; i < static_cast<int>(qrow.size()); ++i)
        for (int j = 0; j < maxj; ++j) q.at(i, j) = qrow[static_cast<size_t>(i)].coeff(j);
    q.trim();
    return q;
}

}  // namespace mumford
