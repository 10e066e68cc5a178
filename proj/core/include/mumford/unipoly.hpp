#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mumford/scalar.hpp"

namespace mumford {

/// Dense univariate polynomial over a scalar field S. Coefficient i is the
/// coefficient of x^i; the zero polynomial has an empty coefficient vector
/// and no trailing zeros survive normalization.
template <class S>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<S> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const S& a) { return UniPoly(std::vector<S>{a}); }
    static UniPoly x_pow(int n, const S& a = scalar_traits<S>::one()) {
        std::vector<S> c(static_cast<size_t>(n) + 1, scalar_traits<S>::zero());
        c.back() = a;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }

    S coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return scalar_traits<S>::zero();
        return c_[static_cast<size_t>(i)];
    }
    void set_coeff(int i, const S& a) {
        if (i >= static_cast<int>(c_.size()))
            c_.resize(static_cast<size_t>(i) + 1, scalar_traits<S>::zero());
        c_[static_cast<size_t>(i)] = a;
        normalize();
    }
    S lead() const { return c_.empty() ? scalar_traits<S>::zero() : c_.back(); }

    S eval(const S& x) const {
        S acc = scalar_traits<S>::zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// p(x + s)
    UniPoly shift(const S& s) const {
        // repeated synthetic division by (x - (-s)) builds the Taylor coefficients
        std::vector<S> work = c_;
        std::vector<S> out(c_.size(), scalar_traits<S>::zero());
        for (size_t k = 0; k < c_.size(); ++k) {
            for (size_t i = work.size() - 1; i > k; --i) work[i - 1] += work[i] * s;
            out[k] = work[k];
        }
        return UniPoly(std::move(out));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<S> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * scalar_from_int<S>(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        std::vector<S> c = c_;
        for (auto& a : c) a = -a;
        return UniPoly(std::move(c));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), scalar_traits<S>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, scalar_traits<S>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const S& s) {
        std::vector<S> c = a.c_;
        for (auto& x : c) x = x * s;
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const S& s, const UniPoly& a) { return a * s; }
    UniPoly scaled_by_inverse(const S& s) const {
        std::vector<S> c = c_;
        for (auto& x : c) x = x / s;
        return UniPoly(std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division; the divisor's leading coefficient must be invertible.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw Error("UniPoly: division by zero polynomial");
        UniPoly r = a;
        if (a.degree() < b.degree()) return {UniPoly(), r};
        std::vector<S> q(static_cast<size_t>(a.degree() - b.degree()) + 1,
                         scalar_traits<S>::zero());
        const S lead = b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const int k = r.degree() - b.degree();
            const S factor = r.lead() / lead;
            q[static_cast<size_t>(k)] = factor;
            std::vector<S> rc = r.c_;
            for (int i = 0; i <= b.degree(); ++i)
                rc[static_cast<size_t>(i + k)] -= factor * b.c_[static_cast<size_t>(i)];
            rc.pop_back();
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(q)), r};
    }

    double max_abs() const {
        double m = 0;
        for (const auto& a : c_) m = std::max(m, abs_approx(a));
        return m;
    }

  private:
    void normalize() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

/// Exact quotient; throws NonDivisible on a nonzero remainder (relative
/// tolerance 1e-9 for inexact scalars).
template <class S>
UniPoly<S> exact_div(const UniPoly<S>& a, const UniPoly<S>& b) {
    auto [q, r] = divmod(a, b);
    if constexpr (is_exact_scalar_v<S>) {
        if (!r.is_zero()) throw NonDivisible("exact_div: nonzero remainder");
    } else {
        const double scale = a.max_abs() + 1.0;
        if (r.max_abs() > 1e-9 * scale) throw NonDivisible("exact_div: remainder above tolerance");
    }
    return q;
}

}  // namespace mumford
