#pragma once

#include "mumford/scalar.hpp"

namespace mumford {

/// First-order perturbation pair (value, deriv) with the product rule.
/// Evaluating a polynomial map over Perturbed scalars yields its exact
/// Jacobian-vector product alongside the value.
template <class S>
struct Perturbed {
    S value = scalar_traits<S>::zero();
    S deriv = scalar_traits<S>::zero();

    Perturbed() = default;
    Perturbed(S v) : value(std::move(v)) {}
    Perturbed(S v, S d) : value(std::move(v)), deriv(std::move(d)) {}

    Perturbed operator-() const { return {-value, -deriv}; }
    Perturbed& operator+=(const Perturbed& o) {
        value += o.value;
        deriv += o.deriv;
        return *this;
    }
    Perturbed& operator-=(const Perturbed& o) {
        value -= o.value;
        deriv -= o.deriv;
        return *this;
    }
    Perturbed& operator*=(const Perturbed& o) {
        deriv = value * o.deriv + deriv * o.value;
        value *= o.value;
        return *this;
    }
    Perturbed& operator/=(const Perturbed& o) {
        if (scalar_is_zero(o.value)) throw Error("Perturbed: division by zero value");
        value /= o.value;
        deriv = (deriv - value * o.deriv) / o.value;
        return *this;
    }

    friend Perturbed operator+(Perturbed a, const Perturbed& b) { a += b; return a; }
    friend Perturbed operator-(Perturbed a, const Perturbed& b) { a -= b; return a; }
    friend Perturbed operator*(Perturbed a, const Perturbed& b) { a *= b; return a; }
    friend Perturbed operator/(Perturbed a, const Perturbed& b) { a /= b; return a; }
    friend bool operator==(const Perturbed& a, const Perturbed& b) {
        return a.value == b.value && a.deriv == b.deriv;
    }
    friend bool operator!=(const Perturbed& a, const Perturbed& b) { return !(a == b); }
    friend bool operator<(const Perturbed& a, const Perturbed& b) { return a.value < b.value; }
};

template <class S>
struct scalar_traits<Perturbed<S>> {
    static constexpr bool exact = scalar_traits<S>::exact;
    static Perturbed<S> zero() { return {}; }
    static Perturbed<S> one() { return {scalar_traits<S>::one()}; }
    static Perturbed<S> from_int(long n) { return {scalar_traits<S>::from_int(n)}; }
    static bool is_zero(const Perturbed<S>& x) {
        return scalar_is_zero(x.value) && scalar_is_zero(x.deriv);
    }
    static double approx(const Perturbed<S>& x) { return scalar_approx(x.value); }
};

template <class S>
double abs_approx(const Perturbed<S>& x) {
    return std::max(abs_approx(x.value), abs_approx(x.deriv));
}

}  // namespace mumford
