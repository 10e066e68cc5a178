#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include "mumford/errors.hpp"

namespace mumford {

using BigInt = mpz_class;

/// Arbitrary-precision rational, the exact realization of the scalar field.
/// Thin value wrapper over GMP's mpq_class so that generic code never sees
/// GMP expression templates.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
    Rational(const BigInt& n, const BigInt& d) : v_(n, d) {
        if (d == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) {}

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw Error("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }
    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

// ---------------------------------------------------------------------------
// Scalar trait surface used by the generic algebra. A scalar is a field
// element; exact scalars admit decidable equality, floats carry tolerances.
// ---------------------------------------------------------------------------

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static bool is_zero(const Rational& x) { return x == Rational(); }
    static double approx(const Rational& x) { return x.to_double(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long n) { return static_cast<double>(n); }
    static bool is_zero(double x) { return x == 0.0; }
    static double approx(double x) { return x; }
};

template <class S>
inline constexpr bool is_exact_scalar_v = scalar_traits<S>::exact;

template <class S>
S scalar_from_int(long n) {
    return scalar_traits<S>::from_int(n);
}

template <class S>
bool scalar_is_zero(const S& x) {
    return scalar_traits<S>::is_zero(x);
}

template <class S>
double scalar_approx(const S& x) {
    return scalar_traits<S>::approx(x);
}

inline double abs_approx(const Rational& x) { return std::fabs(x.to_double()); }
inline double abs_approx(double x) { return std::fabs(x); }

}  // namespace mumford
