#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mumford/scalar.hpp"
#include "mumford/unipoly.hpp"

namespace mumford {

/// Finitely supported Laurent polynomial in t = q^{1/2} with integer
/// coefficients. Exponents are stored in t, so half-integer powers of q have
/// odd support and integer powers even support.
class QLaurent {
  public:
    QLaurent() = default;

    static QLaurent zero() { return QLaurent(); }
    static QLaurent one() { return term(1, 0); }
    /// c * t^e
    static QLaurent term(BigInt c, int e) {
        QLaurent r;
        if (c != 0) r.c_[e] = std::move(c);
        return r;
    }
    /// [k]_q = 1 - q^k given as 1 - t^{k2} with k2 = 2k
    static QLaurent q_bracket(int k2) { return one() - term(1, k2); }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, BigInt>& coeffs() const { return c_; }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    BigInt coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? BigInt(0) : it->second;
    }
    BigInt lead() const { return c_.empty() ? BigInt(0) : c_.rbegin()->second; }

    QLaurent operator-() const {
        QLaurent r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
        QLaurent r = a;
        for (const auto& [e, c] : b.c_) {
            auto it = r.c_.find(e);
            if (it == r.c_.end())
                r.c_[e] = c;
            else {
                it->second += c;
                if (it->second == 0) r.c_.erase(it);
            }
        }
        return r;
    }
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) {
                auto& slot = r.c_[ea + eb];
                slot += ca * cb;
                if (slot == 0) r.c_.erase(ea + eb);
            }
        return r;
    }
    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

    /// value at t = 1 (sum of coefficients)
    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : c_) s += c;
        return s;
    }

    /// split into t^shift * P(t) with P(0) != 0
    std::pair<int, UniPoly<Rational>> to_poly() const {
        if (is_zero()) return {0, UniPoly<Rational>()};
        const int lo = min_exp();
        std::vector<Rational> v(static_cast<size_t>(max_exp() - lo) + 1, Rational());
        for (const auto& [e, c] : c_) v[static_cast<size_t>(e - lo)] = Rational(c, BigInt(1));
        return {lo, UniPoly<Rational>(std::move(v))};
    }
    static QLaurent from_poly(int shift, const UniPoly<Rational>& p, const BigInt& denom_clear) {
        QLaurent r;
        for (int i = 0; i <= p.degree(); ++i) {
            Rational c = p.coeff(i) * Rational(denom_clear, BigInt(1));
            if (c.den() != 1) throw Error("QLaurent: non-integer coefficient after clearing");
            if (c.num() != 0) r.c_[shift + i] = c.num();
        }
        return r;
    }

    /// human-readable form in q (half-integer exponents rendered as q^{k/2})
    std::string str() const;

  private:
    std::map<int, BigInt> c_;
};

/// The half-integer q-factorial convention probe. `full` is the product that
/// descends through every half step down to [1/2]; `down_to_half` stops one
/// step earlier at [3/2]. Integer arguments are identical under both.
enum class FactorialConvention { full, down_to_half };

/// [k]_q! for k given in half units (k2 = 2k >= 0).
inline QLaurent q_factorial(int k2, FactorialConvention conv = FactorialConvention::full) {
    if (k2 < 0) throw Error("q_factorial: negative argument");
    QLaurent r = QLaurent::one();
    if (k2 % 2 == 0) {
        for (int e = k2; e >= 2; e -= 2) r = r * QLaurent::q_bracket(e);
    } else {
        const int stop = (conv == FactorialConvention::full) ? 1 : 3;
        for (int e = k2; e >= stop; e -= 2) r = r * QLaurent::q_bracket(e);
    }
    return r;
}

/// Ratio of Laurent polynomials in t = q^{1/2}, canonical after reduction:
/// gcd(num, den) a unit, den a genuine polynomial with nonzero constant term,
/// positive leading coefficient, and joint integer content 1.
class QRational {
  public:
    QRational() : num_(QLaurent::zero()), den_(QLaurent::one()) {}
    QRational(QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("QRational: zero denominator");
        reduce();
    }
    explicit QRational(const QLaurent& num) : num_(num), den_(QLaurent::one()) {}

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == QLaurent::one(); }

    friend QRational operator*(const QRational& a, const QRational& b) {
        return QRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRational operator/(const QRational& a, const QRational& b) {
        if (b.num_.is_zero()) throw Error("QRational: division by zero");
        return QRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend QRational operator+(const QRational& a, const QRational& b) {
        return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRational operator-(const QRational& a, const QRational& b) {
        return QRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

    /// value at q = 1; PoleAtOne if the reduced denominator vanishes there.
    Rational limit_at_one() const {
        const BigInt d = den_.eval_at_one();
        if (d == 0) throw PoleAtOne("QRational: pole at q = 1");
        return Rational(num_.eval_at_one(), d);
    }
    bool has_pole_at_one() const { return den_.eval_at_one() == 0; }

    std::string str() const;

  private:
    void reduce();

    QLaurent num_, den_;
};

inline QRational q_normalize(QRational x) { return x; }

// -- implementation -------------------------------------------------------

inline void QRational::reduce() {
    if (num_.is_zero()) {
        den_ = QLaurent::one();
        return;
    }
    auto [sn, pn] = num_.to_poly();
    auto [sd, pd] = den_.to_poly();
    // monic Euclidean gcd over Q
    UniPoly<Rational> a = pn, b = pd;
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.degree() > 0 || !(a.coeff(0) == Rational(1))) {
        a = a.scaled_by_inverse(a.lead());
        pn = exact_div(pn, a);
        pd = exact_div(pd, a);
    }
    // clear rational coefficients back to integers
    BigInt clear_n(1), clear_d(1);
    for (int i = 0; i <= pn.degree(); ++i) {
        const BigInt d = pn.coeff(i).den();
        clear_n = clear_n / gcd(clear_n, d) * d;
    }
    for (int i = 0; i <= pd.degree(); ++i) {
        const BigInt d = pd.coeff(i).den();
        clear_d = clear_d / gcd(clear_d, d) * d;
    }
    BigInt clear = clear_n / gcd(clear_n, clear_d) * clear_d;
    QLaurent n = QLaurent::from_poly(sn - sd, pn, clear);
    QLaurent d = QLaurent::from_poly(0, pd, clear);
    // joint integer content
    BigInt content(0);
    for (const auto& [e, c] : n.coeffs()) content = gcd(content, c);
    for (const auto& [e, c] : d.coeffs()) content = gcd(content, c);
    if (content > 1) {
        QLaurent n2, d2;
        for (const auto& [e, c] : n.coeffs()) n2 = n2 + QLaurent::term(c / content, e);
        for (const auto& [e, c] : d.coeffs()) d2 = d2 + QLaurent::term(c / content, e);
        n = n2;
        d = d2;
    }
    if (d.lead() < 0) {
        n = -n;
        d = -d;
    }
    num_ = n;
    den_ = d;
}

inline std::string QLaurent::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : c_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1) && e != 0;
        if (!unit) out += a.get_str();
        if (e != 0) {
            if (!unit) out += "*";
            out += "q^";
            if (e % 2 == 0)
                out += (e / 2 < 0 ? "(" + std::to_string(e / 2) + ")" : std::to_string(e / 2));
            else
                out += "(" + std::to_string(e) + "/2)";
        }
    }
    return out;
}

inline std::string QRational::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace mumford
