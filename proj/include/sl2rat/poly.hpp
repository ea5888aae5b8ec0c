#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <ostream>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sl2rat {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// floor of an exact rational.
inline Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Dense univariate polynomial with exact rational coefficients. c_[i] is
/// the coefficient of z^i; the top coefficient is never zero.
class Poly {
   public:
    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}
    Poly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly z() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    static Poly monomial(const Rational& c, std::size_t deg) {
        if (c == 0) return {};
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return Poly(std::move(v));
    }

    /// z - a
    static Poly linear_root(const Rational& a) {
        return Poly(std::vector<Rational>{Rational(-a), Rational(1)});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lead() const {
        if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
        return c_.back();
    }
    Rational constant_term() const { return coeff(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }
    Poly& operator/=(const Rational& s) {
        if (s == 0) throw Error(ErrorKind::ZeroDenominator, "polynomial divided by zero constant");
        for (auto& x : c_) x /= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Rational& s) { return a /= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Deterministic total order: by degree, then coefficients from the top.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// p(z + a).
    Poly shift(const Rational& a) const {
        if (a == 0 || c_.size() <= 1) return *this;
        // Taylor shift by repeated synthetic division.
        std::vector<Rational> v = c_;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) v[j - 1] += a * v[j];
        return Poly(std::move(v));
    }

    /// p(s * z).
    Poly scale_var(const Rational& s) const {
        Poly r = *this;
        Rational f = 1;
        for (auto& x : r.c_) {
            x *= f;
            f *= s;
        }
        r.trim();
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this / lead();
    }

    Poly pow(unsigned e) const {
        Poly r(1), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return r;
    }

    std::string to_string(const std::string& var = "z") const;

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Quotient and remainder over the rationals.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    std::vector<Rational> q(a.degree() - db + 1);
    const Rational inv = Rational(1) / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Exact quotient; throws when b does not divide a.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

namespace detail {

using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void make_primitive(IntPoly& p) {
    trim(p);
    if (p.empty()) return;
    Integer g = content(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Primitive integer polynomial with positive leading coefficient and the
/// same roots as p.
inline IntPoly to_primitive(const Poly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(c.get_num() * (l / c.get_den()));
    make_primitive(r);
    return r;
}

inline Poly from_int(const IntPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p) v.emplace_back(c);
    return Poly(std::move(v));
}

/// Pseudo-remainder of a by b (b nonzero).
inline IntPoly prem(IntPoly a, const IntPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        trim(a);
    }
    return a;
}

inline IntPoly gcd_primitive(IntPoly a, IntPoly b) {
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return IntPoly{Integer(1)};
        IntPoly r = prem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);
    return detail::from_int(detail::gcd_primitive(detail::to_primitive(a), detail::to_primitive(b))).monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rational l = r0.lead();
    return {r0 / l, s0 / l, t0 / l};
}

inline std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (i >= 1) mono = var;
        if (i >= 2) mono += "^" + std::to_string(i);
        if (i == 0)
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

/// z(z-1) - mu.
inline Poly pi_mu(const Rational& mu) {
    return Poly(std::vector<Rational>{Rational(-mu), Rational(-1), Rational(1)});
}

}  // namespace sl2rat
