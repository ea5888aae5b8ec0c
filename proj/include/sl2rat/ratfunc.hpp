#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "poly.hpp"

namespace sl2rat {

/// Element of Q(z) in canonical form: gcd(num, den) = 1 and den monic.
/// Equality of canonical forms is equality in the field.
class RatFunc {
   public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc z() { return RatFunc(Poly::z()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == Poly(1); }
    bool is_poly() const { return den_.degree() == 0; }
    bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
    Rational constant_value() const { return num_.constant_term(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        if (a.is_poly()) return raw(a.num_ * b.den_ + b.num_, b.den_);
        if (b.is_poly()) return raw(a.num_ + b.num_ * a.den_, a.den_);
        Poly g = gcd(a.den_, b.den_);
        if (g.degree() == 0) return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Poly ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
        return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_constant()) return b.scaled(a.constant_value());
        if (b.is_constant()) return a.scaled(b.constant_value());
        // cross-cancel so the result is already reduced
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Poly an = exact_div(a.num_, g1), bd = exact_div(b.den_, g1);
        Poly bn = exact_div(b.num_, g2), ad = exact_div(a.den_, g2);
        return raw(an * bn, ad * bd);
    }

    RatFunc inverse() const {
        if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of zero rational function");
        return raw(den_, num_);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc scaled(const Rational& s) const {
        if (s == 0) return RatFunc();
        RatFunc r = *this;
        r.num_ *= s;
        return r;
    }

    /// f(z + k).
    RatFunc shift(const Rational& k) const {
        if (k == 0) return *this;
        RatFunc r;
        r.num_ = num_.shift(k);
        r.den_ = den_.shift(k);
        return r;
    }

    RatFunc pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r;
        r.num_ = num_.pow(static_cast<unsigned>(e));
        r.den_ = den_.pow(static_cast<unsigned>(e));
        return r;
    }

    std::string to_string(const std::string& var = "z") const;

   private:
    // num/den already coprime; only the unit is normalized.
    static RatFunc raw(Poly num, Poly den) {
        RatFunc r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        if (r.den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
        if (r.num_.is_zero()) {
            r.den_ = Poly(1);
            return r;
        }
        Rational l = r.den_.lead();
        if (l != 1) {
            r.num_ /= l;
            r.den_ /= l;
        }
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (den_.degree() > 0) {
            Poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        Rational l = den_.lead();
        if (l != 1) {
            num_ /= l;
            den_ /= l;
        }
    }

    Poly num_;
    Poly den_;
};

namespace detail {

inline bool is_atom(const Poly& p) {
    if (p.degree() <= 0) return is_integer(p.constant_term());
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] != 0) return false;
    return c.back() == 1;
}

}  // namespace detail

inline std::string RatFunc::to_string(const std::string& var) const {
    if (is_poly()) return num_.to_string(var);
    auto wrap = [&](const Poly& p) {
        std::string s = p.to_string(var);
        return detail::is_atom(p) ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace sl2rat
