#pragma once

// The shift automorphism f(z) -> f(z+k) and the machinery built on it:
// Pochhammer products and integer-shift equivalence of irreducible
// polynomials.

#include <optional>
#include <utility>

#include "ratfunc.hpp"

namespace sl2rat {

inline RatFunc shift_ratfunc(const RatFunc& f, long k) { return f.shift(Rational(k)); }

/// P(xi, m): xi(z)...xi(z+m-1) for m > 0, 1 for m = 0 and
/// 1/(xi(z+m)...xi(z-1)) for m < 0.
inline RatFunc pochhammer(const RatFunc& xi, long m) {
    RatFunc r(1);
    if (m > 0) {
        for (long j = 0; j < m; ++j) r *= xi.shift(Rational(j));
    } else if (m < 0) {
        for (long j = m; j <= -1; ++j) r *= xi.shift(Rational(j));
        r = r.inverse();
    }
    return r;
}

/// Mean of the roots, -c_{d-1} / (d c_d).
inline Rational root_mean(const Poly& p) {
    if (p.degree() < 1) throw Error(ErrorKind::DegreeMismatch, "root mean of a constant polynomial");
    return -p.coeff(p.degree() - 1) / (p.lead() * p.degree());
}

/// The integer a with q(z) = p(z + a), if any.
inline std::optional<long> shift_offset(const Poly& p, const Poly& q) {
    if (p.degree() != q.degree())
        throw Error(ErrorKind::DegreeMismatch, "shift_offset needs polynomials of equal degree");
    if (p.degree() < 1) return p == q ? std::optional<long>(0) : std::nullopt;
    if (p.lead() != q.lead()) return std::nullopt;
    Rational a = root_mean(p) - root_mean(q);
    if (!is_integer(a) || !a.get_num().fits_slong_p()) return std::nullopt;
    if (p.shift(a) != q) return std::nullopt;
    return a.get_num().get_si();
}

/// (c, a) with p(z) = c(z - a) and the root mean of c in [0, 1).
inline std::pair<Poly, long> canonical_shift_rep(const Poly& p) {
    Rational m = root_mean(p);
    Integer a = floor_of(m);
    if (!a.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "shift offset out of range");
    return {p.shift(Rational(a)), a.get_si()};
}

inline Rational leading_ratio(const RatFunc& r) {
    if (r.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading ratio of zero");
    return r.num().lead() / r.den().lead();
}

}  // namespace sl2rat
