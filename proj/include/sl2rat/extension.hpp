#pragma once

// Extensions 0 -> W' -> W -> W'' -> 0 of rational modules built from a
// twist +1 map B1 and a twist 0 map T (both W'' -> W'), and the additive
// difference equation phi(z+1) - phi(z) = s(z).

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "picard.hpp"

namespace sl2rat {

struct ExtDatum {
    RationalRep left;   // sub W'
    RationalRep right;  // quotient W''
    Mat B1;
    Mat T;
};

/// B_{-1} = (T(z) - A'(z) B1(z-1)) B''(z-1)^-1.
inline Mat ext_lower_map(const ExtDatum& d) {
    return (d.T - d.left.A * d.B1.shift(-1)) * inverse(d.right.B.shift(-1));
}

inline RationalRep ext_build(const ExtDatum& d) {
    const std::size_t m1 = d.left.dim(), m2 = d.right.dim();
    if (d.B1.rows() != m1 || d.B1.cols() != m2 || d.T.rows() != m1 || d.T.cols() != m2)
        throw Error(ErrorKind::DimensionMismatch, "extension data must be dim(left) x dim(right)");
    Mat a(m1 + m2, m1 + m2), b(m1 + m2, m1 + m2);
    a.set_block(0, 0, d.left.A);
    a.set_block(0, m1, ext_lower_map(d));
    a.set_block(m1, m1, d.right.A);
    b.set_block(0, 0, d.left.B);
    b.set_block(0, m1, d.B1);
    b.set_block(m1, m1, d.right.B);
    RationalRep w{a, b};
    try {
        validate(w);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotARepresentation || e.kind() == ErrorKind::SingularOperator)
            throw Error(ErrorKind::InvalidExtensionData, std::string("extension data does not give a module: ") + e.what());
        throw;
    }
    return w;
}

/// Whether the extension of two same-level Casimir modules is again Casimir.
inline bool ext_is_casimir(const ExtDatum& d) {
    auto l1 = casimir_level(d.left), l2 = casimir_level(d.right);
    if (!l1 || !l2) throw Error(ErrorKind::NotCasimir, "extension ends must be Casimir modules");
    if (*l1 != *l2) throw Error(ErrorKind::LevelMismatch, "extension ends have different levels");
    RationalRep w = ext_build(d);
    const bool split_t = d.T.is_zero();
    auto lw = casimir_level(w);
    if (split_t != lw.has_value())
        throw Error(ErrorKind::Internal, "Casimir test disagrees with the exponent of the built module");
    return split_t;
}

namespace detail {

/// phi with phi(z+1) - phi(z) = p for a polynomial p.
inline Poly sum_poly(Poly p) {
    // p = sum c_k (z+1)...(z+k); then phi = sum c_k z(z+1)...(z+k) / (k+1)
    Poly phi;
    while (!p.is_zero()) {
        const int k = p.degree();
        const Rational c = p.lead();
        Poly rising(1), rising_z(Poly::z());
        for (int j = 1; j <= k; ++j) {
            rising *= Poly::linear_root(-j);
            rising_z *= Poly::linear_root(-j);
        }
        p -= c * rising;
        phi += (c / (k + 1)) * rising_z;
    }
    return phi;
}

struct PartialFraction {
    Poly q;  // monic irreducible
    int k;   // power
    Poly n;  // deg n < deg q
};

inline std::vector<PartialFraction> partial_fractions(const Poly& num, const Poly& den) {
    std::vector<PartialFraction> out;
    Factorization f = factor_poly(den);
    Poly rest = num / f.lead;
    Poly remaining(1);
    for (const auto& [q, e] : f.factors) remaining *= q.pow(static_cast<unsigned>(e));
    for (const auto& [q, e] : f.factors) {
        Poly qe = q.pow(static_cast<unsigned>(e));
        Poly other = exact_div(remaining, qe);
        // rest/(qe*other) = a/qe + b/other with a = rest * other^-1 mod qe
        auto [g, s, t] = xgcd(other, qe);
        Poly a = (rest * s) % qe;
        Poly b = exact_div(rest - a * other, qe);
        for (int j = e; j >= 1 && !a.is_zero(); --j) {
            auto [quo, rem] = divmod(a, q);
            if (!rem.is_zero()) out.push_back({q, j, rem});
            a = quo;
        }
        rest = b;
        remaining = other;
    }
    return out;
}

}  // namespace detail

/// phi in Q(z) with phi(z+1) - phi(z) = s, if one exists.
inline std::optional<RatFunc> solve_add_diff(const RatFunc& s) {
    auto [pq, pr] = divmod(s.num(), s.den());
    RatFunc phi(detail::sum_poly(pq));
    if (!pr.is_zero()) {
        // residual principal parts at the canonical position of each class
        std::map<std::pair<Poly, int>, Poly> residual;
        for (const auto& t : detail::partial_fractions(pr, s.den())) {
            auto [c, a] = canonical_shift_rep(t.q);
            // term = g(z - a) with g = n(z+a) / c(z)^k
            RatFunc g(t.n.shift(Rational(a)), c.pow(static_cast<unsigned>(t.k)));
            if (a > 0)
                for (long j = 1; j <= a; ++j) phi -= g.shift(Rational(-j));
            else
                for (long j = 0; j < -a; ++j) phi += g.shift(Rational(j));
            residual[{c, t.k}] += g.num();
        }
        for (const auto& [key, n] : residual)
            if (!n.is_zero()) return std::nullopt;
    }
    if (phi.shift(Rational(1)) - phi != s) throw Error(ErrorKind::Internal, "additive solution failed verification");
    return phi;
}

enum class ExtClassResult { Equal, NotEqual, Unsupported };

inline const char* result_name(ExtClassResult r) {
    switch (r) {
        case ExtClassResult::Equal: return "Equal";
        case ExtClassResult::NotEqual: return "NotEqual";
        case ExtClassResult::Unsupported: return "Unsupported";
    }
    return "?";
}

/// Compares the classes of (b1, T1/t) and (b2, T2/t) in Ext^1(W2, W1) for
/// one-dimensional W1 = rho1 (sub) and W2 = rho2 (quotient), where t is
/// the intertwiner r2(z) t(z+1) = t(z) r1(z).
inline ExtClassResult ext_class_equal(const RationalRep& rho1, const RationalRep& rho2, const RatFunc& b1,
                                      const RatFunc& b2, const Rational& t1, const Rational& t2) {
    auto [mu1, r1] = rank1_data(rho1);
    auto [mu2, r2] = rank1_data(rho2);
    if (mu1 != mu2) throw Error(ErrorKind::LevelMismatch, "Ext classes compared across different levels");
    auto t = solve_mult_diff(r2 / r1);
    if (!t) return ExtClassResult::Unsupported;
    if (t1 != t2) return ExtClassResult::NotEqual;
    RatFunc s = t->shift(Rational(1)) * (b1 - b2) / r1;
    return solve_add_diff(s) ? ExtClassResult::Equal : ExtClassResult::NotEqual;
}

/// The extension datum of a rank-1 class: B1 = b, T = c / t.
inline ExtDatum rank1_ext_datum(const RationalRep& rho1, const RationalRep& rho2, const RatFunc& b, const Rational& c) {
    auto t = solve_mult_diff(rank1_data(rho2).second / rank1_data(rho1).second);
    if (!t && c != 0) throw Error(ErrorKind::InvalidExtensionData, "T must vanish between non-isomorphic modules");
    RatFunc tt = t ? RatFunc(c) / *t : RatFunc();
    return {rho1, rho2, Mat{{b}}, Mat{{tt}}};
}

}  // namespace sl2rat
