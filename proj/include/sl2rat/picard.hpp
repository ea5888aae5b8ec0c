#pragma once

// Isomorphism invariants of one-dimensional rational modules and the
// multiplicative difference equation t(z)/t(z+1) = f(z).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rep.hpp"

namespace sl2rat {

/// (level, leading ratio, net multiplicity of each integer-shift class of
/// irreducible factors). Class keys are canonical shift representatives.
struct PicInvariant {
    Rational level;
    Rational lead{1};
    std::map<Poly, int> classes;

    friend bool operator==(const PicInvariant&, const PicInvariant&) = default;

    friend std::strong_ordering operator<=>(const PicInvariant& a, const PicInvariant& b) {
        if (a.level != b.level) return a.level < b.level ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.lead != b.lead) return a.lead < b.lead ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::lexicographical_compare_three_way(a.classes.begin(), a.classes.end(), b.classes.begin(),
                                                      b.classes.end());
    }

    std::string to_string() const {
        std::string s = "(" + sl2rat::to_string(level) + ", " + sl2rat::to_string(lead) + ", {";
        bool first = true;
        for (const auto& [p, m] : classes) {
            if (!first) s += ", ";
            first = false;
            s += p.to_string() + ": " + std::to_string(m);
        }
        return s + "})";
    }
};

namespace detail {

inline void add_classes(std::map<Poly, int>& acc, const Poly& p, int sign) {
    if (p.degree() < 1) return;
    for (const auto& [q, e] : factor_poly(p).factors) {
        Poly key = canonical_shift_rep(q).first;
        int& m = acc[key];
        m += sign * e;
        if (m == 0) acc.erase(key);
    }
}

}  // namespace detail

inline PicInvariant pic_invariant(const Rational& mu, const RatFunc& r) {
    if (r.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "invariant of the zero function");
    PicInvariant inv{mu, leading_ratio(r), {}};
    detail::add_classes(inv.classes, r.num(), 1);
    detail::add_classes(inv.classes, r.den(), -1);
    return inv;
}

inline PicInvariant pic_identity() { return {Rational(0), Rational(1), {}}; }

inline PicInvariant pic_mul(const PicInvariant& a, const PicInvariant& b) {
    PicInvariant r{a.level + b.level, a.lead * b.lead, a.classes};
    for (const auto& [p, m] : b.classes) {
        int& x = r.classes[p];
        x += m;
        if (x == 0) r.classes.erase(p);
    }
    return r;
}

inline PicInvariant pic_inverse(const PicInvariant& a) {
    PicInvariant r{-a.level, Rational(1) / a.lead, {}};
    for (const auto& [p, m] : a.classes) r.classes[p] = -m;
    return r;
}

inline PicInvariant section(const Rational& mu) { return pic_invariant(mu, RatFunc(1)); }

inline Rational level_of(const PicInvariant& a) { return a.level; }

/// Level and L_1 coefficient of a one-dimensional module.
inline std::pair<Rational, RatFunc> rank1_data(const RationalRep& r) {
    if (r.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "expected a one-dimensional module");
    auto mu = casimir_level(r);
    if (!mu) throw Error(ErrorKind::Internal, "one-dimensional module with non-constant Casimir");
    return {*mu, r.B(0, 0)};
}

inline PicInvariant pic_invariant(const RationalRep& r) {
    auto [mu, b] = rank1_data(r);
    return pic_invariant(mu, b);
}

/// t with t(z)/t(z+1) = f, assembled from Pochhammer factors pairing each
/// zero of f with a pole in the same shift class.
inline std::optional<RatFunc> solve_mult_diff(const RatFunc& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicative equation with f = 0");
    if (leading_ratio(f) != 1) return std::nullopt;
    // class -> (zero offsets, pole offsets), each offset repeated by multiplicity
    std::map<Poly, std::pair<std::vector<long>, std::vector<long>>> cls;
    auto collect = [&](const Poly& p, bool zero) {
        if (p.degree() < 1) return;
        for (const auto& [q, e] : factor_poly(p).factors) {
            auto [c, a] = canonical_shift_rep(q);
            auto& v = zero ? cls[c].first : cls[c].second;
            v.insert(v.end(), static_cast<std::size_t>(e), a);
        }
    };
    collect(f.num(), true);
    collect(f.den(), false);
    RatFunc t(1);
    for (auto& [c, zp] : cls) {
        auto& [zeros, poles] = zp;
        if (zeros.size() != poles.size()) return std::nullopt;
        std::sort(zeros.begin(), zeros.end());
        std::sort(poles.begin(), poles.end());
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            RatFunc xi(c.shift(Rational(-zeros[i])));
            t *= pochhammer(xi, zeros[i] - poles[i]);
        }
    }
    if (t / t.shift(Rational(1)) != f) throw Error(ErrorKind::Internal, "multiplicative solution failed verification");
    return t;
}

enum class IsoReason { None, LevelMismatch, InvariantMismatch };

inline const char* reason_name(IsoReason r) {
    switch (r) {
        case IsoReason::None: return "None";
        case IsoReason::LevelMismatch: return "LevelMismatch";
        case IsoReason::InvariantMismatch: return "InvariantMismatch";
    }
    return "?";
}

struct IsoResult {
    std::optional<RatFunc> intertwiner;  // t with r2(z) t(z+1) = t(z) r1(z)
    IsoReason reason = IsoReason::None;
};

inline IsoResult iso_rank1(const RationalRep& w1, const RationalRep& w2) {
    auto [mu1, r1] = rank1_data(w1);
    auto [mu2, r2] = rank1_data(w2);
    if (mu1 != mu2) return {std::nullopt, IsoReason::LevelMismatch};
    auto t = solve_mult_diff(r2 / r1);
    if (!t) return {std::nullopt, IsoReason::InvariantMismatch};
    return {t, IsoReason::None};
}

struct Rank1Classification {
    std::vector<Rank1Kind> kinds;  // empty: not the rationalization of a polynomial module
    Rational gamma;
};

/// Which polynomial rank-1 families rationalize to a module isomorphic to w.
inline Rank1Classification classify_rank1(const RationalRep& w) {
    auto [mu, r] = rank1_data(w);
    Rank1Classification out{{}, leading_ratio(r)};
    PicInvariant inv = pic_invariant(mu, r);
    for (Rank1Kind k : {Rank1Kind::I, Rank1Kind::II, Rank1Kind::III, Rank1Kind::IV}) {
        try {
            PolynomialRep p = poly_rank1(k, mu, out.gamma);
            if (pic_invariant(mu, p.B(0, 0)) == inv) out.kinds.push_back(k);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PiMuIrreducible) throw;
        }
    }
    return out;
}

}  // namespace sl2rat
