#pragma once

// Rational sl(2)-modules given by the matrices of L_{-1} (twist -1) and
// L_1 (twist +1) acting on Q(z)^m.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "semilinear.hpp"
#include "shift.hpp"

namespace sl2rat {

struct RationalRep {
    Mat A;  // rho(L_{-1})
    Mat B;  // rho(L_1)

    std::size_t dim() const { return A.rows(); }

    SemiOp op_lm1() const { return {A, -1}; }
    SemiOp op_l1() const { return {B, 1}; }

    friend bool operator==(const RationalRep& a, const RationalRep& b) { return a.A == b.A && a.B == b.B; }
};

/// A(z) B(z-1) - B(z) A(z+1) + 2z; zero exactly for representations.
inline Mat commutation_residual(const RationalRep& r) {
    const std::size_t n = r.dim();
    return r.A * r.B.shift(-1) - r.B * r.A.shift(1) + Mat::scalar(n, RatFunc(Poly::monomial(2, 1)));
}

inline void validate(const RationalRep& r) {
    if (!r.A.is_square() || !r.B.is_square() || r.A.rows() != r.B.rows() || r.dim() == 0)
        throw Error(ErrorKind::DimensionMismatch, "L1 and Lm1 must be square matrices of the same positive size");
    Mat res = commutation_residual(r);
    if (!res.is_zero())
        throw Error(ErrorKind::NotARepresentation,
                    "commutation residual A(z)B(z-1) - B(z)A(z+1) + 2z is nonzero: " + to_string(res));
    if (!is_invertible(r.A)) throw Error(ErrorKind::SingularOperator, "Lm1 is singular");
    if (!is_invertible(r.B)) throw Error(ErrorKind::SingularOperator, "L1 is singular");
}

inline bool is_valid(const RationalRep& r) {
    try {
        validate(r);
        return true;
    } catch (const Error&) {
        return false;
    }
}

/// C(z) = z(z-1) - A(z) B(z-1).
inline Mat casimir_matrix(const RationalRep& r) {
    return Mat::scalar(r.dim(), RatFunc(pi_mu(0))) - r.A * r.B.shift(-1);
}

/// The level mu when C = mu Id.
inline std::optional<Rational> casimir_level(const RationalRep& r) {
    Mat c = casimir_matrix(r);
    if (!c(0, 0).is_constant()) return std::nullopt;
    if (c != Mat::scalar(r.dim(), c(0, 0))) return std::nullopt;
    return c(0, 0).constant_value();
}

/// Minimal polynomial over Q(z) of a square matrix, by linear dependence
/// of vectorized powers; the coefficients must lie in Q.
inline Poly constant_minpoly(const Mat& c) {
    const std::size_t n = c.rows();
    std::vector<Mat> powers{Mat::identity(n)};
    Mat krylov = vec(powers[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * c);
        Mat target = vec(powers.back());
        Mat coef;
        try {
            coef = solve(krylov, target);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InconsistentSystem) throw;
            krylov = hstack(krylov, target);
            continue;
        }
        std::vector<Rational> p(k + 1);
        p[k] = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (!coef(i, 0).is_constant())
                throw Error(ErrorKind::NonConstantMinpoly,
                            "Casimir minimal polynomial has non-constant coefficient " + coef(i, 0).to_string());
            p[i] = -coef(i, 0).constant_value();
        }
        return Poly(std::move(p));
    }
    throw Error(ErrorKind::Internal, "no linear dependence among matrix powers");
}

/// Minimal polynomial of the Casimir operator, as a polynomial in t.
inline Poly casimir_minpoly(const RationalRep& r) { return constant_minpoly(casimir_matrix(r)); }

// ---------------------------------------------------------------------------
// Sub and quotient modules

/// The module structure on the span of the columns of p, in that basis.
inline RationalRep restrict_to_invariant_subspace(const RationalRep& r, const Mat& p) {
    if (p.rows() != r.dim() || p.cols() == 0 || rank(p) != p.cols())
        throw Error(ErrorKind::DimensionMismatch, "subspace basis must have independent columns");
    auto solve_or = [&](const Mat& rhs) {
        try {
            return solve(p, rhs);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InconsistentSystem)
                throw Error(ErrorKind::NotInvariant, "subspace is not invariant under the representation");
            throw;
        }
    };
    Mat b = solve_or(r.B * p.shift(1));
    Mat a = solve_or(r.A * p.shift(-1));
    return {a, b};
}

/// The module structure on V / span(p), in the basis given by the columns
/// appended by complete_basis.
inline RationalRep quotient_by_invariant_subspace(const RationalRep& r, const Mat& p) {
    if (p.rows() != r.dim() || rank(p) != p.cols())
        throw Error(ErrorKind::DimensionMismatch, "subspace basis must have independent columns");
    const std::size_t n = r.dim(), k = p.cols();
    if (k == n) throw Error(ErrorKind::DimensionMismatch, "quotient by the whole space is zero");
    Mat s = complete_basis(p);
    Mat si = inverse(s);
    Mat b = si * r.B * s.shift(1);
    Mat a = si * r.A * s.shift(-1);
    if (!b.block(k, 0, n - k, k).is_zero() || !a.block(k, 0, n - k, k).is_zero())
        throw Error(ErrorKind::NotInvariant, "subspace is not invariant under the representation");
    return {a.block(k, k, n - k, n - k), b.block(k, k, n - k, n - k)};
}

inline RationalRep direct_sum(const RationalRep& a, const RationalRep& b) {
    return {block_diag(a.A, b.A), block_diag(a.B, b.B)};
}

/// Change of basis by T: B -> T B T(z+1)^-1, A -> T A T(z-1)^-1.
inline RationalRep conjugate(const RationalRep& r, const Mat& t) {
    if (t.rows() != r.dim() || !t.is_square()) throw Error(ErrorKind::DimensionMismatch, "conjugating matrix shape");
    Mat ti = inverse(t);
    return {t * r.A * ti.shift(-1), t * r.B * ti.shift(1)};
}

// ---------------------------------------------------------------------------
// Level decomposition and canonical filtration

struct LevelComponent {
    Rational level;
    int exponent = 1;
    Mat basis;  // columns span ker(C - level)^exponent
    RationalRep rep;
};

inline std::vector<LevelComponent> level_decompose(const RationalRep& r) {
    Poly mp = casimir_minpoly(r);
    Factorization f = factor_poly(mp);
    for (const auto& [q, e] : f.factors)
        if (q.degree() > 1)
            throw Error(ErrorKind::LevelOutsideBaseField,
                        "Casimir level is not rational: irreducible factor " + q.to_string("t"));
    std::vector<LevelComponent> out;
    const std::size_t n = r.dim();
    if (f.factors.size() == 1) {
        out.push_back({-f.factors[0].first.constant_term(), f.factors[0].second, Mat::identity(n), r});
        return out;
    }
    Mat c = casimir_matrix(r);
    for (const auto& [q, e] : f.factors) {
        Rational mu = -q.constant_term();
        Mat nil = c - Mat::scalar(n, RatFunc(mu));
        Mat pw = Mat::identity(n);
        for (int i = 0; i < e; ++i) pw = pw * nil;
        Mat basis = kernel(pw);
        out.push_back({mu, e, basis, restrict_to_invariant_subspace(r, basis)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.level < b.level; });
    return out;
}

/// Direct sum of the components and the matrix P of concatenated bases,
/// so that the sum equals conjugate(r, P^-1).
inline std::pair<RationalRep, Mat> reassemble(const std::vector<LevelComponent>& comps) {
    RationalRep sum = comps.at(0).rep;
    Mat p = comps[0].basis;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        sum = direct_sum(sum, comps[i].rep);
        p = hstack(p, comps[i].basis);
    }
    return {sum, p};
}

struct FiltrationStep {
    Mat basis;             // columns spanning V^i, extending the previous step
    RationalRep quotient;  // V^i / V^{i-1}
};

struct Filtration {
    Rational level;
    std::vector<FiltrationStep> steps;

    std::vector<std::size_t> quotient_dims() const {
        std::vector<std::size_t> d;
        for (const auto& s : steps) d.push_back(s.quotient.dim());
        return d;
    }
};

inline void check_filtration_dims(const std::vector<std::size_t>& dims) {
    for (std::size_t i = 1; i < dims.size(); ++i)
        if (dims[i] > dims[i - 1])
            throw Error(ErrorKind::Internal, "filtration quotient dimensions increase at step " + std::to_string(i + 1));
}

/// V^i = ker(C - level)^i inside the component, with Casimir quotients.
inline Filtration canonical_filtration(const LevelComponent& comp) {
    const RationalRep& r = comp.rep;
    const std::size_t n = r.dim();
    Mat nil = casimir_matrix(r) - Mat::scalar(n, RatFunc(comp.level));
    Filtration f{comp.level, {}};
    Mat cur(n, 0), pw = Mat::identity(n);
    while (cur.cols() < n) {
        pw = pw * nil;
        Mat k = kernel(pw);
        const std::size_t prev = cur.cols();
        for (std::size_t j = 0; j < k.cols(); ++j) {
            Mat trial = hstack(cur, k.column(j));
            if (rank(trial) == trial.cols()) cur = std::move(trial);
        }
        if (cur.cols() == prev) throw Error(ErrorKind::Internal, "component is not a generalized Casimir module");
        RationalRep sub = restrict_to_invariant_subspace(r, cur);
        RationalRep q = prev == 0 ? sub : quotient_by_invariant_subspace(sub, Mat::identity(cur.cols()).block(0, 0, cur.cols(), prev));
        auto lvl = casimir_level(q);
        if (!lvl || *lvl != comp.level)
            throw Error(ErrorKind::Internal, "filtration quotient is not Casimir of level " + to_string(comp.level));
        f.steps.push_back({cur, std::move(q)});
    }
    check_filtration_dims(f.quotient_dims());
    return f;
}

// ---------------------------------------------------------------------------
// Constructors

/// A = pi_mu(z) / r(z-1), B = r.
inline RationalRep rank1(const Rational& mu, const RatFunc& r) {
    if (r.is_zero()) throw Error(ErrorKind::SingularOperator, "rank-1 module needs a nonzero r");
    return {Mat{{RatFunc(pi_mu(mu)) / r.shift(Rational(-1))}}, Mat{{r}}};
}

/// Casimir module of level mu with the given L_1 matrix.
inline RationalRep casimir_from_L1(const Rational& mu, const Mat& b) {
    if (!b.is_square()) throw Error(ErrorKind::DimensionMismatch, "L1 must be square");
    Mat bi;
    try {
        bi = inverse(b);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::SingularOperator, "L1 is singular");
        throw;
    }
    return {RatFunc(pi_mu(mu)) * bi.shift(-1), b};
}

/// B = Id, A = z(z-1) Id - c0: a representation whose Casimir is the constant c0.
inline RationalRep constant_casimir(const Mat& c0) {
    const std::size_t n = c0.rows();
    return {Mat::scalar(n, RatFunc(pi_mu(0))) - c0, Mat::identity(n)};
}

/// Moves a Casimir module from its level mu to nu.
inline RationalRep level_shift(const RationalRep& r, const Rational& nu) {
    auto mu = casimir_level(r);
    if (!mu) throw Error(ErrorKind::NotCasimir, "level_shift needs a Casimir module");
    return {(RatFunc(pi_mu(nu)) / RatFunc(pi_mu(*mu))) * r.A, r.B};
}

/// Coefficient w_m of L_1^m (resp. L_{-1}^{-m}) applied to 1 in rank1(mu, r).
inline RatFunc cyclic_orbit(const Rational& mu, const RatFunc& r, long m) {
    if (r.is_zero()) throw Error(ErrorKind::SingularOperator, "cyclic orbit needs a nonzero r");
    if (m >= 0) return pochhammer(r, m);
    return pochhammer(r / RatFunc(pi_mu(mu).shift(1)), m);
}

// ---------------------------------------------------------------------------
// Polynomial rank-1 families

enum class Rank1Kind { I, II, III, IV };

inline const char* kind_name(Rank1Kind k) {
    switch (k) {
        case Rank1Kind::I: return "I";
        case Rank1Kind::II: return "II";
        case Rank1Kind::III: return "III";
        case Rank1Kind::IV: return "IV";
    }
    return "?";
}

struct PolynomialRep {
    Mat A;
    Mat B;

    std::size_t dim() const { return A.rows(); }
};

/// alpha_mu = z - (larger root), beta_mu = z - (smaller root) of pi_mu.
inline std::pair<Poly, Poly> pi_mu_factors(const Rational& mu) {
    auto roots = rational_roots(pi_mu(mu));
    if (roots.empty())
        throw Error(ErrorKind::PiMuIrreducible, "z^2 - z - " + to_string(mu) + " has no rational roots");
    const Rational& lo = roots.front().first;
    const Rational& hi = roots.back().first;
    return {Poly::linear_root(hi), Poly::linear_root(lo)};
}

inline PolynomialRep poly_rank1(Rank1Kind kind, const Rational& mu, const Rational& gamma) {
    if (gamma == 0) throw Error(ErrorKind::InvalidInput, "gamma must be nonzero");
    const Rational ig = Rational(1) / gamma;
    Poly a, b;
    switch (kind) {
        case Rank1Kind::I:
            a = Poly(ig);
            b = gamma * pi_mu(mu).shift(1);
            break;
        case Rank1Kind::II: {
            auto [al, be] = pi_mu_factors(mu);
            a = ig * be;
            b = gamma * al.shift(1);
            break;
        }
        case Rank1Kind::III: {
            auto [al, be] = pi_mu_factors(mu);
            a = ig * al;
            b = gamma * be.shift(1);
            break;
        }
        case Rank1Kind::IV:
            a = ig * pi_mu(mu);
            b = Poly(gamma);
            break;
    }
    return {Mat{{RatFunc(a)}}, Mat{{RatFunc(b)}}};
}

inline PolynomialRep to_polynomial_rep(const RationalRep& r) {
    for (const Mat* m : {&r.A, &r.B})
        for (const auto& x : m->entries())
            if (!x.is_poly()) throw Error(ErrorKind::InvalidInput, "entry " + x.to_string() + " is not a polynomial");
    return {r.A, r.B};
}

inline RationalRep rationalize(const PolynomialRep& p) { return {p.A, p.B}; }

}  // namespace sl2rat
