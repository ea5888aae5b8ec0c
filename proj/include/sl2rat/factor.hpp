#pragma once

// Factorization of univariate polynomials over the rationals: squarefree
// decomposition followed by a big-prime Zassenhaus search (distinct/equal
// degree splitting modulo a prime above the Mignotte bound, then
// recombination with exact trial division over the integers).

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace sl2rat {

struct Factorization {
    Rational lead;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, sorted

    Poly expand() const {
        Poly r(lead);
        for (const auto& [f, e] : factors) r *= f.pow(static_cast<unsigned>(e));
        return r;
    }
};

/// Yun's algorithm. Returns monic squarefree parts with multiplicities.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() < 1) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = exact_div(f, a);
    Poly c = exact_div(fp, a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        Poly g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g.monic(), i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

// Arithmetic in (Z/p)[x], coefficients kept in [0, p).
class ModP {
   public:
    explicit ModP(Integer p) : p_(std::move(p)) {}

    const Integer& prime() const { return p_; }

    IntPoly reduce(const IntPoly& a) const {
        IntPoly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) mpz_mod(r[i].get_mpz_t(), a[i].get_mpz_t(), p_.get_mpz_t());
        trim(r);
        return r;
    }

    IntPoly sub(const IntPoly& a, const IntPoly& b) const {
        IntPoly r(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.size()) r[i] = a[i];
            if (i < b.size()) r[i] -= b[i];
            mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), p_.get_mpz_t());
        }
        trim(r);
        return r;
    }

    IntPoly mul(const IntPoly& a, const IntPoly& b) const {
        if (a.empty() || b.empty()) return {};
        IntPoly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
        trim(r);
        return r;
    }

    Integer inv(const Integer& a) const {
        Integer r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw Error(ErrorKind::Internal, "non-invertible element modulo prime");
        return r;
    }

    // Remainder of a by b (b nonzero).
    IntPoly rem(IntPoly a, const IntPoly& b) const {
        const std::size_t db = b.size() - 1;
        const Integer li = inv(b.back());
        Integer f;
        while (!a.empty() && a.size() - 1 >= db) {
            const std::size_t da = a.size() - 1;
            f = a.back() * li;
            mpz_mod(f.get_mpz_t(), f.get_mpz_t(), p_.get_mpz_t());
            for (std::size_t j = 0; j <= db; ++j) {
                Integer& t = a[da - db + j];
                t -= f * b[j];
                mpz_mod(t.get_mpz_t(), t.get_mpz_t(), p_.get_mpz_t());
            }
            trim(a);
        }
        return a;
    }

    IntPoly quo(IntPoly a, const IntPoly& b) const {
        if (a.size() < b.size()) return {};
        const std::size_t db = b.size() - 1;
        IntPoly q(a.size() - db);
        const Integer li = inv(b.back());
        for (std::size_t i = a.size(); i-- > db;) {
            Integer f = a[i] * li;
            mpz_mod(f.get_mpz_t(), f.get_mpz_t(), p_.get_mpz_t());
            q[i - db] = f;
            for (std::size_t j = 0; j <= db; ++j) {
                Integer& t = a[i - db + j];
                t -= f * b[j];
                mpz_mod(t.get_mpz_t(), t.get_mpz_t(), p_.get_mpz_t());
            }
        }
        trim(q);
        return q;
    }

    IntPoly monic(IntPoly a) const {
        if (a.empty()) return a;
        Integer li = inv(a.back());
        for (auto& c : a) {
            c *= li;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
        }
        return a;
    }

    IntPoly gcd(IntPoly a, IntPoly b) const {
        while (!b.empty()) {
            IntPoly r = rem(std::move(a), b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }

    IntPoly powmod(IntPoly base, Integer e, const IntPoly& m) const {
        IntPoly r{Integer(1)};
        base = rem(std::move(base), m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
            e >>= 1;
            if (e > 0) base = rem(mul(base, base), m);
        }
        return r;
    }

    IntPoly derivative(const IntPoly& a) const {
        if (a.size() <= 1) return {};
        IntPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
        return reduce(r);
    }

   private:
    Integer p_;
};

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<IntPoly, int>> distinct_degree(const ModP& F, IntPoly f) {
    std::vector<std::pair<IntPoly, int>> out;
    const IntPoly x{Integer(0), Integer(1)};
    IntPoly h = x;
    int d = 0;
    while (f.size() - 1 >= 2 * static_cast<std::size_t>(d + 1)) {
        ++d;
        h = F.powmod(h, F.prime(), f);
        IntPoly g = F.gcd(f, F.sub(h, x));
        if (g.size() > 1) {
            out.emplace_back(g, d);
            f = F.quo(f, g);
            h = F.rem(h, f);
        }
    }
    if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p), deterministic seed.
inline void equal_degree(const ModP& F, const IntPoly& g, int d, gmp_randclass& rng,
                         std::vector<IntPoly>& out) {
    const std::size_t n = g.size() - 1;
    if (n == static_cast<std::size_t>(d)) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), F.prime().get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        IntPoly a(n);
        for (auto& c : a) c = rng.get_z_range(F.prime());
        trim(a);
        if (a.size() <= 1) continue;
        IntPoly b = F.powmod(a, e, g);
        if (b.empty()) continue;
        b[0] -= 1;
        b = F.reduce(b);
        IntPoly h = F.gcd(g, b);
        if (h.size() > 1 && h.size() < g.size()) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, F.quo(g, h), d, rng, out);
            return;
        }
    }
}

inline IntPoly symmetric(const IntPoly& a, const Integer& p) {
    IntPoly r = a;
    const Integer half = p / 2;
    for (auto& c : r)
        if (c > half) c -= p;
    return r;
}

// Exact division over Z; returns false when b does not divide a.
inline bool int_divide(const IntPoly& a, const IntPoly& b, IntPoly& q) {
    if (a.size() < b.size()) return false;
    IntPoly r = a;
    const std::size_t db = b.size() - 1;
    q.assign(a.size() - db, Integer(0));
    for (std::size_t i = a.size(); i-- > db;) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
        Integer f = r[i] / b.back();
        q[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    trim(q);
    return true;
}

inline bool perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    return mpz_root(root.get_mpz_t(), n.get_mpz_t(), 2) != 0;
}

// Irreducible factors of a primitive squarefree integer polynomial of
// positive degree with positive leading coefficient.
inline std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return {f};
    if (n == 2) {
        Integer disc = f[1] * f[1] - 4 * f[2] * f[0], s;
        if (!perfect_square(disc, s)) return {f};
        IntPoly a{f[1] - s, 2 * f[2]}, b{f[1] + s, 2 * f[2]};
        make_primitive(a);
        make_primitive(b);
        return {a, b};
    }

    Integer maxabs = 0;
    for (const auto& c : f) maxabs = std::max(maxabs, Integer(abs(c)));
    Integer bound = maxabs * static_cast<unsigned long>(n + 1);
    bound <<= static_cast<unsigned long>(n);
    Integer p = 2 * abs(f.back()) * bound + 1;
    const IntPoly x{Integer(0), Integer(1)};
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mpz_divisible_p(f.back().get_mpz_t(), p.get_mpz_t())) continue;
        ModP F(p);
        IntPoly fm = F.reduce(f);
        if (F.gcd(fm, F.derivative(fm)).size() == 1) break;
    }
    ModP F(p);
    IntPoly fm = F.monic(F.reduce(f));

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    std::vector<IntPoly> local;
    for (auto& [g, d] : distinct_degree(F, fm)) equal_degree(F, g, d, rng, local);
    if (local.size() == 1) return {f};

    std::vector<IntPoly> result;
    IntPoly cur = f;
    std::size_t s = 1;
    while (2 * s <= local.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            IntPoly g{cur.back() % p};
            for (auto i : idx) g = F.mul(g, local[i]);
            g = symmetric(g, p);
            make_primitive(g);
            IntPoly q;
            if (int_divide(cur, g, q)) {
                result.push_back(g);
                cur = std::move(q);
                make_primitive(cur);
                std::vector<IntPoly> rest;
                for (std::size_t i = 0; i < local.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(local[i]);
                local = std::move(rest);
                found = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == local.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (cur.size() > 1) result.push_back(cur);
    return result;
}

}  // namespace detail

/// lead * prod f_i^{e_i} with monic irreducible f_i, sorted ascending.
inline Factorization factor_poly(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization out{p.lead(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (const auto& g : detail::factor_squarefree(detail::to_primitive(part)))
            out.factors.emplace_back(detail::from_int(g).monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    return out;
}

/// Rational roots with multiplicity, ascending.
inline std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
    std::vector<std::pair<Rational, int>> out;
    if (p.degree() < 1) return out;
    for (const auto& [f, e] : factor_poly(p).factors)
        if (f.degree() == 1) out.emplace_back(-f.constant_term(), e);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) return false;
    auto f = factor_poly(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace sl2rat
