#pragma once

// Hypergeometric solutions y(z+1)/y(z) = rho(z) in Q(z) of scalar linear
// recurrences sum_i p_i(z) y(z+i) = 0, by Petkovsek's search over
// rho = Z * A(z)/B(z) * C(z+1)/C(z).

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"
#include "ratfunc.hpp"
#include "semilinear.hpp"

namespace sl2rat {

struct HyperLog {
    std::vector<std::string> lines;
    void add(std::string s) { lines.push_back(std::move(s)); }
};

namespace detail {

inline std::vector<Poly> monic_divisors(const Poly& p) {
    std::vector<Poly> out{Poly(1)};
    if (p.degree() < 1) return out;
    for (const auto& [q, e] : factor_poly(p).factors) {
        std::vector<Poly> next;
        for (const auto& d : out) {
            Poly cur = d;
            for (int k = 0; k <= e; ++k) {
                next.push_back(cur);
                cur *= q;
            }
        }
        out = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    return out;
}

inline Integer binom(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Largest degree of a polynomial solution of sum_i q_i(z) C(z+i) = 0, or
/// -1 when none can exist; from the indicial polynomial of the Delta form.
inline long poly_solution_degree_bound(const std::vector<Poly>& q, std::string* why = nullptr) {
    const long m = static_cast<long>(q.size()) - 1;
    std::vector<Poly> r(q.size());
    for (long k = 0; k <= m; ++k)
        for (long i = k; i <= m; ++i) r[k] += Rational(binom(i, k)) * q[i];
    long b = std::numeric_limits<long>::min();
    for (long k = 0; k <= m; ++k)
        if (!r[k].is_zero()) b = std::max(b, static_cast<long>(r[k].degree()) - k);
    Poly ind;
    for (long k = 0; k <= m; ++k) {
        if (r[k].is_zero() || r[k].degree() - k != b) continue;
        Poly falling(r[k].lead());
        for (long j = 0; j < k; ++j) falling *= Poly::linear_root(Rational(j));
        ind += falling;
    }
    long bound = -1;
    if (!ind.is_zero())
        for (const auto& [root, mult] : rational_roots(ind))
            if (is_integer(root) && root >= 0 && root.get_num().fits_slong_p())
                bound = std::max(bound, root.get_num().get_si());
    if (why) *why = "indicial " + ind.to_string("n") + ", bound " + std::to_string(bound);
    return bound;
}

/// A nonzero polynomial C of degree <= bound with sum_i q_i(z) C(z+i) = 0.
inline std::optional<Poly> poly_solution(const std::vector<Poly>& q, long bound) {
    if (bound < 0) return std::nullopt;
    std::vector<Poly> cols;
    int rows = 0;
    for (long j = 0; j <= bound; ++j) {
        Poly zj = Poly::monomial(1, static_cast<std::size_t>(j)), acc;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (!q[i].is_zero()) acc += q[i] * zj.shift(Rational(static_cast<long>(i)));
        rows = std::max(rows, acc.degree());
        cols.push_back(std::move(acc));
    }
    Mat a(static_cast<std::size_t>(rows + 1), cols.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) a(r, j) = RatFunc(cols[j].coeff(r));
    Mat k = kernel(a);
    if (k.cols() == 0) return std::nullopt;
    std::vector<Rational> c(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) c[j] = k(j, 0).constant_value();
    return Poly(std::move(c));
}

}  // namespace detail

/// Checks sum_i p_i(z) prod_{j<i} rho(z+j) = 0.
inline bool is_hyper_solution(const std::vector<Poly>& p, const RatFunc& rho) {
    RatFunc acc, prod(1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += RatFunc(p[i]) * prod;
        prod *= rho.shift(Rational(static_cast<long>(i)));
    }
    return acc.is_zero();
}

/// First hypergeometric solution with rho in Q(z), in a fixed enumeration
/// order, or nothing when the recurrence has none.
inline std::optional<RatFunc> hyper_solution(const std::vector<Poly>& p, HyperLog* log = nullptr) {
    const long m = static_cast<long>(p.size()) - 1;
    if (m < 1 || p.front().is_zero() || p.back().is_zero())
        throw Error(ErrorKind::InvalidInput, "recurrence needs nonzero leading and trailing coefficients");
    if (m == 1) {
        RatFunc rho = -RatFunc(p[0]) / RatFunc(p[1]);
        if (log) log->add("order 1: rho = " + rho.to_string());
        return rho;
    }
    auto as = detail::monic_divisors(p.front());
    auto bs = detail::monic_divisors(p.back().shift(Rational(1 - m)));
    if (log) log->add("candidates: " + std::to_string(as.size()) + " x " + std::to_string(bs.size()));
    std::map<std::pair<int, int>, std::vector<Rational>> zcache;
    auto z_roots = [&](int da, int db) -> const std::vector<Rational>& {
        auto key = std::make_pair(da, db);
        auto it = zcache.find(key);
        if (it != zcache.end()) return it->second;
        long top = std::numeric_limits<long>::min();
        for (long i = 0; i <= m; ++i)
            if (!p[i].is_zero()) top = std::max(top, p[i].degree() + i * da + (m - i) * db);
        std::vector<Rational> zc(static_cast<std::size_t>(m + 1));
        for (long i = 0; i <= m; ++i)
            if (!p[i].is_zero() && p[i].degree() + i * da + (m - i) * db == top) zc[i] = p[i].lead();
        std::vector<Rational> roots;
        for (const auto& [r, mult] : rational_roots(Poly(zc)))
            if (r != 0) roots.push_back(r);
        return zcache[key] = roots;
    };
    long best_bound = -1;
    for (const auto& a : as)
        for (const auto& b : bs) {
            const auto& zs = z_roots(a.degree(), b.degree());
            if (zs.empty()) continue;
            if (gcd(a, b).degree() > 0 && a.degree() > 0 && b.degree() > 0) {
                // common factors cancel in A/B; the reduced pair is tried separately
                continue;
            }
            std::vector<Poly> ashift(static_cast<std::size_t>(m)), bshift(static_cast<std::size_t>(m));
            for (long j = 0; j < m; ++j) {
                ashift[j] = a.shift(Rational(j));
                bshift[j] = b.shift(Rational(j));
            }
            for (const auto& zz : zs) {
                std::vector<Poly> q(static_cast<std::size_t>(m + 1));
                Rational zp = 1;
                for (long i = 0; i <= m; ++i) {
                    Poly t = p[i] * zp;
                    for (long j = 0; j < i; ++j) t *= ashift[j];
                    for (long j = i; j < m; ++j) t *= bshift[j];
                    q[i] = std::move(t);
                    zp *= zz;
                }
                std::string why;
                long bound = detail::poly_solution_degree_bound(q, &why);
                best_bound = std::max(best_bound, bound);
                auto c = detail::poly_solution(q, bound);
                if (!c) continue;
                RatFunc rho = RatFunc(a, b).scaled(zz) * RatFunc(c->shift(Rational(1)), *c);
                if (!is_hyper_solution(p, rho)) throw Error(ErrorKind::Internal, "hypergeometric candidate failed check");
                if (log) {
                    log->add("found Z = " + to_string(zz) + ", A = " + a.to_string() + ", B = " + b.to_string() +
                             ", C = " + c->to_string());
                    log->add("certificate degree: " + why);
                }
                return rho;
            }
        }
    if (log) log->add("no hypergeometric solution; largest certificate degree bound " + std::to_string(best_bound));
    return std::nullopt;
}

}  // namespace sl2rat
