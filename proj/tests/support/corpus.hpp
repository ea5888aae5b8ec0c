#pragma once

// Deterministic generator of valid representations of small dimension.

#include <string>
#include <vector>

#include "random.hpp"
#include "sl2rat/extension.hpp"
#include "sl2rat/monoidal.hpp"

namespace sl2rat::testing {

struct CorpusEntry {
    std::string how;
    RationalRep rep;
};

class Corpus {
   public:
    explicit Corpus(std::uint64_t seed) : g_(seed) {}

    Rational level() { return g_.pick(levels_); }

    RatFunc unit_ratfunc() {
        for (;;) {
            RatFunc r = g_.factored_ratfunc(2);
            if (!r.is_zero()) return r;
        }
    }

    RationalRep rank1_rep() { return rank1(level(), unit_ratfunc()); }

    RationalRep casimir_l1_rep(std::size_t n) {
        for (;;) {
            Mat b(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) b(i, j) = g_.integer(0, 2) == 0 ? RatFunc(g_.poly(1)) : RatFunc();
            if (is_invertible(b)) return casimir_from_L1(level(), b);
        }
    }

    /// Constant Casimir with rational eigenvalues: triangular c0 conjugated
    /// by a constant unimodular matrix.
    RationalRep constant_casimir_rep(std::size_t n) {
        Mat c0(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            c0(i, i) = g_.coin() && i ? c0(i - 1, i - 1) : RatFunc(level());
            for (std::size_t j = i + 1; j < n; ++j) c0(i, j) = RatFunc(g_.integer(-1, 1));
        }
        Mat u = unimodular(n, 0);
        return constant_casimir(u * c0 * inverse(u));
    }

    RationalRep extension_rep() {
        RationalRep w1 = rank1_rep();
        if (g_.integer(0, 3) == 0) {
            // different levels: only the split datum
            RationalRep w2 = rank1_rep();
            return ext_build({w1, w2, Mat(1, 1), Mat(1, 1)});
        }
        auto [mu, r1] = rank1_data(w1);
        RatFunc t = g_.factored_ratfunc(1);
        if (t.is_zero()) t = RatFunc(1);
        RationalRep w2 = conjugate(w1, Mat{{t}});
        RatFunc b = g_.coin() ? RatFunc() : g_.factored_ratfunc(1);
        Rational c = g_.integer(-2, 2);
        return ext_build(rank1_ext_datum(w1, w2, b, c));
    }

    /// Unit upper triangular times a permutation, entries of degree <= deg.
    Mat unimodular(std::size_t n, int deg) {
        Mat u = Mat::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) u(i, j) = RatFunc(g_.poly(deg, -2, 2));
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(g_.integer(0, static_cast<long>(i) - 1))]);
        Mat p(n, n);
        for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = RatFunc(1);
        return u * p;
    }

    RationalRep maybe_conjugate(RationalRep r) {
        if (g_.coin()) return r;
        return conjugate(r, unimodular(r.dim(), 2));
    }

    CorpusEntry next() {
        switch (g_.integer(0, 7)) {
            case 0: return {"rank1", rank1_rep()};
            case 1: return {"casimir_from_L1", maybe_conjugate(casimir_l1_rep(static_cast<std::size_t>(g_.integer(2, 3))))};
            case 2: return {"constant_casimir", maybe_conjugate(constant_casimir_rep(static_cast<std::size_t>(g_.integer(2, 4))))};
            case 3: return {"direct_sum", maybe_conjugate(direct_sum(rank1_rep(), casimir_l1_rep(2)))};
            case 4: return {"tensor", maybe_conjugate(tensor(rank1_rep(), casimir_l1_rep(2)))};
            case 5: return {"tensor2", tensor(extension_rep(), extension_rep())};
            case 6: return {"extension", maybe_conjugate(extension_rep())};
            default: return {"extension_sum", direct_sum(extension_rep(), rank1_rep())};
        }
    }

    std::vector<CorpusEntry> take(std::size_t n) {
        std::vector<CorpusEntry> v;
        while (v.size() < n) v.push_back(next());
        return v;
    }

    Gen& gen() { return g_; }

   private:
    Gen g_;
    std::vector<Rational> levels_{Rational(0), Rational(1), Rational(2), make_rational(-1, 4), make_rational(3, 2)};
};

}  // namespace sl2rat::testing
