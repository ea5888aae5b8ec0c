#pragma once

// Grothendieck-group classes and the staged devissage of a rational module:
// level components, canonical filtration, then composition factors of each
// Casimir quotient found by splitting off one-dimensional subs and quotients.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyper.hpp"
#include "monoidal.hpp"
#include "picard.hpp"

namespace sl2rat {

inline constexpr std::uint64_t default_seed = 0x5eed;
inline constexpr int cyclic_vector_attempts = 32;

struct Rank1Sub {
    Mat w;  // column, first nonzero entry 1
    RatFunc lambda;
};

struct Rank1Quotient {
    Mat phi;  // row, first nonzero entry 1
    RatFunc lambda;
};

namespace detail {

/// Rescale by the first nonzero entry f; lambda picks up f(z)/f(z+1).
inline RatFunc normalize_line(Mat& v, const RatFunc& lambda) {
    for (const auto& x : v.entries())
        if (!x.is_zero()) {
            RatFunc f = x;
            RatFunc inv = f.inverse();
            for (std::size_t i = 0; i < v.rows(); ++i)
                for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = v(i, j) * inv;
            return lambda * f / f.shift(Rational(1));
        }
    throw Error(ErrorKind::Internal, "zero line vector");
}

inline std::string vec_label(const Mat& c) {
    std::string s = "(";
    for (std::size_t j = 0; j < c.cols(); ++j) s += (j ? ", " : "") + c(0, j).to_string();
    return s + ")";
}

}  // namespace detail

/// A one-dimensional submodule: w with B(z) w(z+1) = lambda(z) w(z).
inline std::optional<Rank1Sub> find_rank1_sub(const RationalRep& rep, std::uint64_t seed = default_seed,
                                              HyperLog* log = nullptr) {
    const std::size_t m = rep.dim();
    const Mat& b = rep.B;
    if (m == 1) {
        if (log) log->add("dimension 1: whole space");
        return Rank1Sub{Mat::identity(1), b(0, 0)};
    }
    for (std::size_t i = 0; i < m; ++i) {
        bool line = true;
        for (std::size_t r = 0; r < m && line; ++r)
            if (r != i && !b(r, i).is_zero()) line = false;
        if (line) {
            if (log) log->add("coordinate line e" + std::to_string(i + 1));
            Mat w(m, 1);
            w(i, 0) = RatFunc(1);
            return Rank1Sub{w, b(i, i)};
        }
    }
    // X(z+1) = M X with M = B^-1; y = c0 X satisfies a scalar recurrence
    const Mat mm = inverse(b);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int attempt = 0; attempt < cyclic_vector_attempts; ++attempt) {
        Mat c0(1, m);
        if (static_cast<std::size_t>(attempt) < m) {
            c0(0, static_cast<std::size_t>(attempt)) = RatFunc(1);
        } else {
            for (std::size_t j = 0; j < m; ++j) c0(0, j) = RatFunc(coef(rng));
            if (c0.is_zero()) continue;
        }
        std::vector<Mat> cs{c0};
        for (std::size_t k = 1; k <= m; ++k) cs.push_back(cs.back().shift(1) * mm);
        Mat cmat(m, m);
        for (std::size_t k = 0; k < m; ++k) cmat.set_block(k, 0, cs[k]);
        if (!is_invertible(cmat)) continue;
        Mat cinv = inverse(cmat);
        Mat a = cs[m] * cinv;  // c_m = sum a_i c_i
        Poly den(1);
        for (std::size_t i = 0; i < m; ++i) den = exact_div(den * a(0, i).den(), gcd(den, a(0, i).den()));
        std::vector<Poly> p(m + 1);
        for (std::size_t i = 0; i < m; ++i) p[i] = -(a(0, i) * RatFunc(den)).num();
        p[m] = den;
        if (log) {
            log->add("cyclic vector " + detail::vec_label(c0) + " after " + std::to_string(attempt + 1) + " attempt(s)");
            std::string rec = "recurrence:";
            for (std::size_t i = 0; i <= m; ++i) rec += " [" + p[i].to_string() + "]";
            log->add(rec);
        }
        auto rho = hyper_solution(p, log);
        if (!rho) return std::nullopt;
        Mat ys(m, 1);
        RatFunc prod(1);
        for (std::size_t k = 0; k < m; ++k) {
            ys(k, 0) = prod;
            prod *= rho->shift(Rational(static_cast<long>(k)));
        }
        Mat w = cinv * ys;
        RatFunc lambda = detail::normalize_line(w, rho->inverse());
        if (b * w.shift(1) != lambda * w)
            throw Error(ErrorKind::Internal, "rank-1 sub witness failed verification");
        return Rank1Sub{w, lambda};
    }
    throw Error(ErrorKind::CyclicVectorNotFound,
                "no cyclic vector after " + std::to_string(cyclic_vector_attempts) + " attempts");
}

/// A one-dimensional quotient: phi with phi(z) B(z) = lambda(z) phi(z+1).
inline std::optional<Rank1Quotient> find_rank1_quotient(const RationalRep& rep, std::uint64_t seed = default_seed,
                                                        HyperLog* log = nullptr) {
    if (rep.dim() == 1) {
        if (log) log->add("dimension 1: whole space");
        return Rank1Quotient{Mat::identity(1), rep.B(0, 0)};
    }
    // a sub v of the dual, B^-T v(z+1) = mu v, gives phi = v^T with lambda = 1/mu
    RationalRep d{Mat::identity(rep.dim()), inverse(rep.B).transpose()};
    auto sub = find_rank1_sub(d, seed, log);
    if (!sub) return std::nullopt;
    Mat phi = sub->w.transpose();
    RatFunc lambda = detail::normalize_line(phi, sub->lambda.inverse());
    if (phi * rep.B != lambda * phi.shift(1)) throw Error(ErrorKind::Internal, "rank-1 quotient witness failed verification");
    return Rank1Quotient{phi, lambda};
}

// ---------------------------------------------------------------------------
// Factor keys and classes

struct FactorKey {
    Rational level;
    std::size_t dim = 1;
    std::string serial;  // Picard invariant text, or the witness module
    bool opaque = false;
    bool certified = true;

    static FactorKey rank1(const PicInvariant& inv) { return {inv.level, 1, inv.to_string(), false, true}; }

    friend bool operator==(const FactorKey& a, const FactorKey& b) {
        return a.level == b.level && a.dim == b.dim && a.serial == b.serial;
    }
    friend bool operator<(const FactorKey& a, const FactorKey& b) {
        if (a.level != b.level) return a.level < b.level;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.serial < b.serial;
    }

    std::string to_string() const {
        if (!opaque) return "Rank1" + serial;
        return "Opaque(" + sl2rat::to_string(level) + ", " + std::to_string(dim) + ", " + serial + ", " +
               (certified ? "certified" : "uncertified") + ")";
    }
};

/// Witness text for an opaque factor: the L1 matrix of the Casimir module.
inline std::string witness_serial(const RationalRep& r) { return "L1=" + to_string(r.B); }

class K0Class {
   public:
    K0Class() = default;
    explicit K0Class(const FactorKey& k, long c = 1) { add(k, c); }

    void add(const FactorKey& k, long c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    const std::map<FactorKey, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const K0Class& a, const K0Class& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
            if (!(i->first == j->first) || i->second != j->second || i->first.opaque != j->first.opaque) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += std::to_string(c) + "*" + k.to_string();
        }
        return s;
    }

   private:
    std::map<FactorKey, long> terms_;
};

inline K0Class k0_add(const K0Class& a, const K0Class& b) {
    K0Class r = a;
    for (const auto& [k, c] : b.terms()) r.add(k, c);
    return r;
}

inline K0Class k0_neg(const K0Class& a) {
    K0Class r;
    for (const auto& [k, c] : a.terms()) r.add(k, -c);
    return r;
}

inline long k0_dim(const K0Class& a) {
    long d = 0;
    for (const auto& [k, c] : a.terms()) d += c * static_cast<long>(k.dim);
    return d;
}

enum class K0Comparison { Equal, NotEqual, Unknown };

inline const char* comparison_name(K0Comparison c) {
    switch (c) {
        case K0Comparison::Equal: return "Equal";
        case K0Comparison::NotEqual: return "NotEqual";
        case K0Comparison::Unknown: return "Unknown";
    }
    return "?";
}

/// Exact on rank-1 keys; opaque keys are compared only by level and dimension.
inline K0Comparison k0_eq(const K0Class& a, const K0Class& b) {
    K0Class diff = k0_add(a, k0_neg(b));
    if (diff.is_zero()) return K0Comparison::Equal;
    std::map<Rational, long> dim_by_level;
    std::map<std::pair<Rational, std::size_t>, long> opaque_groups;
    bool uncertified = false, rank1_differs = false;
    for (const auto& [k, c] : diff.terms()) {
        dim_by_level[k.level] += c * static_cast<long>(k.dim);
        if (!k.opaque)
            rank1_differs = true;
        else {
            opaque_groups[{k.level, k.dim}] += c;
            if (!k.certified) uncertified = true;
        }
    }
    for (const auto& [lvl, d] : dim_by_level)
        if (d != 0) return K0Comparison::NotEqual;
    if (uncertified) return K0Comparison::Unknown;
    if (rank1_differs) return K0Comparison::NotEqual;
    for (const auto& [g, c] : opaque_groups)
        if (c != 0) return K0Comparison::NotEqual;
    return K0Comparison::Unknown;
}

// ---------------------------------------------------------------------------
// Devissage

struct CertNode {
    std::string label;
    std::vector<CertNode> children;

    std::string to_text(int indent = 0) const {
        std::string s(static_cast<std::size_t>(indent) * 2, ' ');
        s += label + "\n";
        for (const auto& c : children) s += c.to_text(indent + 1);
        return s;
    }
};

struct CompositionFactors {
    std::vector<FactorKey> keys;
    bool complete = true;
};

namespace detail {

inline void log_into(CertNode& node, const HyperLog& log) {
    for (const auto& l : log.lines) node.children.push_back({l, {}});
}

inline void composition_rec(const RationalRep& rep, const Rational& mu, std::uint64_t seed, CompositionFactors& out,
                            CertNode& node) {
    const std::size_t m = rep.dim();
    if (m == 1) {
        FactorKey k = FactorKey::rank1(pic_invariant(mu, rep.B(0, 0)));
        node.children.push_back({"factor " + k.to_string(), {}});
        out.keys.push_back(k);
        return;
    }
    CertNode sub_node{"search rank-1 sub in dim " + std::to_string(m), {}};
    HyperLog slog;
    auto sub = find_rank1_sub(rep, seed, &slog);
    log_into(sub_node, slog);
    if (sub) {
        sub_node.label += ": found w = " + to_string(sub->w.transpose()) + ", lambda = " + sub->lambda.to_string();
        node.children.push_back(std::move(sub_node));
        FactorKey k = FactorKey::rank1(pic_invariant(mu, sub->lambda));
        node.children.push_back({"factor " + k.to_string(), {}});
        out.keys.push_back(k);
        CertNode rest{"quotient by w", {}};
        composition_rec(quotient_by_invariant_subspace(rep, sub->w), mu, seed, out, rest);
        node.children.push_back(std::move(rest));
        return;
    }
    sub_node.label += ": none";
    node.children.push_back(std::move(sub_node));
    CertNode quo_node{"search rank-1 quotient in dim " + std::to_string(m), {}};
    HyperLog qlog;
    auto quo = find_rank1_quotient(rep, seed, &qlog);
    log_into(quo_node, qlog);
    if (quo) {
        quo_node.label += ": found phi = " + to_string(quo->phi) + ", lambda = " + quo->lambda.to_string();
        node.children.push_back(std::move(quo_node));
        CertNode rest{"kernel of phi", {}};
        composition_rec(restrict_to_invariant_subspace(rep, kernel(quo->phi)), mu, seed, out, rest);
        node.children.push_back(std::move(rest));
        FactorKey k = FactorKey::rank1(pic_invariant(mu, quo->lambda));
        node.children.push_back({"factor " + k.to_string(), {}});
        out.keys.push_back(k);
        return;
    }
    quo_node.label += ": none";
    node.children.push_back(std::move(quo_node));
    const bool certified = m <= 3;
    FactorKey k{mu, m, witness_serial(rep), true, certified};
    node.children.push_back({"factor " + k.to_string(), {}});
    out.keys.push_back(k);
    if (!certified) out.complete = false;
}

}  // namespace detail

inline CompositionFactors composition_factors(const RationalRep& rep, std::uint64_t seed = default_seed,
                                              CertNode* cert = nullptr) {
    auto mu = casimir_level(rep);
    if (!mu) throw Error(ErrorKind::NotCasimir, "composition factors need a Casimir module");
    CompositionFactors out;
    CertNode node{"composition series, level " + to_string(*mu) + ", dim " + std::to_string(rep.dim()), {}};
    detail::composition_rec(rep, *mu, seed, out, node);
    if (cert) *cert = std::move(node);
    return out;
}

struct Devissage {
    K0Class cls;
    CertNode tree;
    bool complete = true;
};

inline Devissage devissage(const RationalRep& rep, std::uint64_t seed = default_seed) {
    Devissage d;
    d.tree.label = "devissage dim " + std::to_string(rep.dim());
    std::size_t total = 0;
    for (const auto& comp : level_decompose(rep)) {
        CertNode cn{"level " + to_string(comp.level) + " exponent " + std::to_string(comp.exponent) + " dim " +
                        std::to_string(comp.rep.dim()),
                    {}};
        Filtration f = canonical_filtration(comp);
        CertNode fn{"filtration length " + std::to_string(f.steps.size()), {}};
        for (std::size_t i = 0; i < f.steps.size(); ++i) {
            CertNode sn{"step " + std::to_string(i + 1) + " quotient dim " + std::to_string(f.steps[i].quotient.dim()), {}};
            CertNode comp_node;
            auto cf = composition_factors(f.steps[i].quotient, seed, &comp_node);
            sn.children.push_back(std::move(comp_node));
            for (const auto& k : cf.keys) {
                d.cls.add(k, 1);
                total += k.dim;
            }
            d.complete = d.complete && cf.complete;
            fn.children.push_back(std::move(sn));
        }
        cn.children.push_back(std::move(fn));
        d.tree.children.push_back(std::move(cn));
    }
    if (total != rep.dim()) throw Error(ErrorKind::Internal, "devissage leaf dimensions do not add up");
    return d;
}

}  // namespace sl2rat
