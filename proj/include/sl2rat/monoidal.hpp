#pragma once

// Tensor product, internal Hom and duals of rational modules. Both
// constructions work component by component on the level decomposition.
// On a generalized Casimir component with nilpotent part N the L_{-1}
// matrix is (pi_lambda - N_total) B(z-1)^-1, which on Casimir components
// agrees with the scalar-factor formulas.

#include <vector>

#include "rep.hpp"

namespace sl2rat {

namespace detail {

inline Mat nilpotent_part(const LevelComponent& c) {
    return casimir_matrix(c.rep) - Mat::scalar(c.rep.dim(), RatFunc(c.level));
}

inline RationalRep from_l1_and_casimir(const Rational& lambda, const Mat& b, const Mat& nil) {
    const std::size_t n = b.rows();
    Mat a = (Mat::scalar(n, RatFunc(pi_mu(lambda))) - nil) * inverse(b.shift(-1));
    return {a, b};
}

inline RationalRep sum_all(const std::vector<RationalRep>& parts) {
    RationalRep out = parts.at(0);
    for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
    return out;
}

}  // namespace detail

inline RationalRep tensor(const RationalRep& r1, const RationalRep& r2) {
    auto c1 = level_decompose(r1);
    auto c2 = level_decompose(r2);
    std::vector<RationalRep> parts;
    for (const auto& a : c1) {
        Mat n1 = detail::nilpotent_part(a);
        for (const auto& b : c2) {
            Mat n2 = detail::nilpotent_part(b);
            Mat bb = kron(a.rep.B, b.rep.B);
            Mat nn = kron(n1, Mat::identity(b.rep.dim())) + kron(Mat::identity(a.rep.dim()), n2);
            parts.push_back(detail::from_l1_and_casimir(a.level + b.level, bb, nn));
        }
    }
    return detail::sum_all(parts);
}

/// Hom(r1, r2) on column-major vectorized (dim r2) x (dim r1) matrices.
inline RationalRep internal_hom(const RationalRep& r1, const RationalRep& r2) {
    auto c1 = level_decompose(r1);
    auto c2 = level_decompose(r2);
    std::vector<RationalRep> parts;
    for (const auto& a : c1) {
        Mat n1 = detail::nilpotent_part(a);
        Mat b1it = inverse(a.rep.B).transpose();
        for (const auto& b : c2) {
            Mat n2 = detail::nilpotent_part(b);
            Mat bb = kron(b1it, b.rep.B);
            Mat nn = kron(Mat::identity(a.rep.dim()), n2) - kron(n1.transpose(), Mat::identity(b.rep.dim()));
            parts.push_back(detail::from_l1_and_casimir(b.level - a.level, bb, nn));
        }
    }
    return detail::sum_all(parts);
}

inline RationalRep unit() { return rank1(0, RatFunc(1)); }

inline RationalRep dual(const RationalRep& r) { return internal_hom(r, unit()); }

}  // namespace sl2rat
