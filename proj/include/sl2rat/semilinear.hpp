#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace sl2rat {

/// Dense row-major matrix over Q(z).
class Mat {
   public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
    }
    Mat(std::initializer_list<std::initializer_list<RatFunc>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
        return m;
    }

    static Mat scalar(std::size_t n, const RatFunc& s) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// All entries are constants (elements of Q).
    bool is_constant() const {
        for (const auto& x : a_)
            if (!x.is_constant()) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        same_shape(a, b);
        Mat r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        same_shape(a, b);
        Mat r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const RatFunc& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend Mat operator*(const RatFunc& s, const Mat& m) {
        Mat r = m;
        for (auto& x : r.a_) x = s * x;
        return r;
    }

    /// Entrywise z -> z + k.
    Mat shift(long k) const {
        if (k == 0) return *this;
        Mat r = *this;
        for (auto& x : r.a_) x = x.shift(Rational(k));
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat column(std::size_t j) const { return block(0, j, rows_, 1); }
    Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    const std::vector<RatFunc>& entries() const { return a_; }

   private:
    static void same_shape(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RatFunc> a_;
};

inline Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

inline Mat block_diag(const Mat& a, const Mat& b) {
    Mat r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

/// Kronecker product a (x) b.
inline Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

/// Column-major vectorization of m as an (rows*cols) x 1 column.
inline Mat vec(const Mat& m) {
    Mat r(m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) r(j * m.rows() + i, 0) = m(i, j);
    return r;
}

inline std::string to_string(const Mat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += m(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << to_string(m); }

// ---------------------------------------------------------------------------
// Exact elimination

/// Reduced row echelon form computed in place; pivots are the first nonzero
/// entry of each column scanned left to right. Returns the pivot columns.
inline std::vector<std::size_t> rref(Mat& m, std::size_t ncols_to_reduce) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols_to_reduce && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        RatFunc inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            RatFunc f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m, m.cols()).size(); }

/// Basis of the right kernel, one column per free variable.
inline Mat kernel(const Mat& m) {
    Mat r = m;
    auto piv = rref(r, r.cols());
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    Mat k(m.cols(), m.cols() - piv.size());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        k(f, out) = RatFunc(1);
        for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], out) = -r(i, f);
        ++out;
    }
    return k;
}

/// A particular solution X of a X = b (free variables set to zero).
inline Mat solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row mismatch");
    Mat aug = hstack(a, b);
    auto piv = rref(aug, a.cols());
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        for (std::size_t j = a.cols(); j < aug.cols(); ++j)
            if (!aug(i, j).is_zero()) throw Error(ErrorKind::InconsistentSystem, "linear system is inconsistent");
    Mat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, a.cols() + j);
    return x;
}

struct KernelSolveResult {
    Mat kernel;
    std::optional<Mat> particular;
};

/// Kernel of m, and a particular solution of m x = rhs when rhs is given.
inline KernelSolveResult kernel_solve(const Mat& m, const std::optional<Mat>& rhs = std::nullopt) {
    KernelSolveResult r{kernel(m), std::nullopt};
    if (rhs) r.particular = solve(m, *rhs);
    return r;
}

inline Mat inverse(const Mat& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    Mat aug = hstack(m, Mat::identity(m.rows()));
    auto piv = rref(aug, m.cols());
    if (piv.size() != m.rows()) throw Error(ErrorKind::Singular, "matrix is singular over Q(z)");
    return aug.block(0, m.cols(), m.rows(), m.rows());
}

inline bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

/// Extend the independent columns of p to a basis by appending standard
/// basis vectors; returns the square matrix [p | extra].
inline Mat complete_basis(const Mat& p) {
    const std::size_t n = p.rows();
    Mat cur = p;
    std::size_t r = rank(cur);
    if (r != p.cols()) throw Error(ErrorKind::DimensionMismatch, "basis columns are not independent");
    for (std::size_t i = 0; i < n && cur.cols() < n; ++i) {
        Mat e(n, 1);
        e(i, 0) = RatFunc(1);
        Mat trial = hstack(cur, e);
        if (rank(trial) == cur.cols() + 1) cur = std::move(trial);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Semilinear operators

/// phi = M(z) o shift^k, acting on column vectors by v(z) -> M(z) v(z+k).
struct SemiOp {
    Mat mat;
    long twist = 0;

    static SemiOp identity(std::size_t n) { return {Mat::identity(n), 0}; }

    friend bool operator==(const SemiOp& a, const SemiOp& b) { return a.twist == b.twist && a.mat == b.mat; }
};

/// (M, k) o (N, l) = (M . N(z+k), k + l).
inline SemiOp compose(const SemiOp& a, const SemiOp& b) {
    if (a.mat.cols() != b.mat.rows()) throw Error(ErrorKind::DimensionMismatch, "compose: dimension mismatch");
    return {a.mat * b.mat.shift(a.twist), a.twist + b.twist};
}

/// (M, k)^-1 = (M(z-k)^-1, -k).
inline SemiOp invert(const SemiOp& a) {
    try {
        return {inverse(a.mat).shift(-a.twist), -a.twist};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::Singular, "semilinear operator is singular");
        throw;
    }
}

/// Apply to a column vector (or matrix of columns).
inline Mat apply(const SemiOp& a, const Mat& v) { return a.mat * v.shift(a.twist); }

}  // namespace sl2rat
