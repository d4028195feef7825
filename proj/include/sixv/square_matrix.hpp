#pragma once

#include "sixv/scalar.hpp"

#include <vector>

namespace sixv {

// Dense square matrix of scalars in a single mode. Sized for operator-level
// checks: 4x4 and 8x8 for Yang-Baxter work, up to 64x64 for tensor-leg
// operators.
class SquareMatrix {
public:
    SquareMatrix(int n, Mode mode)
        : n_(n), mode_(mode), e_(static_cast<std::size_t>(n) * n, Scalar::zero(mode)) {
        if (n <= 0) throw DomainError("matrix dimension must be positive");
    }

    static SquareMatrix identity(int n, Mode mode) {
        SquareMatrix m(n, mode);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(mode);
        return m;
    }

    int dim() const { return n_; }
    Mode mode() const { return mode_; }

    Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_zero(double eps = kDefaultEps) const {
        for (const Scalar& x : e_)
            if (!x.is_zero(eps)) return false;
        return true;
    }

    SquareMatrix scaled(const Scalar& s) const {
        SquareMatrix r(n_, mode_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        check_shapes(a, b);
        SquareMatrix r(a.n_, a.mode_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }

    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        check_shapes(a, b);
        SquareMatrix r(a.n_, a.mode_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }

    // Skips structurally zero factors; the operands here are sparse
    // tensor embeddings, so this is the main cost saver.
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        check_shapes(a, b);
        const int n = a.n_;
        SquareMatrix r(n, a.mode_);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_structural_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (bkj.is_structural_zero()) continue;
                    r.at(i, j) = r.at(i, j) + aik * bkj;
                }
            }
        }
        return r;
    }

private:
    static void check_shapes(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw DomainError("matrix dimension mismatch");
        if (a.mode_ != b.mode_) throw ModeMismatchError("mixed-mode matrix operation");
    }

    int n_;
    Mode mode_;
    std::vector<Scalar> e_;
};

inline SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.mode() != b.mode()) throw ModeMismatchError("mixed-mode Kronecker product");
    const int na = a.dim(), nb = b.dim();
    SquareMatrix r(na * nb, a.mode());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_structural_zero()) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (bkl.is_structural_zero()) continue;
                    r.at(i * nb + k, j * nb + l) = aij * bkl;
                }
        }
    return r;
}

inline bool matrix_eq(const SquareMatrix& a, const SquareMatrix& b, double eps = kDefaultEps) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!scalar_eq(a.at(i, j), b.at(i, j), eps)) return false;
    return true;
}

} // namespace sixv
