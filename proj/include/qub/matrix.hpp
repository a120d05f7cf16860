#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "qub/rational.hpp"

namespace qub {

// Dense matrix over the exact rationals. Sizes here stay small
// (regular representations of Hecke algebras, a few hundred rows at most),
// so plain Gaussian elimination is enough.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const QMat& a, const QMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    QMat& operator+=(const QMat& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    QMat& operator-=(const QMat& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend QMat operator+(QMat a, const QMat& b) { return a += b; }
    friend QMat operator-(QMat a, const QMat& b) { return a -= b; }

    QMat& operator*=(const Rat& c) {
        for (auto& x : a_) x *= c;
        return *this;
    }
    friend QMat operator*(const Rat& c, QMat m) { return m *= c; }

    friend QMat operator*(const QMat& a, const QMat& b) {
        assert(a.cols_ == b.rows_);
        QMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rat& bkj = b(k, j);
                    if (bkj != 0) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    QMat pow(unsigned e) const {
        assert(rows_ == cols_);
        QMat acc = identity(rows_), b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if ((*this)(i, c) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rat inv = Rat(1) / (*this)(r, c);
            for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Rat f = (*this)(i, c);
                if (f == 0) continue;
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        QMat m = *this;
        return int(m.rref().size());
    }

    // Basis of the right kernel, one column per basis vector.
    QMat kernel() const {
        QMat m = *this;
        std::vector<int> piv = m.rref();
        std::vector<bool> is_piv(cols_, false);
        for (int c : piv) is_piv[c] = true;
        int k = cols_ - int(piv.size());
        QMat ker(cols_, k);
        int col = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_piv[c]) continue;
            ker(c, col) = 1;
            for (size_t i = 0; i < piv.size(); ++i) ker(piv[i], col) = -m(int(i), c);
            ++col;
        }
        return ker;
    }

    QMat inverse() const {
        assert(rows_ == cols_);
        QMat aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = 1;
        }
        aug.rref();
        for (int i = 0; i < rows_; ++i)
            if (aug(i, i) != 1) throw std::domain_error("QMat::inverse: singular matrix");
        QMat inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    // Columns of this matrix stacked next to `o`.
    QMat hcat(const QMat& o) const {
        assert(rows_ == o.rows_);
        QMat r(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    QMat col(int j) const {
        QMat c(rows_, 1);
        for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Solves A x = b (b may have several columns). Throws if inconsistent.
inline QMat solve(const QMat& A, const QMat& b) {
    QMat aug = A.hcat(b);
    auto piv = aug.rref();
    for (int c : piv)
        if (c >= A.cols()) throw std::domain_error("solve: inconsistent system");
    QMat x(A.cols(), b.cols());
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(int(i), A.cols() + j);
    return x;
}

}  // namespace qub
