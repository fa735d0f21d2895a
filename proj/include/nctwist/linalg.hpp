#ifndef NCTWIST_LINALG_HPP
#define NCTWIST_LINALG_HPP

#include "nctwist/scalar.hpp"

#include <vector>

namespace nct {

/// Dense matrix over the Gaussian rationals. Everything here is exact;
/// rank and kernel go through plain Gauss elimination with pivoting on the
/// first nonzero entry.
class GMatrix {
public:
    GMatrix() = default;
    GMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static GMatrix identity(size_t n) {
        GMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = GRat::one();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    GRat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const GRat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    GMatrix operator+(const GMatrix& o) const {
        check_shape(o);
        GMatrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    GMatrix operator-(const GMatrix& o) const {
        check_shape(o);
        GMatrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    GMatrix operator*(const GMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("GMatrix: shape mismatch");
        GMatrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const GRat& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    GMatrix operator*(const GRat& s) const {
        GMatrix r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    GMatrix dagger() const {
        GMatrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }

    GRat trace() const {
        GRat t;
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    bool operator==(const GMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const GMatrix& o) const { return !(*this == o); }

    size_t rank() const { return GMatrix(*this).echelon(); }

    GRat det() const {
        if (rows_ != cols_) throw std::invalid_argument("GMatrix: det of non-square matrix");
        GMatrix m = *this;
        GRat d = GRat::one();
        for (size_t c = 0; c < cols_; ++c) {
            size_t p = c;
            while (p < rows_ && m(p, c).is_zero()) ++p;
            if (p == rows_) return GRat::zero();
            if (p != c) {
                m.swap_rows(p, c);
                d = -d;
            }
            d *= m(c, c);
            GRat inv = m(c, c).inverse();
            for (size_t i = c + 1; i < rows_; ++i) {
                GRat f = m(i, c) * inv;
                if (f.is_zero()) continue;
                for (size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return d;
    }

    /// Basis of the right kernel {x : Ax = 0}, as columns.
    std::vector<std::vector<GRat>> kernel() const {
        GMatrix m = *this;
        std::vector<size_t> pivot_col;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t p = r;
            while (p < rows_ && m(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            m.swap_rows(p, r);
            GRat inv = m(r, c).inverse();
            for (size_t j = c; j < cols_; ++j) m(r, j) *= inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || m(i, c).is_zero()) continue;
                GRat f = m(i, c);
                for (size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<GRat>> basis;
        for (size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<GRat> v(cols_);
            v[free] = GRat::one();
            for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void check_shape(const GMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GMatrix: shape mismatch");
    }
    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    size_t echelon() {
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t p = r;
            while (p < rows_ && (*this)(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            GRat inv = (*this)(r, c).inverse();
            for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (size_t i = r + 1; i < rows_; ++i) {
                GRat f = (*this)(i, c);
                if (f.is_zero()) continue;
                for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            ++r;
        }
        return r;
    }

    size_t rows_ = 0, cols_ = 0;
    std::vector<GRat> a_;
};

/// Exact solver for square systems, used as the independent oracle for the
/// closed-form parameter conversions. Returns x with Ax = b.
inline std::vector<Rat> solve_rational_system(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    size_t n = A.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular system");
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        Rat inv = Rat(1) / A[c][c];
        for (size_t j = 0; j < n; ++j) A[c][j] *= inv;
        b[c] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (size_t j = 0; j < n; ++j) A[i][j] -= f * A[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

}  // namespace nct

#endif
