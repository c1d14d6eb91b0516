#pragma once
// Exact integer matrices.  Determinants use Bareiss fraction-free elimination
// (all intermediate divisions are exact), inverses are returned over Rational.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "concord/rational.hpp"

namespace concord {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            for (long v : r) e_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        a.same_shape(b);
        IntMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        a.same_shape(b);
        IntMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }
    IntMatrix operator-() const {
        IntMatrix c(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = -e_[k];
        return c;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (sgn(a.at(i, k)) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    // Fraction-free Bareiss determinant.
    Int det() const {
        if (!is_square()) throw DimensionMismatch("determinant of non-square matrix");
        std::size_t n = rows_;
        if (n == 0) return Int(1);
        std::vector<Int> a(e_);
        auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
        int sign = 1;
        Int prev(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (sgn(a[idx(k, k)]) == 0) {
                std::size_t r = k + 1;
                while (r < n && sgn(a[idx(r, k)]) == 0) ++r;
                if (r == n) return Int(0);
                for (std::size_t j = 0; j < n; ++j) std::swap(a[idx(k, j)], a[idx(r, j)]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    Int t = a[idx(k, k)] * a[idx(i, j)] - a[idx(i, k)] * a[idx(k, j)];
                    mpz_divexact(a[idx(i, j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
            prev = a[idx(k, k)];
        }
        Int d = a[idx(n - 1, n - 1)];
        return sign > 0 ? d : Int(-d);
    }

    // Exact inverse over Rational via Bareiss: entry (i, j) is the bordered
    // determinant e_i adj(M) e_j^T over det(M), so no intermediate rationals
    // appear.  Throws SingularMatrix when det = 0.
    std::vector<std::vector<Rational>> inverse() const;

    std::size_t rank() const {
        std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) a[i][j] = Rational(at(i, j));
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && a[p][c].is_zero()) ++p;
            if (p == rows_) continue;
            std::swap(a[r], a[p]);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (a[i][c].is_zero()) continue;
                Rational f = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols_; ++j) a[i][j] -= f * a[r][j];
            }
            ++r;
        }
        return r;
    }

private:
    void same_shape(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// v * M^{-1} * v^T, exact.  Uses the bordered-determinant identity
//   det [[M, w^T], [v, 0]] = -v adj(M) w^T,
// so the value is -det(border)/det(M); no rational elimination needed.
inline Rational bilinear_inverse_apply(const IntMatrix& m, const std::vector<Int>& v,
                                       const std::vector<Int>& w) {
    if (!m.is_square()) throw DimensionMismatch("bilinear form needs square matrix");
    std::size_t n = m.rows();
    if (v.size() != n || w.size() != n) throw DimensionMismatch("vector length != matrix dim");
    Int d = m.det();
    if (sgn(d) == 0) throw SingularMatrix("singular matrix in v M^-1 w^T");
    if (n == 0) return Rational(0);
    IntMatrix b(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b.at(i, j) = m.at(i, j);
        b.at(i, n) = w[i];
        b.at(n, i) = v[i];
    }
    b.at(n, n) = 0;
    return Rational(-b.det(), d);
}

inline Rational rational_inverse_apply(const IntMatrix& m, const std::vector<Int>& v) {
    return bilinear_inverse_apply(m, v, v);
}

inline std::vector<std::vector<Rational>> IntMatrix::inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of non-square matrix");
    if (sgn(det()) == 0) throw SingularMatrix("matrix is singular");
    std::size_t n = rows_;
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    std::vector<Int> ei(n, Int(0)), ej(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        ei[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            ej[j] = 1;
            out[i][j] = bilinear_inverse_apply(*this, ei, ej);
            ej[j] = 0;
        }
        ei[i] = 0;
    }
    return out;
}

}  // namespace concord
