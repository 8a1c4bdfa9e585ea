#include "arithlab/matrix.hpp"

#include <algorithm>

namespace arithlab {

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = BigRat(1);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const BigRat& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const BigRat& c) const {
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

BigInt int_det(std::vector<std::vector<BigInt>> m) {
    size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return BigInt(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    BigInt d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

BigRat RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    size_t n = rows_;
    if (n == 0) return BigRat(1);
    // clear denominators row by row
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    BigRat scale(1);
    for (size_t i = 0; i < n; ++i) {
        BigInt l(1);
        for (size_t j = 0; j < n; ++j) l = BigInt::lcm(l, at(i, j).den());
        scale *= BigRat(BigInt(1), l);
        for (size_t j = 0; j < n; ++j) {
            const BigRat& v = at(i, j);
            m[i][j] = v.num() * (l / v.den());
        }
    }
    return BigRat(int_det(std::move(m))) * scale;
}

BigRat RatMatrix::det_cofactor() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    if (rows_ > 6) throw std::invalid_argument("det_cofactor: n too large");
    if (rows_ == 0) return BigRat(1);
    if (rows_ == 1) return at(0, 0);
    BigRat d(0);
    int sign = 1;
    for (size_t j = 0; j < cols_; ++j) {
        RatMatrix minor(rows_ - 1, cols_ - 1);
        for (size_t r = 1; r < rows_; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < cols_; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        BigRat term = at(0, j) * minor.det_cofactor();
        d += sign > 0 ? term : -term;
        sign = -sign;
    }
    return d;
}

size_t RatMatrix::rref() {
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t piv = rank;
        while (piv < rows_ && at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (size_t j = 0; j < cols_; ++j) std::swap(at(rank, j), at(piv, j));
        BigRat inv = at(rank, col).inverse();
        for (size_t j = col; j < cols_; ++j) at(rank, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == rank || at(i, col).is_zero()) continue;
            BigRat f = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(rank, j);
        }
        ++rank;
    }
    return rank;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    size_t n = rows_;
    RatMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = BigRat(1);
    }
    if (aug.rref() != n) throw std::domain_error("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<BigRat> RatMatrix::solve(const std::vector<BigRat>& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve: shape mismatch");
    size_t n = rows_;
    RatMatrix aug(n, n + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n) = b[i];
    }
    aug.rref();
    std::vector<BigRat> x(n);
    for (size_t i = 0; i < n; ++i) {
        if (aug.at(i, i).is_zero()) throw std::domain_error("solve: singular matrix");
        x[i] = aug.at(i, n);
    }
    return x;
}

std::vector<std::vector<BigRat>> RatMatrix::kernel() const {
    RatMatrix m = *this;
    size_t rank = m.rref();
    // locate pivot columns
    std::vector<long long> pivot_of_col(cols_, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rank; ++c) {
        if (!m.at(r, c).is_zero()) pivot_of_col[c] = static_cast<long long>(r++);
    }
    std::vector<std::vector<BigRat>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<BigRat> v(cols_);
        v[c] = BigRat(1);
        for (size_t c2 = 0; c2 < cols_; ++c2) {
            if (pivot_of_col[c2] >= 0)
                v[c2] = -m.at(static_cast<size_t>(pivot_of_col[c2]), c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BigRat> RatMatrix::mul_vec(const std::vector<BigRat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mul_vec: shape mismatch");
    std::vector<BigRat> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<std::vector<BigInt>> hnf_rows(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return m;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        // reduce column below `row` by gcd steps
        while (true) {
            size_t best = m.size();
            for (size_t i = row; i < m.size(); ++i) {
                if (m[i][col].is_zero()) continue;
                if (best == m.size() ||
                    m[i][col].abs() < m[best][col].abs()) best = i;
            }
            if (best == m.size()) break;  // column is zero from `row` down
            std::swap(m[row], m[best]);
            if (m[row][col].is_negative())
                for (auto& x : m[row]) x = -x;
            bool clean = true;
            for (size_t i = row + 1; i < m.size(); ++i) {
                if (m[i][col].is_zero()) continue;
                BigInt q = m[i][col] / m[row][col];
                if (!q.is_zero())
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                if (!m[i][col].is_zero()) clean = false;
            }
            if (clean) {
                // reduce entries above the pivot
                for (size_t i = 0; i < row; ++i) {
                    BigInt q, r2;
                    BigInt::divmod(m[i][col], m[row][col], q, r2);
                    if (r2.is_negative()) q -= BigInt(1);
                    if (!q.is_zero())
                        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                }
                ++row;
                break;
            }
        }
    }
    m.resize(row);
    return m;
}

}  // namespace arithlab
