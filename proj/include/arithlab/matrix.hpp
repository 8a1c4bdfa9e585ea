#pragma once

#include <vector>
#include <stdexcept>

#include "arithlab/bigint.hpp"

namespace arithlab {

/// Dense exact rational matrix. Determinants use fraction-free (Bareiss)
/// elimination on a cleared-denominator integer copy.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    BigRat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const BigRat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const BigRat& c) const;
    RatMatrix transpose() const;
    bool operator==(const RatMatrix& o) const = default;

    /// Exact determinant (square only), Bareiss on the integer lift.
    BigRat det() const;
    /// Independent oracle: cofactor expansion, exponential; n <= 6.
    BigRat det_cofactor() const;

    /// Inverse; throws std::domain_error when singular.
    RatMatrix inverse() const;

    /// Solve A x = b for square A; throws when singular.
    std::vector<BigRat> solve(const std::vector<BigRat>& b) const;

    /// Basis of the right kernel (columns x with A x = 0).
    std::vector<std::vector<BigRat>> kernel() const;

    /// Row-reduce in place to reduced row echelon form; returns rank.
    size_t rref();

    std::vector<BigRat> mul_vec(const std::vector<BigRat>& v) const;

private:
    size_t rows_, cols_;
    std::vector<BigRat> a_;
};

/// Row-style Hermite normal form of an integer matrix: returns a matrix in
/// echelon form with positive pivots and entries above each pivot reduced,
/// whose rows span the same lattice as the input rows. Zero rows dropped.
std::vector<std::vector<BigInt>> hnf_rows(std::vector<std::vector<BigInt>> m);

BigInt int_det(std::vector<std::vector<BigInt>> m);  // Bareiss, square

}  // namespace arithlab
