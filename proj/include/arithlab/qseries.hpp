#pragma once

#include <vector>
#include <string>

#include "arithlab/bigint.hpp"
#include "arithlab/matrix.hpp"

namespace arithlab {

/// Truncated q-expansion with exact rational coefficients a_0..a_N.
/// Binary operations truncate to the minimum precision of the operands and
/// record it; weights add under multiplication.
class QSeries {
public:
    QSeries() : weight_(0) {}
    QSeries(int weight, std::vector<BigRat> coeffs)
        : weight_(weight), c_(std::move(coeffs)) {}

    int weight() const { return weight_; }
    long long precision() const { return static_cast<long long>(c_.size()) - 1; }
    const BigRat& coeff(size_t n) const;
    const std::vector<BigRat>& coeffs() const { return c_; }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;  // convolution, truncated
    QSeries scaled(const BigRat& v) const;
    QSeries truncated(long long new_precision) const;

    /// Equality of coefficients through min(precision, o.precision).
    bool agrees_with(const QSeries& o) const;
    bool is_zero_to_precision() const;

    /// All coefficients integral?
    bool is_integral() const;

    std::string to_string(size_t terms = 12) const;

private:
    int weight_;
    std::vector<BigRat> c_;
};

/// Even unimodular lattice: integer Gram, even diagonal, determinant 1.
class EvenLattice {
public:
    EvenLattice(size_t rank, std::vector<std::vector<long long>> gram);

    size_t rank() const { return n_; }
    const std::vector<std::vector<long long>>& gram() const { return g_; }

    static EvenLattice e8();

private:
    size_t n_;
    std::vector<std::vector<long long>> g_;
};

}  // namespace arithlab
