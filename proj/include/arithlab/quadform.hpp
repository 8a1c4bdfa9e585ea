#pragma once

#include <functional>
#include <vector>

#include "arithlab/bigint.hpp"
#include "arithlab/matrix.hpp"

namespace arithlab {

/// Exact lattice-point enumeration for a positive definite quadratic form
/// Q(x) = (1/2) x^T G x given by a rational symmetric Gram matrix G.
/// The recursion bounds come from an exact rational Cholesky decomposition;
/// integer ranges per level are certified by exact comparisons, so the
/// enumeration is complete and exact.
class QuadFormEnumerator {
public:
    explicit QuadFormEnumerator(const RatMatrix& gram);

    size_t dim() const { return n_; }

    /// Q(x) for an integer vector.
    BigRat value(const std::vector<BigInt>& x) const;

    /// Visit every x in Z^n with Q(x) <= bound (including x = 0 and both
    /// signs). Visitor returns false to stop early. Returns false iff stopped.
    bool enumerate(const BigRat& bound,
                   const std::function<bool(const std::vector<BigInt>&, const BigRat&)>& visit) const;

    /// counts[k] = #{x : Q(x) = k*step} for k = 0..max_index, single thread.
    /// Throws when a vector's value is not a multiple of `step` or the budget
    /// (total vectors) is exceeded.
    std::vector<long long> counts_by_value_serial(const BigRat& step, size_t max_index,
                                                  long long budget = 10000000) const;

    /// Same contract, parallel over the outermost coordinate when OpenMP is
    /// enabled; results are identical to the serial reference.
    std::vector<long long> counts_by_value(const BigRat& step, size_t max_index,
                                           long long budget = 10000000) const;

    /// Finds some x with Q(x) == target, if any.
    bool find_vector_with_value(const BigRat& target, std::vector<BigInt>* out = nullptr) const;

private:
    size_t n_;
    RatMatrix a_;                      // upper-triangular data: q[i][i], mu[i][j]
    std::vector<BigRat> diag_;         // q_i
    std::vector<std::vector<BigRat>> mu_;

    // range of x at the given level: integer x with q*(x + r)^2 <= t
    static void level_range(const BigRat& q, const BigRat& r, const BigRat& t,
                            BigInt& lo, BigInt& hi, bool& empty);

    bool enumerate_from(size_t level, std::vector<BigInt>& x, const BigRat& remaining,
                        std::vector<BigRat>& shifts,
                        const std::function<bool(const std::vector<BigInt>&, const BigRat&)>& visit) const;
};

/// floor(sqrt(a) - r) for rational a >= 0, exact.
BigInt floor_sqrt_minus(const BigRat& a, const BigRat& r);
/// ceil(-sqrt(a) - r) for rational a >= 0, exact.
BigInt ceil_neg_sqrt_minus(const BigRat& a, const BigRat& r);

}  // namespace arithlab
