#include "arithlab/quadform.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arithlab {

// exact floor(sqrt(a) - r): greatest m with (m + r) <= sqrt(a)
BigInt floor_sqrt_minus(const BigRat& a, const BigRat& r) {
    if (a.sign() < 0) throw std::domain_error("floor_sqrt_minus: negative radicand");
    auto ok = [&](const BigInt& m) {
        BigRat s = BigRat(m) + r;
        if (s.sign() <= 0) return true;
        return s * s <= a;
    };
    double est = std::sqrt(std::max(0.0, a.to_double())) - r.to_double();
    BigInt m(static_cast<long long>(std::floor(est)));
    while (ok(m + BigInt(1))) m += BigInt(1);
    while (!ok(m)) m -= BigInt(1);
    return m;
}

BigInt ceil_neg_sqrt_minus(const BigRat& a, const BigRat& r) {
    // smallest m with (m + r) >= -sqrt(a):  m + r >= 0 always works, else (m+r)^2 <= a
    if (a.sign() < 0) throw std::domain_error("ceil_neg_sqrt_minus: negative radicand");
    auto ok = [&](const BigInt& m) {
        BigRat s = BigRat(m) + r;
        if (s.sign() >= 0) return true;
        return s * s <= a;
    };
    double est = -std::sqrt(std::max(0.0, a.to_double())) - r.to_double();
    BigInt m(static_cast<long long>(std::ceil(est)));
    while (ok(m - BigInt(1))) m -= BigInt(1);
    while (!ok(m)) m += BigInt(1);
    return m;
}

QuadFormEnumerator::QuadFormEnumerator(const RatMatrix& gram) {
    n_ = gram.rows();
    if (gram.cols() != n_) throw std::invalid_argument("QuadFormEnumerator: square Gram required");
    // A = G/2 so that Q(x) = x^T A x
    RatMatrix a(n_, n_);
    BigRat half(BigInt(1), BigInt(2));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            if (!(gram.at(i, j) == gram.at(j, i)))
                throw std::invalid_argument("QuadFormEnumerator: Gram not symmetric");
            a.at(i, j) = gram.at(i, j) * half;
        }
    diag_.assign(n_, BigRat(0));
    mu_.assign(n_, std::vector<BigRat>(n_, BigRat(0)));
    // Fincke-Pohst preparation: Q(x) = sum_i diag_[i] * (x_i + sum_{j>i} mu_[i][j] x_j)^2
    for (size_t i = 0; i < n_; ++i) {
        if (a.at(i, i).sign() <= 0)
            throw std::domain_error("QuadFormEnumerator: form not positive definite");
        diag_[i] = a.at(i, i);
        for (size_t j = i + 1; j < n_; ++j) mu_[i][j] = a.at(i, j) / a.at(i, i);
        for (size_t k = i + 1; k < n_; ++k)
            for (size_t l = k; l < n_; ++l)
                a.at(k, l) -= a.at(k, i) * a.at(i, l) / a.at(i, i);
        // keep symmetry for the next rounds
        for (size_t k = i + 1; k < n_; ++k)
            for (size_t l = i + 1; l < k; ++l) a.at(k, l) = a.at(l, k);
    }
    a_ = std::move(a);
}

BigRat QuadFormEnumerator::value(const std::vector<BigInt>& x) const {
    BigRat q(0);
    for (size_t i = 0; i < n_; ++i) {
        BigRat s(x[i]);
        for (size_t j = i + 1; j < n_; ++j) s += mu_[i][j] * BigRat(x[j]);
        q += diag_[i] * s * s;
    }
    return q;
}

void QuadFormEnumerator::level_range(const BigRat& q, const BigRat& r, const BigRat& t,
                                     BigInt& lo, BigInt& hi, bool& empty) {
    if (t.sign() < 0) { empty = true; return; }
    BigRat bound = t / q;  // (x + r)^2 <= bound
    hi = floor_sqrt_minus(bound, r);
    lo = ceil_neg_sqrt_minus(bound, r);
    empty = lo > hi;
}

bool QuadFormEnumerator::enumerate_from(
    size_t level, std::vector<BigInt>& x, const BigRat& remaining,
    std::vector<BigRat>& shifts,
    const std::function<bool(const std::vector<BigInt>&, const BigRat&)>& visit) const {
    if (level == static_cast<size_t>(-1)) return true;  // unreachable guard
    // shift r = sum_{j>level} mu_[level][j] x_j
    BigRat r(0);
    for (size_t j = level + 1; j < n_; ++j)
        if (!mu_[level][j].is_zero()) r += mu_[level][j] * BigRat(x[j]);
    BigInt lo, hi;
    bool empty = false;
    level_range(diag_[level], r, remaining, lo, hi, empty);
    if (empty) return true;
    for (BigInt v = lo; v <= hi; v += BigInt(1)) {
        x[level] = v;
        BigRat s = BigRat(v) + r;
        BigRat used = diag_[level] * s * s;
        BigRat next = remaining - used;
        if (level == 0) {
            if (!visit(x, next)) return false;  // next = bound - Q(x) residue
        } else {
            if (!enumerate_from(level - 1, x, next, shifts, visit)) return false;
        }
    }
    x[level] = BigInt(0);
    return true;
}

bool QuadFormEnumerator::enumerate(
    const BigRat& bound,
    const std::function<bool(const std::vector<BigInt>&, const BigRat&)>& visit) const {
    if (n_ == 0) return visit({}, bound);
    std::vector<BigInt> x(n_, BigInt(0));
    std::vector<BigRat> shifts;
    // wrap visitor to hand out Q(x) = bound - residue
    auto inner = [&](const std::vector<BigInt>& v, const BigRat& residue) {
        return visit(v, bound - residue);
    };
    return enumerate_from(n_ - 1, x, bound, shifts, inner);
}

std::vector<long long> QuadFormEnumerator::counts_by_value_serial(
    const BigRat& step, size_t max_index, long long budget) const {
    if (step.sign() <= 0) throw std::domain_error("counts_by_value: step must be positive");
    std::vector<long long> counts(max_index + 1, 0);
    BigRat bound = step * BigRat(static_cast<long long>(max_index));
    long long seen = 0;
    bool ok = enumerate(bound, [&](const std::vector<BigInt>&, const BigRat& q) {
        if (++seen > budget) throw std::runtime_error("lattice enumeration budget exceeded");
        BigRat idx = q / step;
        if (!idx.is_integer()) throw std::runtime_error("counts_by_value: off-grid value");
        counts[static_cast<size_t>(idx.num().to_int64())]++;
        return true;
    });
    (void)ok;
    return counts;
}

std::vector<long long> QuadFormEnumerator::counts_by_value(
    const BigRat& step, size_t max_index, long long budget) const {
    if (n_ == 0 || n_ == 1) return counts_by_value_serial(step, max_index, budget);
    if (step.sign() <= 0) throw std::domain_error("counts_by_value: step must be positive");
    BigRat bound = step * BigRat(static_cast<long long>(max_index));
    // split on the outermost coordinate
    size_t top = n_ - 1;
    BigInt lo, hi;
    bool empty = false;
    level_range(diag_[top], BigRat(0), bound, lo, hi, empty);
    std::vector<long long> counts(max_index + 1, 0);
    if (empty) return counts;
    long long lo_i = lo.to_int64(), hi_i = hi.to_int64();
    bool failed = false;
    std::string fail_msg;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<long long> local(max_index + 1, 0);
        long long local_seen = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (long long v = lo_i; v <= hi_i; ++v) {
            if (failed) continue;
            std::vector<BigInt> x(n_, BigInt(0));
            x[top] = BigInt(v);
            BigRat s(v);
            BigRat next = bound - diag_[top] * s * s;
            if (next.sign() < 0) continue;
            std::vector<BigRat> shifts;
            try {
                auto inner = [&](const std::vector<BigInt>&, const BigRat& residue) {
                    if (++local_seen > budget)
                        throw std::runtime_error("lattice enumeration budget exceeded");
                    BigRat q = bound - residue;
                    BigRat idx = q / step;
                    if (!idx.is_integer())
                        throw std::runtime_error("counts_by_value: off-grid value");
                    local[static_cast<size_t>(idx.num().to_int64())]++;
                    return true;
                };
                if (top == 0) {
                    inner(x, next);
                } else {
                    enumerate_from(top - 1, x, next, shifts, inner);
                }
            } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
                {
                    failed = true;
                    fail_msg = e.what();
                }
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (size_t i = 0; i <= max_index; ++i) counts[i] += local[i];
        }
    }
    if (failed) throw std::runtime_error(fail_msg);
    return counts;
}

bool QuadFormEnumerator::find_vector_with_value(const BigRat& target,
                                                std::vector<BigInt>* out) const {
    bool found = false;
    enumerate(target, [&](const std::vector<BigInt>& x, const BigRat& q) {
        if (q == target) {
            bool zero = true;
            for (const auto& c : x)
                if (!c.is_zero()) { zero = false; break; }
            if (!zero || target.is_zero()) {
                found = true;
                if (out) *out = x;
                return false;
            }
        }
        return true;
    });
    return found;
}

}  // namespace arithlab
