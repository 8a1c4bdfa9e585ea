#include "arithlab/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arithlab {

const BigRat& QSeries::coeff(size_t n) const {
    if (n >= c_.size()) throw std::out_of_range("QSeries: coefficient beyond precision");
    return c_[n];
}

QSeries QSeries::operator+(const QSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<BigRat> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
    return QSeries(weight_, std::move(r));
}

QSeries QSeries::operator-(const QSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<BigRat> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
    return QSeries(weight_, std::move(r));
}

QSeries QSeries::operator*(const QSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<BigRat> r(n, BigRat(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return QSeries(weight_ + o.weight_, std::move(r));
}

QSeries QSeries::scaled(const BigRat& v) const {
    std::vector<BigRat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * v;
    return QSeries(weight_, std::move(r));
}

QSeries QSeries::truncated(long long new_precision) const {
    if (new_precision > precision())
        throw std::invalid_argument("QSeries: cannot extend precision");
    std::vector<BigRat> r(c_.begin(), c_.begin() + new_precision + 1);
    return QSeries(weight_, std::move(r));
}

bool QSeries::agrees_with(const QSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

bool QSeries::is_zero_to_precision() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool QSeries::is_integral() const {
    for (const auto& v : c_)
        if (!v.is_integer()) return false;
    return true;
}

std::string QSeries::to_string(size_t terms) const {
    std::ostringstream os;
    size_t shown = 0;
    for (size_t i = 0; i < c_.size() && shown < terms; ++i) {
        if (c_[i].is_zero()) continue;
        if (shown) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        BigRat a = c_[i].abs();
        if (i == 0 || !(a == BigRat(1))) os << a.to_string();
        if (i == 1) os << (a == BigRat(1) ? "q" : "*q");
        else if (i > 1) os << (a == BigRat(1) ? "q^" : "*q^") << i;
        ++shown;
    }
    if (!shown) return "0";
    os << " + O(q^" << c_.size() << ")";
    return os.str();
}

EvenLattice::EvenLattice(size_t rank, std::vector<std::vector<long long>> gram)
    : n_(rank), g_(std::move(gram)) {
    if (n_ == 0 || n_ % 8 != 0)
        throw std::domain_error("EvenLattice: rank must be a positive multiple of 8");
    if (g_.size() != n_) throw std::invalid_argument("EvenLattice: Gram shape");
    for (size_t i = 0; i < n_; ++i) {
        if (g_[i].size() != n_) throw std::invalid_argument("EvenLattice: Gram shape");
        if (g_[i][i] % 2 != 0) throw std::domain_error("EvenLattice: diagonal must be even");
        for (size_t j = 0; j < n_; ++j)
            if (g_[i][j] != g_[j][i]) throw std::domain_error("EvenLattice: Gram not symmetric");
    }
    std::vector<std::vector<BigInt>> m(n_, std::vector<BigInt>(n_));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) m[i][j] = BigInt(g_[i][j]);
    if (!(int_det(std::move(m)) == BigInt(1)))
        throw std::domain_error("EvenLattice: determinant must be 1 (unimodular)");
}

EvenLattice EvenLattice::e8() {
    // Cartan matrix of E8 (chain 1-3-4-5-6-7-8 with 2 attached to 4)
    std::vector<std::vector<long long>> g(8, std::vector<long long>(8, 0));
    for (int i = 0; i < 8; ++i) g[i][i] = 2;
    auto link = [&](int a, int b) { g[a][b] = g[b][a] = -1; };
    link(0, 2);
    link(2, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    link(6, 7);
    link(1, 3);
    return EvenLattice(8, std::move(g));
}

}  // namespace arithlab
