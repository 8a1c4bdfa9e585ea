#include "arithlab/fq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <cmath>
#include <unordered_map>

#include "arithlab/numtheory.hpp"

namespace arithlab {

ZmodN::ZmodN(long long modulus, long long value) : n_(modulus) {
    if (modulus <= 0) throw std::domain_error("ZmodN: modulus must be positive");
    v_ = ((value % n_) + n_) % n_;
}

void ZmodN::check(const ZmodN& o) const {
    if (n_ != o.n_) throw std::domain_error("ZmodN: mixed moduli");
}

ZmodN ZmodN::operator+(const ZmodN& o) const { check(o); return ZmodN(n_, v_ + o.v_); }
ZmodN ZmodN::operator-(const ZmodN& o) const { check(o); return ZmodN(n_, v_ - o.v_); }
ZmodN ZmodN::operator*(const ZmodN& o) const {
    check(o);
    return ZmodN(n_, static_cast<long long>(static_cast<unsigned __int128>(v_) * o.v_ % n_));
}
ZmodN ZmodN::inverse() const { return ZmodN(n_, nt::inv_mod(v_, n_)); }
ZmodN ZmodN::pow(long long e) const { return ZmodN(n_, nt::pow_mod(v_, e, n_)); }

// ---------------------------------------------------------------------------

namespace {

// arithmetic on coefficient vectors over F_p, fixed length d after reduction
std::vector<long long> poly_mul_mod(const std::vector<long long>& a,
                                    const std::vector<long long>& b,
                                    const std::vector<long long>& m, long long p) {
    size_t d = m.size() - 1;
    std::vector<long long> r(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < d; ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    // reduce by monic m
    for (size_t k = r.size(); k-- > d;) {
        long long c = r[k];
        if (!c) continue;
        r[k] = 0;
        for (size_t i = 0; i < d; ++i)
            r[k - d + i] = (r[k - d + i] + p - c * static_cast<unsigned __int128>(m[i]) % p) % p;
    }
    r.resize(d);
    return r;
}

std::vector<long long> poly_mod_small(std::vector<long long> a,
                                      const std::vector<long long>& b, long long p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (b.empty()) throw std::domain_error("poly_mod_small: zero divisor");
    long long inv = nt::inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        long long f = static_cast<long long>(a.back() * static_cast<unsigned __int128>(inv) % p);
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<long long>((a[shift + i] + p - f * static_cast<unsigned __int128>(b[i]) % p) % p);
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

std::vector<long long> poly_gcd_small(std::vector<long long> a, std::vector<long long> b, long long p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    while (!b.empty()) {
        std::vector<long long> r = poly_mod_small(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_is_irreducible(const std::vector<long long>& m, long long p) {
    // m monic degree d; irreducible iff t^(p^d) == t mod m and for every prime
    // r | d the map t -> t^(p^(d/r)) has no fixed subfield intersection:
    // gcd(t^(p^(d/r)) - t, m) = 1.
    size_t d = m.size() - 1;
    if (d == 1) return true;
    auto mul = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        return poly_mul_mod(a, b, m, p);
    };
    auto pow_p = [&](std::vector<long long> base) {
        std::vector<long long> r(d, 0);
        r[0] = 1;
        long long e = p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    };
    std::vector<long long> t(d, 0);
    t[1] = 1;
    // frob[k] = t^(p^k) for k = 0..d
    std::vector<std::vector<long long>> frob(d + 1);
    frob[0] = t;
    for (size_t k = 1; k <= d; ++k) frob[k] = pow_p(frob[k - 1]);
    if (frob[d] != t) return false;
    for (auto [r, e] : nt::factor(static_cast<long long>(d))) {
        std::vector<long long> diff(d, 0);
        const auto& tk = frob[d / static_cast<size_t>(r)];
        for (size_t i = 0; i < d; ++i) diff[i] = (tk[i] - t[i] + p) % p;
        auto g = poly_gcd_small(m, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(long long p, int d, std::vector<long long> mod)
    : p_(p), d_(d), mod_(std::move(mod)) {
    q_ = 1;
    for (int i = 0; i < d; ++i) q_ *= p;
}

std::shared_ptr<const FiniteField> FiniteField::make(long long p, int d) {
    if (!nt::is_prime(p)) throw std::domain_error("FiniteField: p must be prime");
    if (d < 1) throw std::domain_error("FiniteField: degree must be >= 1");
    double qd = std::pow(static_cast<double>(p), d);
    if (qd > 65536.0 + 0.5) throw std::domain_error("FiniteField: q must be <= 2^16");
    if (d == 1) {
        std::vector<long long> m{0, 1};  // t  (so t == 0, field is F_p itself)
        return std::shared_ptr<const FiniteField>(new FiniteField(p, d, std::move(m)));
    }
    // search lexicographically smallest monic irreducible: compare coefficient
    // tuples (c_{d-1}, ..., c_1, c_0)
    std::vector<long long> c(static_cast<size_t>(d), 0);  // c[i] = coefficient of t^(d-1-i)
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        for (int i = d - 1; i >= 0; --i) {
            c[static_cast<size_t>(i)] = v % p;
            v /= p;
        }
        std::vector<long long> m(static_cast<size_t>(d) + 1, 0);
        m[static_cast<size_t>(d)] = 1;
        for (int i = 0; i < d; ++i) m[static_cast<size_t>(d - 1 - i)] = c[static_cast<size_t>(i)];
        if (poly_is_irreducible(m, p))
            return std::shared_ptr<const FiniteField>(new FiniteField(p, d, std::move(m)));
    }
    throw std::logic_error("FiniteField: no irreducible polynomial found");
}

FqElement::FqElement(std::shared_ptr<const FiniteField> f, std::vector<long long> c)
    : f_(std::move(f)), c_(std::move(c)) {}

FqElement FiniteField::zero() const {
    return FqElement(shared_from_this(), std::vector<long long>(static_cast<size_t>(d_), 0));
}

FqElement FiniteField::one() const { return from_int(1); }

FqElement FiniteField::generator_t() const {
    std::vector<long long> c(static_cast<size_t>(d_), 0);
    if (d_ == 1) {
        c[0] = (p_ - mod_[0] % p_) % p_;
    } else {
        c[1] = 1;
    }
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FiniteField::from_coeffs(std::vector<long long> c) const {
    c.resize(static_cast<size_t>(d_), 0);
    for (auto& v : c) v = ((v % p_) + p_) % p_;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FiniteField::from_int(long long c) const {
    std::vector<long long> v(static_cast<size_t>(d_), 0);
    v[0] = ((c % p_) + p_) % p_;
    return FqElement(shared_from_this(), std::move(v));
}

FqElement FiniteField::element(long long index) const {
    std::vector<long long> c(static_cast<size_t>(d_), 0);
    for (int i = 0; i < d_; ++i) {
        c[static_cast<size_t>(i)] = index % p_;
        index /= p_;
    }
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FiniteField::multiplicative_generator() const {
    for (long long idx = 1; idx < q_; ++idx) {
        FqElement g = element(idx);
        if (!g.is_zero() && g.order() == q_ - 1) return g;
    }
    throw std::logic_error("FiniteField: no generator found");
}

bool FqElement::is_zero() const {
    for (long long v : c_)
        if (v) return false;
    return true;
}

long long FqElement::index() const {
    long long idx = 0;
    for (size_t i = c_.size(); i-- > 0;) idx = idx * f_->p() + c_[i];
    return idx;
}

FqElement FqElement::operator+(const FqElement& o) const {
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % f_->p();
    return FqElement(f_, std::move(r));
}

FqElement FqElement::operator-(const FqElement& o) const {
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] - o.c_[i] + f_->p()) % f_->p();
    return FqElement(f_, std::move(r));
}

FqElement FqElement::operator*(const FqElement& o) const {
    if (f_->degree() == 1) {
        long long p = f_->p();
        std::vector<long long> r{static_cast<long long>(
            static_cast<unsigned __int128>(c_[0]) * o.c_[0] % p)};
        return FqElement(f_, std::move(r));
    }
    return FqElement(f_, poly_mul_mod(c_, o.c_, f_->modulus_poly(), f_->p()));
}

FqElement FqElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FqElement r = FqElement(f_, std::vector<long long>(c_.size(), 0));
    r.c_[0] = 1;
    FqElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw std::domain_error("FqElement: inverse of zero");
    return pow(f_->q() - 2);
}

bool FqElement::operator==(const FqElement& o) const {
    return f_.get() == o.f_.get() && c_ == o.c_;
}

long long FqElement::order() const {
    if (is_zero()) throw std::domain_error("FqElement: order of zero");
    long long n = f_->q() - 1;
    long long ord = n;
    for (auto [pr, e] : nt::factor(n)) {
        for (int i = 0; i < e; ++i) {
            if (pow(ord / pr) == f_->one()) ord /= pr;
            else break;
        }
    }
    return ord;
}

std::string FqElement::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

long long discrete_log(const FqElement& base, const FqElement& target) {
    const auto& f = base.field();
    if (target.is_zero()) throw std::domain_error("discrete_log: target is zero");
    long long n = f->q() - 1;
    if (base.order() != n) throw std::domain_error("discrete_log: base is not a generator");
    // baby-step/giant-step
    long long m = 1;
    while (m * m < n) ++m;
    std::unordered_map<long long, long long> table;
    table.reserve(static_cast<size_t>(m) * 2);
    FqElement cur = f->one();
    for (long long j = 0; j < m; ++j) {
        table.emplace(cur.index(), j);  // keeps the smallest j
        cur = cur * base;
    }
    FqElement giant = base.pow(m).inverse();  // base^(-m)
    FqElement y = target;
    long long best = -1;
    for (long long i = 0; i <= m; ++i) {
        auto it = table.find(y.index());
        if (it != table.end()) {
            long long k = i * m + it->second;
            if (k < n && (best < 0 || k < best)) best = k;
        }
        y = y * giant;
    }
    if (best < 0) throw std::logic_error("discrete_log: not found");
    return best;
}

}  // namespace arithlab
