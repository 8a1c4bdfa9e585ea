#include "arithlab/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "arithlab/matrix.hpp"
#include "arithlab/numtheory.hpp"

namespace arithlab {

static constexpr long long kDegreeCap = 100000;

// ---------------------------------------------------------------- RatPoly

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (static_cast<long long>(c_.size()) - 1 > kDegreeCap)
        throw std::overflow_error("RatPoly: degree cap exceeded");
}

RatPoly RatPoly::constant(const BigRat& v) {
    RatPoly p;
    if (!v.is_zero()) p.c_ = {v};
    return p;
}

RatPoly RatPoly::x() { return monomial(1, BigRat(1)); }

RatPoly RatPoly::monomial(size_t deg, const BigRat& coef) {
    RatPoly p;
    if (!coef.is_zero()) {
        p.c_.assign(deg + 1, BigRat(0));
        p.c_[deg] = coef;
    }
    return p;
}

const BigRat& RatPoly::coef(size_t i) const {
    static const BigRat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const BigRat& RatPoly::lead() const {
    if (c_.empty()) throw std::domain_error("RatPoly: lead of zero");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coef(i) + o.coef(i);
    r.trim();
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    RatPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

RatPoly RatPoly::scaled(const BigRat& v) const {
    RatPoly r = *this;
    for (auto& x : r.c_) x *= v;
    r.trim();
    return r;
}

void RatPoly::divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const {
    if (d.is_zero()) throw std::domain_error("RatPoly: division by zero");
    r = *this;
    q = RatPoly();
    if (degree() < d.degree()) return;
    q.c_.assign(static_cast<size_t>(degree() - d.degree()) + 1, BigRat(0));
    BigRat inv_lead = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - d.degree());
        BigRat f = r.lead() * inv_lead;
        q.c_[shift] = f;
        for (size_t i = 0; i < d.c_.size(); ++i)
            r.c_[shift + i] -= f * d.c_[i];
        r.trim();
    }
    q.trim();
}

RatPoly RatPoly::derivative() const {
    RatPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigRat(static_cast<long long>(i));
    r.trim();
    return r;
}

BigRat RatPoly::eval(const BigRat& x) const {
    BigRat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly q, r;
        a.divmod(b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.lead().inverse());
    return a;
}

RatPoly RatPoly::xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(BigRat(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(BigRat(1));
    while (!r1.is_zero()) {
        RatPoly q, r;
        r0.divmod(r1, q, r);
        r0 = std::move(r1); r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        s0 = std::move(s1); s1 = std::move(s2);
        RatPoly t2 = t0 - q * t1;
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        BigRat inv = r0.lead().inverse();
        r0 = r0.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    s = std::move(s0);
    t = std::move(t0);
    return r0;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        BigRat a = c_[i].abs();
        if (i == 0 || !(a == BigRat(1))) os << a.to_string();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- IntPoly

void IntPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (static_cast<long long>(c_.size()) - 1 > kDegreeCap)
        throw std::overflow_error("IntPoly: degree cap exceeded");
}

IntPoly IntPoly::constant(const BigInt& v) {
    IntPoly p;
    if (!v.is_zero()) p.c_ = {v};
    return p;
}

IntPoly IntPoly::from_int_list(const std::vector<long long>& c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}

const BigInt& IntPoly::coef(size_t i) const {
    static const BigInt zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const BigInt& IntPoly::lead() const {
    if (c_.empty()) throw std::domain_error("IntPoly: lead of zero");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coef(i) + o.coef(i);
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = c_[i] * BigInt(static_cast<long long>(i));
    r.trim();
    return r;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& v : c_) g = BigInt::gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    IntPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("IntPoly: division by zero");
    RatPoly q, r;
    to_rat().divmod(d.to_rat(), q, r);
    if (!r.is_zero()) throw std::domain_error("IntPoly: not divisible");
    std::vector<BigInt> out(q.coefs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        const BigRat& v = q.coefs()[i];
        if (!v.is_integer()) throw std::domain_error("IntPoly: quotient not integral");
        out[i] = v.num();
    }
    return IntPoly(std::move(out));
}

bool IntPoly::divisible_by(const IntPoly& d) const {
    if (d.is_zero()) return is_zero();
    RatPoly q, r;
    to_rat().divmod(d.to_rat(), q, r);
    if (!r.is_zero()) return false;
    for (const auto& v : q.coefs())
        if (!v.is_integer()) return false;
    return true;
}

IntPoly IntPoly::reversed() const {
    IntPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

RatPoly IntPoly::to_rat() const {
    std::vector<BigRat> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = BigRat(c_[i]);
    return RatPoly(std::move(v));
}

IntPoly IntPoly::from_rat_primitive(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    BigInt l(1);
    for (const auto& v : p.coefs()) l = BigInt::lcm(l, v.den());
    std::vector<BigInt> c(p.coefs().size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = p.coefs()[i].num() * (l / p.coefs()[i].den());
    IntPoly q(std::move(c));
    return q.primitive_part();
}

std::string IntPoly::to_string(const std::string& var) const {
    return to_rat().to_string(var);
}

// -------------------------------------------------------------- resultant

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return BigInt(0);
    size_t n = static_cast<size_t>(f.degree());
    size_t m = static_cast<size_t>(g.degree());
    if (n == 0) return BigInt::pow(f.coef(0), m);
    if (m == 0) return BigInt::pow(g.coef(0), n);
    size_t N = n + m;
    std::vector<std::vector<BigInt>> s(N, std::vector<BigInt>(N, BigInt(0)));
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i <= n; ++i)
            s[r][r + i] = f.coef(n - i);
    for (size_t r = 0; r < n; ++r)
        for (size_t i = 0; i <= m; ++i)
            s[m + r][r + i] = g.coef(m - i);
    return int_det(std::move(s));
}

BigRat discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant: degree must be >= 1");
    long long n = f.degree();
    BigInt r = resultant(f, f.derivative());
    // a_n D(f) = (-1)^(n(n-1)/2) R(f, f')
    bool neg = ((n * (n - 1) / 2) % 2) == 1;
    BigRat d = BigRat(r, f.lead());
    return neg ? -d : d;
}

// -------------------------------------------------------------- cyclotomic

IntPoly cyclotomic_poly(long long n) {
    if (n < 1) throw std::domain_error("cyclotomic_poly: n must be >= 1");
    static std::map<long long, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> xn(static_cast<size_t>(n) + 1, BigInt(0));
    xn[0] = BigInt(-1);
    xn[static_cast<size_t>(n)] = BigInt(1);
    IntPoly num(std::move(xn));
    for (long long d : nt::divisors(n)) {
        if (d == n) continue;
        num = num.divide_exact(cyclotomic_poly(d));
    }
    cache[n] = num;
    return num;
}

// ----------------------------------------------------- factorization over Z

namespace {

using ModPoly = std::vector<long long>;  // over F_p, coefficients in [0, p)
using u128 = unsigned __int128;

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<long long>((r[i + j] + static_cast<u128>(a[i]) * b[j]) % p);
    }
    mp_trim(r);
    return r;
}

void mp_divmod(const ModPoly& a, const ModPoly& b, long long p, ModPoly& q, ModPoly& r) {
    if (b.empty()) throw std::domain_error("mod poly division by zero");
    ModPoly rr = a;
    mp_trim(rr);
    if (rr.size() < b.size()) { q.clear(); r = rr; return; }
    q.assign(rr.size() - b.size() + 1, 0);
    long long inv = nt::inv_mod(b.back(), p);
    for (size_t sh = rr.size() - b.size() + 1; sh-- > 0;) {
        long long top = rr[sh + b.size() - 1];
        if (top == 0) continue;
        long long f = static_cast<long long>(static_cast<u128>(top) * inv % p);
        q[sh] = f;
        for (size_t i = 0; i < b.size(); ++i)
            rr[sh + i] = static_cast<long long>((rr[sh + i] + p - static_cast<u128>(f) * b[i] % p) % p);
    }
    rr.resize(b.size() - 1);
    mp_trim(rr);
    mp_trim(q);
    r = std::move(rr);
}

ModPoly mp_mod(const ModPoly& a, const ModPoly& b, long long p) {
    ModPoly q, r;
    mp_divmod(a, b, p, q, r);
    return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long long p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        ModPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long long inv = nt::inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<long long>(c * static_cast<u128>(inv) % p);
    }
    return a;
}

ModPoly mp_powmod(ModPoly base, const BigInt& e, const ModPoly& mod, long long p) {
    ModPoly r{1};
    base = mp_mod(base, mod, p);
    size_t bits = e.bit_length();
    for (size_t i = 0; i < bits; ++i) {
        if (e.bit(i)) r = mp_mod(mp_mul(r, base, p), mod, p);
        base = mp_mod(mp_mul(base, base, p), mod, p);
    }
    return r;
}

ModPoly mp_derivative(const ModPoly& a, long long p) {
    ModPoly r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * (static_cast<long long>(i) % p) % p);
    mp_trim(r);
    return r;
}

// extended euclid over F_p[x]: s*a + t*b = 1 for coprime a, b
void mp_bezout(const ModPoly& a, const ModPoly& b, long long p, ModPoly& s, ModPoly& t) {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    auto sub_scaled = [&](ModPoly x, const ModPoly& q, const ModPoly& y) {
        ModPoly qy = mp_mul(q, y, p);
        x.resize(std::max(x.size(), qy.size()), 0);
        for (size_t i = 0; i < qy.size(); ++i) x[i] = (x[i] - qy[i] % p + p) % p;
        mp_trim(x);
        return x;
    };
    while (!r1.empty()) {
        ModPoly q, r;
        mp_divmod(r0, r1, p, q, r);
        r0 = std::move(r1); r1 = std::move(r);
        ModPoly s2 = sub_scaled(s0, q, s1);
        s0 = std::move(s1); s1 = std::move(s2);
        ModPoly t2 = sub_scaled(t0, q, t1);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("mp_bezout: inputs not coprime");
    long long inv = nt::inv_mod(r0[0], p);
    for (auto& c : s0) c = static_cast<long long>(c * static_cast<u128>(inv) % p);
    for (auto& c : t0) c = static_cast<long long>(c * static_cast<u128>(inv) % p);
    s = std::move(s0);
    t = std::move(t0);
}

// Berlekamp factorization of a squarefree monic polynomial over F_p.
std::vector<ModPoly> berlekamp(const ModPoly& f, long long p) {
    size_t n = f.size() - 1;
    if (n <= 1) return {f};
    std::vector<std::vector<long long>> Q(n, std::vector<long long>(n, 0));
    ModPoly xp = mp_powmod(ModPoly{0, 1}, BigInt(p), f, p);
    ModPoly cur{1};
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < cur.size(); ++j) Q[i][j] = cur[j];
        cur = mp_mod(mp_mul(cur, xp, p), f, p);
    }
    for (size_t i = 0; i < n; ++i) Q[i][i] = (Q[i][i] - 1 + p) % p;
    // left kernel of (Q - I) = kernel of its transpose
    std::vector<std::vector<long long>> M(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = Q[j][i];
    std::vector<long long> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(M[rank], M[piv]);
        long long inv = nt::inv_mod(M[rank][col], p);
        for (size_t j = 0; j < n; ++j)
            M[rank][j] = static_cast<long long>(M[rank][j] * static_cast<u128>(inv) % p);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            long long fm = M[i][col];
            for (size_t j = 0; j < n; ++j)
                M[i][j] = static_cast<long long>((M[i][j] + p - fm * static_cast<u128>(M[rank][j]) % p) % p);
        }
        pivot_col.push_back(static_cast<long long>(col));
        ++rank;
    }
    std::vector<ModPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (long long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        ModPoly v(n, 0);
        v[col] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col[r])] = (p - M[r][col]) % p;
        mp_trim(v);
        basis.push_back(std::move(v));
    }
    size_t k = basis.size() + 1;  // constants contribute one dimension implicitly
    // the all-ones direction (constant polynomial 1) is always in the kernel and
    // appears among `basis` columns; count distinct factors = kernel dimension
    k = basis.size();
    std::vector<ModPoly> factors{f};
    if (k <= 1) return factors;
    for (const ModPoly& v : basis) {
        if (factors.size() >= k) break;
        if (v.size() <= 1) continue;  // constant splits nothing
        std::vector<ModPoly> next;
        for (const ModPoly& w : factors) {
            if (w.size() <= 2) { next.push_back(w); continue; }
            ModPoly rem = w;
            for (long long c = 0; c < p && rem.size() > 2; ++c) {
                ModPoly shifted = v;
                shifted.resize(std::max<size_t>(shifted.size(), 1), 0);
                shifted[0] = (shifted[0] + p - c) % p;
                mp_trim(shifted);
                if (shifted.empty()) continue;
                ModPoly g = mp_gcd(rem, shifted, p);
                if (g.size() > 1 && g.size() < rem.size()) {
                    next.push_back(g);
                    ModPoly q, r2;
                    mp_divmod(rem, g, p, q, r2);
                    rem = std::move(q);
                }
            }
            if (rem.size() > 1) next.push_back(rem);
        }
        factors = std::move(next);
    }
    return factors;
}

BigInt symmetric_mod(const BigInt& a, const BigInt& M) {
    BigInt r = a.mod_euclid(M);
    if (BigInt(2) * r > M) r -= M;
    return r;
}

BigInt inv_mod_big(const BigInt& a, const BigInt& m) {
    BigInt g = m, x(0), x1(1), a1 = a.mod_euclid(m);
    while (!a1.is_zero()) {
        BigInt q = g / a1;
        BigInt t = g - q * a1; g = a1; a1 = t;
        t = x - q * x1; x = x1; x1 = t;
    }
    if (!g.is_one()) throw std::domain_error("inv_mod_big: not invertible");
    return x.mod_euclid(m);
}

using LiftPoly = std::vector<BigInt>;  // coefficients in [0, M)

void lp_trim(LiftPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

LiftPoly lp_from_mod(const ModPoly& a) {
    LiftPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = BigInt(a[i]);
    return r;
}

LiftPoly lp_reduce(const LiftPoly& a, const BigInt& M) {
    LiftPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].mod_euclid(M);
    lp_trim(r);
    return r;
}

LiftPoly lp_mulmod(const LiftPoly& a, const LiftPoly& b, const BigInt& M) {
    if (a.empty() || b.empty()) return {};
    LiftPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]).mod_euclid(M);
    }
    lp_trim(r);
    return r;
}

LiftPoly lp_addmod(const LiftPoly& a, const LiftPoly& b, const BigInt& M) {
    LiftPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) {
        BigInt v = (i < a.size() ? a[i] : BigInt(0)) + (i < b.size() ? b[i] : BigInt(0));
        r[i] = v.mod_euclid(M);
    }
    lp_trim(r);
    return r;
}

LiftPoly lp_submod(const LiftPoly& a, const LiftPoly& b, const BigInt& M) {
    LiftPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) {
        BigInt v = (i < a.size() ? a[i] : BigInt(0)) - (i < b.size() ? b[i] : BigInt(0));
        r[i] = v.mod_euclid(M);
    }
    lp_trim(r);
    return r;
}

// division by a monic divisor, everything mod M
void lp_divmod_monic(const LiftPoly& a, const LiftPoly& b, const BigInt& M,
                     LiftPoly& q, LiftPoly& r) {
    LiftPoly rr = a;
    lp_trim(rr);
    if (rr.size() < b.size()) { q.clear(); r = std::move(rr); return; }
    q.assign(rr.size() - b.size() + 1, BigInt(0));
    for (size_t sh = rr.size() - b.size() + 1; sh-- > 0;) {
        BigInt top = rr[sh + b.size() - 1];
        if (top.is_zero()) continue;
        q[sh] = top;
        for (size_t i = 0; i < b.size(); ++i)
            rr[sh + i] = (rr[sh + i] - top * b[i]).mod_euclid(M);
    }
    rr.resize(b.size() - 1);
    lp_trim(rr);
    lp_trim(q);
    r = std::move(rr);
}

struct HenselPair {
    LiftPoly g, h, s, t;  // f = g*h, s*g + t*h = 1, h monic
};

// one quadratic lifting step from modulus m to m^2 (von zur Gathen & Gerhard 15.10)
HenselPair hensel_step(const LiftPoly& f_full, const HenselPair& in, const BigInt& m) {
    BigInt M = m * m;
    LiftPoly f = lp_reduce(f_full, M);
    LiftPoly e = lp_submod(f, lp_mulmod(in.g, in.h, M), M);
    LiftPoly q, r;
    lp_divmod_monic(lp_mulmod(in.s, e, M), in.h, M, q, r);
    HenselPair out;
    out.g = lp_addmod(in.g, lp_addmod(lp_mulmod(in.t, e, M), lp_mulmod(q, in.g, M), M), M);
    out.h = lp_addmod(in.h, r, M);
    LiftPoly one{BigInt(1)};
    LiftPoly b = lp_submod(lp_addmod(lp_mulmod(in.s, out.g, M), lp_mulmod(in.t, out.h, M), M), one, M);
    LiftPoly c, d;
    lp_divmod_monic(lp_mulmod(in.s, b, M), out.h, M, c, d);
    out.s = lp_submod(in.s, d, M);
    out.t = lp_submod(in.t, lp_addmod(lp_mulmod(in.t, b, M), lp_mulmod(c, out.g, M), M), M);
    return out;
}

// lift the monic factorization of `monic_f` (mod p) to mod M (M a 2-power tower over p)
std::vector<LiftPoly> lift_tree(const LiftPoly& fM, std::vector<ModPoly> fs,
                                long long p, const BigInt& M) {
    if (fs.size() == 1) return {fM};
    size_t half = fs.size() / 2;
    std::vector<ModPoly> left(fs.begin(), fs.begin() + half);
    std::vector<ModPoly> right(fs.begin() + half, fs.end());
    ModPoly gp{1}, hp{1};
    for (const auto& x : left) gp = mp_mul(gp, x, p);
    for (const auto& x : right) hp = mp_mul(hp, x, p);
    ModPoly s, t;
    mp_bezout(gp, hp, p, s, t);
    HenselPair pair{lp_from_mod(gp), lp_from_mod(hp), lp_from_mod(s), lp_from_mod(t)};
    BigInt m(p);
    while (m < M) {
        pair = hensel_step(fM, pair, m);
        m = m * m;
    }
    auto lg = lift_tree(lp_reduce(pair.g, M), std::move(left), p, M);
    auto lh = lift_tree(lp_reduce(pair.h, M), std::move(right), p, M);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

// factor a primitive squarefree polynomial with positive leading coefficient
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    long long n = f.degree();
    if (n <= 0) return {};
    if (n == 1) return {f};
    if (n > 64) throw std::domain_error("factor_int_poly: degree cap 64 exceeded");

    long long best_p = 0;
    std::vector<ModPoly> best_factors;
    int tried = 0;
    for (long long p : nt::primes_up_to(1000)) {
        if ((f.lead() % BigInt(p)).is_zero()) continue;
        ModPoly fp(f.coefs().size());
        for (size_t i = 0; i < fp.size(); ++i)
            fp[i] = f.coef(i).mod_euclid(BigInt(p)).to_int64();
        mp_trim(fp);
        if (fp.size() != f.coefs().size()) continue;
        if (mp_gcd(fp, mp_derivative(fp, p), p).size() != 1) continue;
        long long inv = nt::inv_mod(fp.back(), p);
        for (auto& c : fp) c = static_cast<long long>(c * static_cast<u128>(inv) % p);
        auto facs = berlekamp(fp, p);
        if (best_p == 0 || facs.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(facs);
        }
        if (best_factors.size() == 1) break;
        if (++tried >= 5) break;
    }
    if (best_p == 0) throw std::logic_error("factor: no usable prime found");
    if (best_factors.size() == 1) return {f};

    // Mignotte-style bound: coefficients of lc*g for any factor g of f
    BigInt norm1(0);
    for (const auto& c : f.coefs()) norm1 += c.abs();
    BigInt bound = (BigInt(1) << static_cast<unsigned>(n + 1)) * norm1 * f.lead().abs();
    BigInt target = BigInt(2) * bound + BigInt(1);
    BigInt M(best_p);
    while (M < target) M = M * M;

    // monic image of f mod M
    LiftPoly fM(f.coefs().size());
    for (size_t i = 0; i < fM.size(); ++i) fM[i] = f.coef(i).mod_euclid(M);
    BigInt lc_inv = inv_mod_big(f.lead(), M);
    for (auto& c : fM) c = (c * lc_inv).mod_euclid(M);
    lp_trim(fM);

    auto lifted = lift_tree(fM, best_factors, best_p, M);

    std::vector<IntPoly> result;
    IntPoly rem = f;
    std::vector<size_t> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    size_t take = 1;
    while (take <= alive.size() && !alive.empty()) {
        std::vector<size_t> comb(take);
        for (size_t i = 0; i < take; ++i) comb[i] = i;
        bool found = false;
        while (true) {
            LiftPoly prod{rem.lead().mod_euclid(M)};
            for (size_t i = 0; i < take; ++i)
                prod = lp_mulmod(prod, lifted[alive[comb[i]]], M);
            std::vector<BigInt> cand(prod.size());
            for (size_t i = 0; i < prod.size(); ++i) cand[i] = symmetric_mod(prod[i], M);
            IntPoly h(std::move(cand));
            if (h.degree() >= 1) {
                h = h.primitive_part();
                if (h.lead().is_negative()) h = -h;
                if (rem.divisible_by(h)) {
                    result.push_back(h);
                    rem = rem.divide_exact(h);
                    std::vector<bool> used(alive.size(), false);
                    for (size_t i = 0; i < take; ++i) used[comb[i]] = true;
                    std::vector<size_t> next_alive;
                    for (size_t i = 0; i < alive.size(); ++i)
                        if (!used[i]) next_alive.push_back(alive[i]);
                    alive = std::move(next_alive);
                    found = true;
                    break;
                }
            }
            // next combination of size `take`
            size_t i = take;
            bool advanced = false;
            while (i-- > 0) {
                if (comb[i] + (take - i) < alive.size()) {
                    ++comb[i];
                    for (size_t j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (!found) ++take;
    }
    if (rem.degree() >= 1) result.push_back(rem.lead().is_negative() ? -rem : rem);
    return result;
}

}  // namespace

IntFactorization factor_int_poly(const IntPoly& f) {
    IntFactorization out;
    if (f.is_zero()) {
        out.content = BigInt(0);
        return out;
    }
    BigInt cont = f.content();
    IntPoly g = f.primitive_part();
    if (g.lead().is_negative()) { g = -g; cont = -cont; }
    out.content = cont;
    size_t k = 0;
    while (k < g.coefs().size() && g.coef(k).is_zero()) ++k;
    if (k > 0) {
        std::vector<BigInt> c(g.coefs().begin() + k, g.coefs().end());
        g = IntPoly(std::move(c));
        out.factors.emplace_back(IntPoly(std::vector<BigInt>{BigInt(0), BigInt(1)}),
                                 static_cast<int>(k));
    }
    if (g.degree() < 1) return out;
    // squarefree part carries each distinct irreducible factor once
    RatPoly d = RatPoly::gcd(g.to_rat(), g.derivative().to_rat());
    IntPoly gcd_part = IntPoly::from_rat_primitive(d);
    IntPoly sqfree = g.divide_exact(gcd_part);
    for (const IntPoly& irr : factor_squarefree(sqfree)) {
        int e = 0;
        IntPoly t = g;
        while (t.divisible_by(irr)) {
            t = t.divide_exact(irr);
            ++e;
        }
        out.factors.emplace_back(irr, e);
    }
    return out;
}

bool is_irreducible(const IntPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_int_poly(f);
    // ignore the x^k factor bucket when f itself is x
    return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
           fac.factors[0].first.degree() == f.degree();
}

}  // namespace arithlab
