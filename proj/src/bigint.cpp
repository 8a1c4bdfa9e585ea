#include "arithlab/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace arithlab {

using u64 = uint64_t;
using u128 = unsigned __int128;

static constexpr size_t kKaratsubaThreshold = 32;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ULL - static_cast<unsigned long long>(v);
    limbs_.push_back(m);
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    limbs_.push_back(v);
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sg = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty string");
    BigInt acc;
    // consume 18 digits at a time
    const BigInt chunk_base(1000000000000000000LL);
    while (i < s.size()) {
        size_t take = std::min<size_t>(18, s.size() - i);
        long long part = 0;
        for (size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            part = part * 10 + (c - '0');
        }
        BigInt scale = take == 18 ? chunk_base : BigInt::pow(BigInt(10), take);
        acc = acc * scale + BigInt(part);
        i += take;
    }
    *this = acc;
    if (sg < 0 && sign_ != 0) sign_ = -sign_;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<u64> BigInt::add_abs(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& x = a.size() >= b.size() ? a : b;
    const std::vector<u64>& y = a.size() >= b.size() ? b : a;
    std::vector<u64> r(x.size() + 1, 0);
    unsigned char carry = 0;
    size_t i = 0;
    for (; i < y.size(); ++i) {
        u64 s = x[i] + y[i];
        u64 c1 = s < x[i];
        u64 s2 = s + carry;
        u64 c2 = s2 < s;
        r[i] = s2;
        carry = static_cast<unsigned char>(c1 | c2);
    }
    for (; i < x.size(); ++i) {
        u64 s = x[i] + carry;
        carry = static_cast<unsigned char>(s < carry);
        r[i] = s;
    }
    r[x.size()] = carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> BigInt::sub_abs(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size(), 0);
    unsigned char borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 d  = a[i] - bi;
        u64 b1 = a[i] < bi;
        u64 d2 = d - borrow;
        u64 b2 = d < borrow;
        r[i] = d2;
        borrow = static_cast<unsigned char>(b1 | b2);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> BigInt::mul_school(const u64* a, size_t na, const u64* b, size_t nb) {
    if (na == 0 || nb == 0) return {};
    std::vector<u64> r(na + nb, 0);
    for (size_t i = 0; i < na; ++i) {
        u64 carry = 0;
        u64 ai = a[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < nb; ++j) {
            u128 cur = static_cast<u128>(ai) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        size_t k = i + nb;
        while (carry) {
            u128 cur = static_cast<u128>(r[k]) + carry;
            r[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// helpers for karatsuba on raw vectors
static std::vector<u64> vec_add(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& x = a.size() >= b.size() ? a : b;
    const std::vector<u64>& y = a.size() >= b.size() ? b : a;
    std::vector<u64> r(x.size() + 1, 0);
    unsigned char carry = 0;
    size_t i = 0;
    for (; i < y.size(); ++i) {
        u64 s = x[i] + y[i];
        u64 c1 = s < x[i];
        u64 s2 = s + carry;
        u64 c2 = s2 < s;
        r[i] = s2;
        carry = static_cast<unsigned char>(c1 | c2);
    }
    for (; i < x.size(); ++i) {
        u64 s = x[i] + carry;
        carry = static_cast<unsigned char>(s < carry);
        r[i] = s;
    }
    r[x.size()] = carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// r -= s at limb offset; assumes no final borrow
static void vec_sub_at(std::vector<u64>& r, const std::vector<u64>& s, size_t off) {
    unsigned char borrow = 0;
    size_t i = 0;
    for (; i < s.size(); ++i) {
        u64 d  = r[off + i] - s[i];
        u64 b1 = r[off + i] < s[i];
        u64 d2 = d - borrow;
        u64 b2 = d < borrow;
        r[off + i] = d2;
        borrow = static_cast<unsigned char>(b1 | b2);
    }
    while (borrow) {
        u64 d = r[off + i] - borrow;
        borrow = static_cast<unsigned char>(r[off + i] < borrow);
        r[off + i] = d;
        ++i;
    }
}

static void vec_add_at(std::vector<u64>& r, const std::vector<u64>& s, size_t off) {
    unsigned char carry = 0;
    size_t i = 0;
    for (; i < s.size(); ++i) {
        u64 v  = r[off + i] + s[i];
        u64 c1 = v < s[i];
        u64 v2 = v + carry;
        u64 c2 = v2 < v;
        r[off + i] = v2;
        carry = static_cast<unsigned char>(c1 | c2);
    }
    while (carry && off + i < r.size()) {
        u64 v = r[off + i] + carry;
        carry = static_cast<unsigned char>(v < carry);
        r[off + i] = v;
        ++i;
    }
}

static std::vector<u64> karatsuba(const u64* a, size_t na, const u64* b, size_t nb);

static std::vector<u64> kara_dispatch(const u64* a, size_t na, const u64* b, size_t nb) {
    while (na && a[na - 1] == 0) --na;
    while (nb && b[nb - 1] == 0) --nb;
    if (na == 0 || nb == 0) return {};
    if (std::min(na, nb) < kKaratsubaThreshold) return BigInt::mul_school(a, na, b, nb);
    return karatsuba(a, na, b, nb);
}

static std::vector<u64> karatsuba(const u64* a, size_t na, const u64* b, size_t nb) {
    size_t h = (std::max(na, nb) + 1) / 2;
    size_t a_lo = std::min(na, h), b_lo = std::min(nb, h);
    std::vector<u64> alo(a, a + a_lo), ahi(a + a_lo, a + na);
    std::vector<u64> blo(b, b + b_lo), bhi(b + b_lo, b + nb);
    std::vector<u64> z0 = kara_dispatch(alo.data(), alo.size(), blo.data(), blo.size());
    std::vector<u64> z2 = kara_dispatch(ahi.data(), ahi.size(), bhi.data(), bhi.size());
    std::vector<u64> asum = vec_add(alo, ahi);
    std::vector<u64> bsum = vec_add(blo, bhi);
    std::vector<u64> z1 = kara_dispatch(asum.data(), asum.size(), bsum.data(), bsum.size());
    // z1 -= z0 + z2
    vec_sub_at(z1, z0, 0);
    vec_sub_at(z1, z2, 0);
    std::vector<u64> r(na + nb + 1, 0);
    vec_add_at(r, z0, 0);
    vec_add_at(r, z1, h);
    vec_add_at(r, z2, 2 * h);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> BigInt::mul_abs(const std::vector<u64>& a, const std::vector<u64>& b) {
    return kara_dispatch(a.data(), a.size(), b.data(), b.size());
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.limbs_ = BigInt::mul_abs(a.limbs_, b.limbs_);
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { *this = *this * o; return *this; }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) { *this = o; return *this; }
    if (sign_ == o.sign_) {
        limbs_ = add_abs(limbs_, o.limbs_);
    } else {
        int c = cmp_abs(*this, o);
        if (c == 0) { limbs_.clear(); sign_ = 0; return *this; }
        if (c > 0) {
            limbs_ = sub_abs(limbs_, o.limbs_);
        } else {
            limbs_ = sub_abs(o.limbs_, limbs_);
            sign_ = o.sign_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    BigInt t = o;
    t.sign_ = -t.sign_;
    return *this += t;
}

// Knuth algorithm D over 64-bit limbs.
void BigInt::divmod_abs(const std::vector<u64>& a, const std::vector<u64>& b,
                        std::vector<u64>& q, std::vector<u64>& r) {
    q.clear(); r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    size_t n = b.size(), m = a.size();
    if (m < n || (m == n && std::lexicographical_compare(
            a.rbegin(), a.rend(), b.rbegin(), b.rend()))) {
        r = a;
        return;
    }
    if (n == 1) {
        u64 d = b[0];
        q.assign(m, 0);
        u128 rem = 0;
        for (size_t i = m; i-- > 0;) {
            u128 cur = (rem << 64) | a[i];
            q[i] = static_cast<u64>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<u64>(rem));
        return;
    }
    int shift = __builtin_clzll(b.back());
    std::vector<u64> bn(n), an(m + 1, 0);
    for (size_t i = n; i-- > 0;) {
        bn[i] = (b[i] << shift);
        if (shift && i > 0) bn[i] |= b[i - 1] >> (64 - shift);
    }
    for (size_t i = m; i-- > 0;) {
        an[i] = (a[i] << shift);
        if (shift && i > 0) an[i] |= a[i - 1] >> (64 - shift);
    }
    if (shift) an[m] = a[m - 1] >> (64 - shift);
    q.assign(m - n + 1, 0);
    const u64 btop = bn[n - 1], bsec = bn[n - 2];
    for (size_t j = m - n + 1; j-- > 0;) {
        u128 cur = (static_cast<u128>(an[j + n]) << 64) | an[j + n - 1];
        u64 qhat, rhat;
        if (an[j + n] == btop) {
            qhat = ~0ULL;
        } else {
            qhat = static_cast<u64>(cur / btop);
        }
        rhat = static_cast<u64>(cur - static_cast<u128>(qhat) * btop);
        while (static_cast<u128>(qhat) * bsec >
               ((static_cast<u128>(rhat) << 64) | an[j + n - 2])) {
            --qhat;
            u128 nr = static_cast<u128>(rhat) + btop;
            if (nr >> 64) break;
            rhat = static_cast<u64>(nr);
        }
        // an[j .. j+n] -= qhat * bn
        u128 borrow = 0, carry = 0;
        for (size_t i = 0; i < n; ++i) {
            u128 p = static_cast<u128>(qhat) * bn[i] + carry;
            carry = p >> 64;
            u64 pl = static_cast<u64>(p);
            u64 d = an[j + i] - pl;
            u64 brw = an[j + i] < pl;
            u64 d2 = d - static_cast<u64>(borrow);
            u64 brw2 = d < static_cast<u64>(borrow);
            an[j + i] = d2;
            borrow = brw | brw2;
        }
        u128 top_sub = carry + borrow;
        if (static_cast<u128>(an[j + n]) < top_sub) {
            // qhat too big by one: add back
            an[j + n] = static_cast<u64>(an[j + n] - top_sub);
            --qhat;
            unsigned char c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                u64 s = an[j + i] + bn[i];
                u64 c1 = s < bn[i];
                u64 s2 = s + c2;
                u64 cc = s2 < s;
                an[j + i] = s2;
                c2 = static_cast<unsigned char>(c1 | cc);
            }
            an[j + n] += c2;
        } else {
            an[j + n] = static_cast<u64>(an[j + n] - top_sub);
        }
        q[j] = qhat;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(an.begin(), an.begin() + n);
    if (shift) {
        for (size_t i = 0; i < n; ++i) {
            r[i] >>= shift;
            if (i + 1 < n) r[i] |= r[i + 1] << (64 - shift);
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<u64> qv, rv;
    divmod_abs(a.limbs_, b.limbs_, qv, rv);
    q.limbs_ = std::move(qv);
    r.limbs_ = std::move(rv);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    q.trim();
    r.trim();
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(r);
    return *this;
}

BigInt BigInt::mod_euclid(const BigInt& b) const {
    BigInt r = *this % b;
    if (r.sign_ < 0) r += b.abs();
    return r;
}

BigInt& BigInt::operator<<=(unsigned bits) {
    if (sign_ == 0 || bits == 0) return *this;
    size_t limb_shift = bits / 64, bit_shift = bits % 64;
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    if (bit_shift) {
        u64 carry = 0;
        for (size_t i = limb_shift; i < limbs_.size(); ++i) {
            u64 nc = limbs_[i] >> (64 - bit_shift);
            limbs_[i] = (limbs_[i] << bit_shift) | carry;
            carry = nc;
        }
        if (carry) limbs_.push_back(carry);
    }
    return *this;
}

BigInt& BigInt::operator>>=(unsigned bits) {
    if (sign_ == 0 || bits == 0) return *this;
    size_t limb_shift = bits / 64, bit_shift = bits % 64;
    if (limb_shift >= limbs_.size()) { limbs_.clear(); sign_ = 0; return *this; }
    limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
    if (bit_shift) {
        for (size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= bit_shift;
            if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << (64 - bit_shift);
        }
    }
    trim();
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_abs(*this, o);
    if (sign_ >= 0) return c <=> 0;
    return 0 <=> c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // collapse large size gaps with a Euclidean step, then binary gcd
    if (a.limbs_.size() + 1 < b.limbs_.size()) std::swap(a, b);
    while (b.limbs_.size() + 1 < a.limbs_.size()) {
        a %= b;
        if (a.is_zero()) return b;
        std::swap(a, b);
    }
    auto strip2 = [](BigInt& x) {
        unsigned tz = 0;
        size_t limb = 0;
        while (limb < x.limbs_.size() && x.limbs_[limb] == 0) { ++limb; tz += 64; }
        if (limb < x.limbs_.size()) tz += static_cast<unsigned>(__builtin_ctzll(x.limbs_[limb]));
        if (tz) x >>= tz;
        return tz;
    };
    unsigned sa = strip2(a), sb = strip2(b);
    unsigned common = std::min(sa, sb);
    while (true) {
        if (cmp_abs(a, b) < 0) std::swap(a, b);
        if (b.limbs_.size() + 1 < a.limbs_.size()) {
            a %= b;
            if (a.is_zero()) break;
            strip2(a);
            continue;
        }
        a -= b;
        if (a.is_zero()) break;
        strip2(a);
    }
    return b << common;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    return (a.abs() / gcd(a, b)) * b.abs();
}

BigInt BigInt::pow(const BigInt& base, unsigned long long e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - __builtin_clzll(limbs_.back()));
}

bool BigInt::bit(size_t i) const {
    size_t l = i / 64;
    if (l >= limbs_.size()) return false;
    return (limbs_[l] >> (i % 64)) & 1u;
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw std::domain_error("isqrt of negative");
    if (n.is_zero()) return BigInt(0);
    size_t bl = n.bit_length();
    BigInt x = BigInt(1) << static_cast<unsigned>(bl / 2 + 1);
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    return x;
}

bool BigInt::is_square(const BigInt& n, BigInt* root) {
    if (n.sign_ < 0) return false;
    BigInt r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

double BigInt::to_double() const {
    if (limbs_.empty()) return 0.0;
    double r = 0.0;
    size_t start = limbs_.size() > 2 ? limbs_.size() - 2 : 0;
    for (size_t i = limbs_.size(); i-- > start;) r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    r = r * std::pow(2.0, 64.0 * static_cast<double>(start));
    return sign_ < 0 ? -r : r;
}

double BigInt::log_abs() const {
    if (limbs_.empty()) throw std::domain_error("log of zero");
    size_t n = limbs_.size();
    double top = static_cast<double>(limbs_[n - 1]);
    if (n >= 2) top += static_cast<double>(limbs_[n - 2]) / 18446744073709551616.0;
    return std::log(top) + 64.0 * std::log(2.0) * static_cast<double>(n - 1);
}

long long BigInt::to_int64() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() > 1) throw std::overflow_error("BigInt: does not fit in int64");
    u64 m = limbs_[0];
    if (sign_ > 0) {
        if (m > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt: does not fit in int64");
        return static_cast<long long>(m);
    }
    if (m > 0x8000000000000000ULL) throw std::overflow_error("BigInt: does not fit in int64");
    return -static_cast<long long>(m - 1) - 1;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 1) return false;
    if (limbs_.empty()) return true;
    if (sign_ > 0) return limbs_[0] <= 0x7fffffffffffffffULL;
    return limbs_[0] <= 0x8000000000000000ULL;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<u64> tmp = limbs_;
    std::string out;
    const u64 base = 10000000000000000000ULL;  // 10^19
    while (!tmp.empty()) {
        u128 rem = 0;
        for (size_t i = tmp.size(); i-- > 0;) {
            u128 cur = (rem << 64) | tmp[i];
            tmp[i] = static_cast<u64>(cur / base);
            rem = cur % base;
        }
        while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        u64 chunk = static_cast<u64>(rem);
        for (int k = 0; k < 19; ++k) {
            out.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

size_t BigInt::Hash::operator()(const BigInt& x) const {
    size_t h = static_cast<size_t>(x.sign_ + 1) * 1099511628211ULL;
    for (u64 l : x.limbs_) h = (h ^ l) * 1099511628211ULL;
    return h;
}

// ---------------------------------------------------------------------------

BigRat::BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
    normalize();
}

BigRat::BigRat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        num_ = BigInt(s);
        den_ = BigInt(1);
    } else {
        num_ = BigInt(s.substr(0, slash));
        den_ = BigInt(s.substr(slash + 1));
        if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
        normalize();
    }
}

void BigRat::normalize() {
    if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) { num_ /= g; den_ /= g; }
}

BigRat BigRat::operator-() const {
    BigRat r = *this;
    r.num_ = -r.num_;
    return r;
}

BigRat& BigRat::operator+=(const BigRat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

BigRat& BigRat::operator*=(const BigRat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.num_.is_zero()) throw std::domain_error("BigRat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering BigRat::operator<=>(const BigRat& o) const {
    return (num_ * o.den_) <=> (o.num_ * den_);
}

BigRat BigRat::abs() const {
    BigRat r = *this;
    r.num_ = r.num_.abs();
    return r;
}

BigRat BigRat::inverse() const {
    if (num_.is_zero()) throw std::domain_error("BigRat: inverse of zero");
    BigRat r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.is_negative()) { r.num_ = -r.num_; r.den_ = -r.den_; }
    return r;
}

BigInt BigRat::floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (r.is_negative()) q -= BigInt(1);
    return q;
}

BigInt BigRat::ceil() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (r.sign() > 0) q += BigInt(1);
    return q;
}

double BigRat::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale so both parts stay in double range
    double ln = num_.log_abs() - den_.log_abs();
    if (ln > 700.0) return num_.sign() > 0 ? HUGE_VAL : -HUGE_VAL;
    if (ln < -745.0) return 0.0;
    long long shift = static_cast<long long>(num_.bit_length()) -
                      static_cast<long long>(den_.bit_length());
    BigInt n = num_, d = den_;
    if (shift > 0) d <<= static_cast<unsigned>(shift);
    else if (shift < 0) n <<= static_cast<unsigned>(-shift);
    // now |n/d| in [1/2, 2); refine with 64 extra bits
    n <<= 64;
    BigInt q = n / d;
    return q.to_double() * std::pow(2.0, static_cast<double>(shift) - 64.0);
}

std::string BigRat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const BigRat& x) { return os << x.to_string(); }

size_t BigRat::Hash::operator()(const BigRat& x) const {
    BigInt::Hash h;
    return h(x.num()) * 31 + h(x.den());
}

}  // namespace arithlab
