#include "arithlab/combin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "arithlab/fq.hpp"
#include "arithlab/numtheory.hpp"

namespace arithlab {
namespace combin {

namespace {
std::vector<long long> dedupe(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
long long md(long long v, long long m) { return ((v % m) + m) % m; }
}  // namespace

std::vector<long long> sumset(const std::vector<long long>& A, const std::vector<long long>& B,
                              long long mod) {
    std::vector<long long> r;
    r.reserve(A.size() * B.size());
    for (long long a : A)
        for (long long b : B) r.push_back(mod ? md(a + b, mod) : a + b);
    return dedupe(std::move(r));
}

std::vector<long long> restricted_sumset(const std::vector<long long>& A,
                                         const std::vector<long long>& B, long long mod) {
    std::vector<long long> r;
    for (long long a : A)
        for (long long b : B) {
            if (a == b) continue;
            r.push_back(mod ? md(a + b, mod) : a + b);
        }
    return dedupe(std::move(r));
}

std::vector<long long> difference_set(const std::vector<long long>& A,
                                      const std::vector<long long>& B, long long mod) {
    std::vector<long long> r;
    for (long long a : A)
        for (long long b : B) r.push_back(mod ? md(a - b, mod) : a - b);
    return dedupe(std::move(r));
}

std::vector<long long> product_set(const std::vector<long long>& A,
                                   const std::vector<long long>& B) {
    std::vector<long long> r;
    for (long long a : A)
        for (long long b : B) r.push_back(a * b);
    return dedupe(std::move(r));
}

std::vector<long long> iterated_sumset(const std::vector<long long>& B, int k, int m,
                                       long long mod) {
    std::vector<long long> cur{0};
    for (int i = 0; i < k; ++i) cur = sumset(cur, B, mod);
    for (int i = 0; i < m; ++i) cur = difference_set(cur, B, mod);
    return cur;
}

BigInt energy_additive(const std::vector<long long>& A, long long mod) {
    std::map<long long, long long> r;
    for (long long a : A)
        for (long long b : A) r[mod ? md(a + b, mod) : a + b]++;
    BigInt e(0);
    for (auto [s, c] : r) e += BigInt(c) * BigInt(c);
    return e;
}

BigInt energy_multiplicative(const std::vector<long long>& A) {
    std::map<long long, long long> r;
    for (long long a : A)
        for (long long b : A) r[a * b]++;
    BigInt e(0);
    for (auto [s, c] : r) e += BigInt(c) * BigInt(c);
    return e;
}

InequalityCheck check_cauchy_davenport(const std::vector<long long>& A,
                                       const std::vector<long long>& B, long long p) {
    if (!nt::is_prime(p)) throw std::domain_error("cauchy_davenport: p must be prime");
    long long lhs = static_cast<long long>(sumset(A, B, p).size());
    long long rhs = std::min<long long>(p, static_cast<long long>(A.size() + B.size()) - 1);
    return {lhs >= rhs, "|A+B| = " + std::to_string(lhs) + " >= " + std::to_string(rhs)};
}

InequalityCheck check_restricted_sumset(const std::vector<long long>& A,
                                        const std::vector<long long>& B, long long p) {
    if (!nt::is_prime(p)) throw std::domain_error("restricted_sumset: p must be prime");
    long long lhs = static_cast<long long>(restricted_sumset(A, B, p).size());
    long long bound = static_cast<long long>(A.size() + B.size()) - 3;
    if (A.size() != B.size()) bound = static_cast<long long>(A.size() + B.size()) - 2;
    long long rhs = std::min<long long>(p, bound);
    return {lhs >= rhs, "|A^+B| = " + std::to_string(lhs) + " >= " + std::to_string(rhs)};
}

InequalityCheck check_pluennecke(const std::vector<long long>& A,
                                 const std::vector<long long>& B, int k, int m, long long mod) {
    long long apb = static_cast<long long>(sumset(A, B, mod).size());
    long long kbmb = static_cast<long long>(iterated_sumset(B, k, m, mod).size());
    // |kB - mB| <= K^{k+m} |A| with K = |A+B|/|A|:
    // equivalently |kB-mB| |A|^{k+m-1} <= |A+B|^{k+m}
    BigInt lhs = BigInt(kbmb) * BigInt::pow(BigInt(static_cast<long long>(A.size())),
                                            static_cast<unsigned>(k + m - 1));
    BigInt rhs = BigInt::pow(BigInt(apb), static_cast<unsigned>(k + m));
    return {lhs <= rhs, "|kB-mB||A|^{k+m-1} = " + lhs.to_string() + " <= |A+B|^{k+m} = " +
                            rhs.to_string()};
}

InequalityCheck check_ruzsa_triangle(const std::function<long long(long long, long long)>& mul,
                                     const std::function<long long(long long)>& inv,
                                     const std::vector<long long>& A,
                                     const std::vector<long long>& B,
                                     const std::vector<long long>& C) {
    auto set_quot = [&](const std::vector<long long>& X, const std::vector<long long>& Y) {
        std::set<long long> s;
        for (long long x : X)
            for (long long y : Y) s.insert(mul(x, inv(y)));
        return static_cast<long long>(s.size());
    };
    BigInt lhs = BigInt(set_quot(A, C)) * BigInt(static_cast<long long>(B.size()));
    BigInt rhs = BigInt(set_quot(A, B)) * BigInt(set_quot(B, C));
    return {lhs <= rhs, "|AC^-1||B| = " + lhs.to_string() + " <= |AB^-1||BC^-1| = " + rhs.to_string()};
}

InequalityCheck check_tripling_power(const std::function<long long(long long, long long)>& mul,
                                     const std::vector<long long>& A, int k) {
    if (k < 3) throw std::domain_error("check_tripling_power: k >= 3");
    std::set<long long> cur(A.begin(), A.end());
    std::vector<long long> sizes{static_cast<long long>(cur.size())};
    std::vector<long long> curv(cur.begin(), cur.end());
    for (int i = 2; i <= k; ++i) {
        std::set<long long> next;
        for (long long x : curv)
            for (long long a : A) next.insert(mul(x, a));
        curv.assign(next.begin(), next.end());
        sizes.push_back(static_cast<long long>(next.size()));
    }
    // |A^k| |A|^{k-3} <= |A^3|^{k-2}
    BigInt lhs = BigInt(sizes[static_cast<size_t>(k - 1)]) *
                 BigInt::pow(BigInt(sizes[0]), static_cast<unsigned>(k - 3));
    BigInt rhs = BigInt::pow(BigInt(sizes[2]), static_cast<unsigned>(k - 2));
    return {lhs <= rhs, "|A^k||A|^{k-3} = " + lhs.to_string() + " <= |A^3|^{k-2} = " + rhs.to_string()};
}

InequalityCheck check_multiplicative_energy(const std::vector<long long>& A) {
    BigInt e = energy_multiplicative(A);
    BigInt aa = BigInt(static_cast<long long>(product_set(A, A).size()));
    BigInt a4 = BigInt::pow(BigInt(static_cast<long long>(A.size())), 4);
    return {e * aa >= a4,
            "E(A)|AA| = " + (e * aa).to_string() + " >= |A|^4 = " + a4.to_string()};
}

CoveringResult ruzsa_covering(const std::vector<long long>& A, const std::vector<long long>& B,
                              long long mod) {
    CoveringResult res;
    long long apb = static_cast<long long>(sumset(A, B, mod).size());
    res.K = BigRat(BigInt(apb), BigInt(static_cast<long long>(A.size())));
    // greedy maximal X with disjoint translates x + A
    std::set<long long> used;
    for (long long b : B) {
        bool disjoint = true;
        for (long long a : A) {
            if (used.count(mod ? md(a + b, mod) : a + b)) { disjoint = false; break; }
        }
        if (disjoint) {
            res.X.push_back(b);
            for (long long a : A) used.insert(mod ? md(a + b, mod) : a + b);
        }
    }
    // check B inside A - A + X
    std::set<long long> cover;
    for (long long a1 : A)
        for (long long a2 : A)
            for (long long x : res.X) {
                long long v = a1 - a2 + x;
                cover.insert(mod ? md(v, mod) : v);
            }
    res.covered = true;
    for (long long b : B)
        if (!cover.count(mod ? md(b, mod) : b)) { res.covered = false; break; }
    // |X| <= K must hold by the proof
    if (BigRat(BigInt(static_cast<long long>(res.X.size()))) > res.K)
        throw std::logic_error("ruzsa_covering: |X| exceeds K");
    return res;
}

// ------------------------------------------------------------- incidences

IncidenceReport incidences_rational(const std::vector<RatPoint>& P,
                                    const std::vector<RatLine>& L) {
    long long I = 0;
    for (const auto& l : L)
        for (const auto& pt : P) {
            if (l.vertical) {
                if (pt.x == l.c) ++I;
            } else if (pt.y == l.a * pt.x + l.b) {
                ++I;
            }
        }
    IncidenceReport rep;
    rep.incidences = I;
    double n = static_cast<double>(P.size()), m = static_cast<double>(L.size());
    rep.bound = 4.0 * std::pow(m, 2.0 / 3.0) * std::pow(n, 2.0 / 3.0) + 4.0 * n + m;
    // exact check: (I - 4n - m)^3 <= 64 m^2 n^2 when the left side is positive
    BigInt excess = BigInt(I) - BigInt(4 * static_cast<long long>(P.size())) -
                    BigInt(static_cast<long long>(L.size()));
    if (excess.sign() <= 0) {
        rep.bound_ok = true;
    } else {
        BigInt lhs = excess * excess * excess;
        BigInt rhs = BigInt(64) * BigInt(static_cast<long long>(L.size())) *
                     BigInt(static_cast<long long>(L.size())) *
                     BigInt(static_cast<long long>(P.size())) *
                     BigInt(static_cast<long long>(P.size()));
        rep.bound_ok = lhs <= rhs;
    }
    return rep;
}

IncidenceReport incidences_fp(long long p, const std::vector<std::pair<long long, long long>>& P,
                              const std::vector<std::array<long long, 3>>& lines) {
    // lines as (a, b, c): a x + b y = c over F_p, (a, b) != (0, 0)
    long long I = 0;
    for (const auto& ln : lines)
        for (const auto& pt : P)
            if (md(ln[0] * pt.first + ln[1] * pt.second - ln[2], p) == 0) ++I;
    IncidenceReport rep;
    rep.incidences = I;
    double np = static_cast<double>(P.size()), nl = static_cast<double>(lines.size());
    rep.bound = np * nl / static_cast<double>(p) + std::sqrt(static_cast<double>(p) * np * nl);
    // exact: if I > PL/p then (I - PL/p)^2 <= p P L, in rationals
    BigRat main_term = BigRat(BigInt(static_cast<long long>(P.size())) *
                                  BigInt(static_cast<long long>(lines.size())),
                              BigInt(p));
    BigRat excess = BigRat(BigInt(I)) - main_term;
    if (excess.sign() <= 0) {
        rep.bound_ok = true;
    } else {
        BigRat rhs = BigRat(BigInt(p) * BigInt(static_cast<long long>(P.size())) *
                            BigInt(static_cast<long long>(lines.size())));
        rep.bound_ok = excess * excess <= rhs;
    }
    return rep;
}

// ------------------------------------------------------------------ Kakeya

KakeyaSet kakeya_construct(long long p, int n) {
    if (!nt::is_prime(p) || p == 2) throw std::domain_error("kakeya_construct: p must be an odd prime");
    if (n != 2 && n != 3) throw std::domain_error("kakeya_construct: n must be 2 or 3");
    std::set<long long> pts;
    auto enc2 = [p](long long x, long long t) { return x * p + t; };
    if (n == 2) {
        // {(x, t) : x + t^2 a square} covers the directions (a, 1); the
        // horizontal line covers the remaining direction (1, 0)
        std::vector<char> sq(static_cast<size_t>(p), 0);
        for (long long u = 0; u < p; ++u) sq[static_cast<size_t>(u * u % p)] = 1;
        for (long long x = 0; x < p; ++x)
            for (long long t = 0; t < p; ++t)
                if (sq[static_cast<size_t>(md(x + t * t, p))]) pts.insert(enc2(x, t));
        for (long long x = 0; x < p; ++x) pts.insert(enc2(x, 0));
    } else {
        auto enc3 = [p](long long x, long long y, long long t) { return (x * p + y) * p + t; };
        long long inv4 = nt::inv_mod(4, p);
        // {(x1^2/4 + x1 t, x2^2/4 + x2 t, t)}: a line in direction (x1, x2, 1)
        for (long long x1 = 0; x1 < p; ++x1)
            for (long long x2 = 0; x2 < p; ++x2)
                for (long long t = 0; t < p; ++t)
                    pts.insert(enc3(md(x1 * x1 % p * inv4 + x1 * t, p),
                                    md(x2 * x2 % p * inv4 + x2 * t, p), t));
        // directions (a, b, 0): embed a 2-dimensional Kakeya set in the t = 0 plane
        std::vector<char> sq(static_cast<size_t>(p), 0);
        for (long long u = 0; u < p; ++u) sq[static_cast<size_t>(u * u % p)] = 1;
        for (long long x = 0; x < p; ++x)
            for (long long s = 0; s < p; ++s)
                if (sq[static_cast<size_t>(md(x + s * s, p))]) pts.insert(enc3(x, s, 0));
        for (long long x = 0; x < p; ++x) pts.insert(enc3(x, 0, 0));
    }
    KakeyaSet S;
    S.p = p;
    S.n = n;
    S.points.assign(pts.begin(), pts.end());
    return S;
}

bool kakeya_verify(const KakeyaSet& S) {
    long long p = S.p;
    int n = S.n;
    std::unordered_set<long long> pts(S.points.begin(), S.points.end());
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    auto decode = [&](long long e) {
        std::vector<long long> c(static_cast<size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            c[static_cast<size_t>(i)] = e % p;
            e /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<long long>& c) {
        long long e = 0;
        for (int i = 0; i < n; ++i) e = e * p + c[static_cast<size_t>(i)];
        return e;
    };
    // canonical directions: first nonzero coordinate 1
    std::vector<std::vector<long long>> dirs;
    for (long long e = 1; e < total; ++e) {
        auto d = decode(e);
        int lead = -1;
        for (int i = 0; i < n; ++i)
            if (d[static_cast<size_t>(i)] != 0) { lead = i; break; }
        if (d[static_cast<size_t>(lead)] != 1) continue;
        dirs.push_back(d);
    }
    for (const auto& d : dirs) {
        // classify points by base point = x - x_lead * d (lead coordinate set to 0)
        std::unordered_set<long long> full;
        std::map<long long, int> counts;
        for (long long e : S.points) {
            auto c = decode(e);
            int lead = 0;
            while (d[static_cast<size_t>(lead)] == 0) ++lead;
            long long t = c[static_cast<size_t>(lead)];
            std::vector<long long> base(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                base[static_cast<size_t>(i)] = md(c[static_cast<size_t>(i)] - t * d[static_cast<size_t>(i)], p);
            counts[encode(base)]++;
        }
        bool has_line = false;
        for (auto [b, cnt] : counts)
            if (cnt == p) { has_line = true; break; }
        if (!has_line) return false;
    }
    return true;
}

// ----------------------------------------------------------------- Sidon

SidonCertificate sidon_verify(const std::vector<long long>& A, int h, long long mod) {
    SidonCertificate cert;
    cert.ok = true;
    cert.h = h;
    cert.modulus = mod;
    if (h < 2) throw std::domain_error("sidon_verify: h must be >= 2");
    if (h == 2) {
        // all nonzero differences distinct
        std::map<long long, std::pair<long long, long long>> seen;
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < A.size(); ++j) {
                if (i == j) continue;
                long long d = mod ? md(A[i] - A[j], mod) : A[i] - A[j];
                auto it = seen.find(d);
                if (it != seen.end()) {
                    cert.ok = false;
                    cert.violating = {A[i], A[j], it->second.first, it->second.second};
                    return cert;
                }
                seen[d] = {A[i], A[j]};
            }
        return cert;
    }
    // h >= 3: h-fold sums of nondecreasing tuples must be distinct
    std::map<long long, std::vector<long long>> sums;
    std::vector<long long> tup(static_cast<size_t>(h), 0);
    std::function<bool(int, size_t, long long)> rec = [&](int k, size_t start, long long acc) {
        if (k == h) {
            long long s = mod ? md(acc, mod) : acc;
            auto it = sums.find(s);
            if (it != sums.end()) {
                cert.ok = false;
                cert.violating = it->second;
                for (int i = 0; i < h; ++i) cert.violating.push_back(tup[static_cast<size_t>(i)]);
                return false;
            }
            sums[s] = std::vector<long long>(tup.begin(), tup.end());
            return true;
        }
        for (size_t i = start; i < A.size(); ++i) {
            tup[static_cast<size_t>(k)] = A[i];
            if (!rec(k + 1, i, acc + A[i])) return false;
        }
        return true;
    };
    rec(0, 0, 0);
    return cert;
}

std::vector<std::vector<long long>> difference_triangle(const std::vector<long long>& A) {
    std::vector<long long> s = A;
    std::sort(s.begin(), s.end());
    std::vector<std::vector<long long>> rows;
    for (size_t gap = 1; gap < s.size(); ++gap) {
        std::vector<long long> row;
        for (size_t i = 0; i + gap < s.size(); ++i) row.push_back(s[i + gap] - s[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<long long> sidon_erdos_turan(long long p) {
    if (!nt::is_prime(p)) throw std::domain_error("sidon_erdos_turan: p must be prime");
    std::vector<long long> A;
    for (long long x = 0; x < p; ++x) A.push_back(x * x % p + 2 * x * p);
    std::sort(A.begin(), A.end());
    return A;
}

std::vector<long long> sidon_ruzsa(long long p) {
    if (!nt::is_prime(p)) throw std::domain_error("sidon_ruzsa: p must be prime");
    long long g = nt::primitive_root(p);
    long long modv = p * (p - 1);
    std::vector<long long> A;
    long long gx = 1;
    for (long long x = 0; x <= p - 2; ++x) {
        // p x - (p-1) (g^x mod p), reduced mod p(p-1)
        A.push_back(md(p * x - (p - 1) * gx, modv));
        gx = gx * g % p;
    }
    return dedupe(std::move(A));
}

std::vector<long long> sidon_bose_chowla(long long q, int h) {
    if (h < 2 || h > 3) throw std::domain_error("sidon_bose_chowla: h must be 2 or 3");
    // q = p^e prime power
    auto fac = nt::factor(q);
    if (fac.size() != 1) throw std::domain_error("sidon_bose_chowla: q must be a prime power");
    long long p = fac[0].first;
    int e = fac[0].second;
    auto F = FiniteField::make(p, e * h);
    FqElement theta = F->multiplicative_generator();
    // A = { log_theta(theta + a) : a in F_q }; F_q embeds as the subfield
    // fixed by x -> x^(q): realize it as the image of the norm-compatible
    // subfield enumeration: elements with x^q = x
    std::vector<FqElement> subfield;
    for (long long idx = 0; idx < F->q(); ++idx) {
        FqElement x = F->element(idx);
        if (x.pow(q) == x) subfield.push_back(x);
    }
    if (static_cast<long long>(subfield.size()) != q)
        throw std::logic_error("sidon_bose_chowla: subfield size mismatch");
    std::vector<long long> A;
    for (const auto& a : subfield) A.push_back(discrete_log(theta, theta + a));
    return dedupe(std::move(A));
}

SidonBounds sidon_upper_bounds(long long n) {
    SidonBounds b;
    double nn = static_cast<double>(n);
    b.trivial = std::sqrt(2.0 * nn) + 0.5;
    b.lindstrom = std::sqrt(nn) + std::pow(nn, 0.25) + 1.0;
    b.refined = std::sqrt(nn) + std::pow(nn, 0.25) + 0.5;
    return b;
}

long long f2_max_exhaustive(long long n) {
    if (n < 1 || n > 40) throw std::domain_error("f2_max_exhaustive: n must be 1..40");
    // branch and bound over elements 1..n with a difference bitmask
    long long best = 0;
    std::vector<long long> cur;
    std::function<void(long long, uint64_t)> rec = [&](long long next, uint64_t diffs) {
        best = std::max<long long>(best, static_cast<long long>(cur.size()));
        for (long long x = next; x <= n; ++x) {
            // prune: even taking all remaining can't beat best
            if (static_cast<long long>(cur.size()) + (n - x + 1) <= best) break;
            uint64_t add = 0;
            bool ok = true;
            for (long long a : cur) {
                uint64_t bit = 1ULL << (x - a);
                if ((diffs | add) & bit) { ok = false; break; }
                add |= bit;
            }
            if (!ok) continue;
            cur.push_back(x);
            rec(x + 1, diffs | add);
            cur.pop_back();
        }
    };
    rec(1, 0);
    return best;
}

std::vector<long long> greedy_mian_chowla(int count) { return greedy_bh(2, count); }

std::vector<long long> greedy_bh(int h, int count) {
    std::vector<long long> A;
    long long x = 1;
    while (static_cast<long long>(A.size()) < count) {
        A.push_back(x);
        if (!sidon_verify(A, h).ok) A.pop_back();
        ++x;
        if (x > 100000000) throw std::runtime_error("greedy_bh: growth budget exceeded");
    }
    return A;
}

}  // namespace combin
}  // namespace arithlab
