#include "arithlab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "arithlab/numtheory.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arithlab {
namespace fourier {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> factors) : f_(std::move(factors)) {
    if (f_.empty()) throw std::domain_error("FiniteAbelianGroup: no factors");
    size_ = 1;
    lcm_ = 1;
    for (long long n : f_) {
        if (n < 1) throw std::domain_error("FiniteAbelianGroup: factors must be positive");
        size_ *= n;
        lcm_ = std::lcm(lcm_, n);
    }
    if (size_ > 20000000) throw std::domain_error("FiniteAbelianGroup: order budget exceeded");
}

FiniteAbelianGroup FiniteAbelianGroup::vector_space(long long p, int n) {
    return FiniteAbelianGroup(std::vector<long long>(static_cast<size_t>(n), p));
}

std::vector<long long> FiniteAbelianGroup::tuple(long long index) const {
    std::vector<long long> t(f_.size());
    for (size_t i = 0; i < f_.size(); ++i) {
        t[i] = index % f_[i];
        index /= f_[i];
    }
    return t;
}

long long FiniteAbelianGroup::index(const std::vector<long long>& t) const {
    long long idx = 0;
    for (size_t i = f_.size(); i-- > 0;) {
        long long v = ((t[i] % f_[i]) + f_[i]) % f_[i];
        idx = idx * f_[i] + v;
    }
    return idx;
}

long long FiniteAbelianGroup::add(long long a, long long b) const {
    long long idx = 0;
    for (size_t i = f_.size(); i-- > 0;) {
        long long fa = 1;
        for (size_t j = 0; j < i; ++j) fa *= f_[j];
        long long ai = (a / fa) % f_[i], bi = (b / fa) % f_[i];
        idx = idx * f_[i] + (ai + bi) % f_[i];
    }
    return idx;
}

long long FiniteAbelianGroup::sub(long long a, long long b) const { return add(a, neg(b)); }

long long FiniteAbelianGroup::neg(long long a) const {
    long long idx = 0;
    for (size_t i = f_.size(); i-- > 0;) {
        long long fa = 1;
        for (size_t j = 0; j < i; ++j) fa *= f_[j];
        long long ai = (a / fa) % f_[i];
        idx = idx * f_[i] + (f_[i] - ai) % f_[i];
    }
    return idx;
}

long long FiniteAbelianGroup::scale(long long c, long long a) const {
    long long idx = 0;
    for (size_t i = f_.size(); i-- > 0;) {
        long long fa = 1;
        for (size_t j = 0; j < i; ++j) fa *= f_[j];
        long long ai = (a / fa) % f_[i];
        long long ci = ((c % f_[i]) + f_[i]) % f_[i];
        idx = idx * f_[i] + ci * static_cast<unsigned __int128>(ai) % f_[i];
    }
    return idx;
}

bool FiniteAbelianGroup::scaling_bijective(long long c) const {
    for (long long n : f_)
        if (std::gcd(((c % n) + n) % n, n) != 1) return false;
    return true;
}

BigRat FiniteAbelianGroup::pairing(long long r, long long x) const {
    auto rt = tuple(r), xt = tuple(x);
    // sum r_j x_j / N_j mod 1, over the common denominator lcm
    long long acc = 0;
    for (size_t j = 0; j < f_.size(); ++j) {
        long long term = rt[j] * static_cast<unsigned __int128>(xt[j]) % f_[j];
        acc = (acc + term * (lcm_ / f_[j])) % lcm_;
    }
    return BigRat(BigInt(acc), BigInt(lcm_));
}

BigRat FiniteAbelianGroup::torus_norm(long long r, long long x) const {
    BigRat v = pairing(r, x);
    BigRat other = BigRat(1) - v;
    return v < other ? v : other;
}

// ------------------------------------------------------------------- DFT

namespace {

void fft_pow2(std::vector<cd>& a, bool inverse) {
    size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        cd wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cd w(1.0);
            for (size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

bool is_pow2(long long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::vector<cd> dft(const FiniteAbelianGroup& G, const std::vector<cd>& f,
                    bool serial_reference) {
    long long n = G.size();
    if (static_cast<long long>(f.size()) != n) throw std::invalid_argument("dft: size mismatch");
    if (!serial_reference && G.factors().size() == 1 && is_pow2(n)) {
        // cyclic 2-power fast path; normalization E_x
        std::vector<cd> a = f;
        fft_pow2(a, false);
        for (auto& v : a) v /= static_cast<double>(n);
        return a;
    }
    std::vector<cd> out(static_cast<size_t>(n));
    const double tau = 2.0 * M_PI;
    // precompute tuples once
    std::vector<std::vector<long long>> tup(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) tup[static_cast<size_t>(i)] = G.tuple(i);
    const auto& fac = G.factors();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (!serial_reference && n > 256)
#endif
    for (long long r = 0; r < n; ++r) {
        cd acc(0.0);
        for (long long x = 0; x < n; ++x) {
            double phase = 0.0;
            for (size_t j = 0; j < fac.size(); ++j)
                phase += static_cast<double>(tup[static_cast<size_t>(r)][j] *
                                             tup[static_cast<size_t>(x)][j] % fac[j]) /
                         static_cast<double>(fac[j]);
            acc += f[static_cast<size_t>(x)] * cd(std::cos(tau * phase), -std::sin(tau * phase));
        }
        out[static_cast<size_t>(r)] = acc / static_cast<double>(n);
    }
    return out;
}

std::vector<cd> inverse_dft(const FiniteAbelianGroup& G, const std::vector<cd>& fhat) {
    long long n = G.size();
    if (static_cast<long long>(fhat.size()) != n)
        throw std::invalid_argument("inverse_dft: size mismatch");
    std::vector<cd> out(static_cast<size_t>(n));
    const double tau = 2.0 * M_PI;
    std::vector<std::vector<long long>> tup(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) tup[static_cast<size_t>(i)] = G.tuple(i);
    const auto& fac = G.factors();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n > 256)
#endif
    for (long long x = 0; x < n; ++x) {
        cd acc(0.0);
        for (long long r = 0; r < n; ++r) {
            double phase = 0.0;
            for (size_t j = 0; j < fac.size(); ++j)
                phase += static_cast<double>(tup[static_cast<size_t>(r)][j] *
                                             tup[static_cast<size_t>(x)][j] % fac[j]) /
                         static_cast<double>(fac[j]);
            acc += fhat[static_cast<size_t>(r)] * cd(std::cos(tau * phase), std::sin(tau * phase));
        }
        out[static_cast<size_t>(x)] = acc;
    }
    return out;
}

std::vector<cd> convolution(const FiniteAbelianGroup& G, const std::vector<cd>& f,
                            const std::vector<cd>& g) {
    long long n = G.size();
    std::vector<cd> out(static_cast<size_t>(n), cd(0.0));
    for (long long x = 0; x < n; ++x) {
        cd acc(0.0);
        for (long long y = 0; y < n; ++y)
            acc += f[static_cast<size_t>(y)] * g[static_cast<size_t>(G.sub(x, y))];
        out[static_cast<size_t>(x)] = acc / static_cast<double>(n);
    }
    return out;
}

std::vector<cd> indicator(const FiniteAbelianGroup& G, const std::vector<long long>& A) {
    std::vector<cd> f(static_cast<size_t>(G.size()), cd(0.0));
    for (long long a : A) f.at(static_cast<size_t>(a)) = cd(1.0);
    return f;
}

std::vector<cd> balanced_indicator(const FiniteAbelianGroup& G, const std::vector<long long>& A) {
    double alpha = static_cast<double>(A.size()) / static_cast<double>(G.size());
    std::vector<cd> f(static_cast<size_t>(G.size()), cd(-alpha));
    for (long long a : A) f.at(static_cast<size_t>(a)) += cd(1.0);
    return f;
}

cd count_linear_solutions(const FiniteAbelianGroup& G, const std::vector<long long>& coeffs,
                          const std::vector<std::vector<cd>>& fs) {
    if (coeffs.size() != fs.size() || coeffs.size() < 2)
        throw std::invalid_argument("count_linear_solutions: shape");
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!G.scaling_bijective(coeffs[i]))
            throw std::domain_error("count_linear_solutions: coefficient " + std::to_string(i) +
                                    " (" + std::to_string(coeffs[i]) + ") is not bijective on G");
    std::vector<std::vector<cd>> hats;
    for (const auto& f : fs) hats.push_back(dft(G, f));
    cd acc(0.0);
    for (long long r = 0; r < G.size(); ++r) {
        cd term(1.0);
        for (size_t i = 0; i < coeffs.size(); ++i)
            term *= hats[i][static_cast<size_t>(G.scale(coeffs[i], r))];
        acc += term;
    }
    return acc;
}

cd count_linear_solutions_brute(const FiniteAbelianGroup& G,
                                const std::vector<long long>& coeffs,
                                const std::vector<std::vector<cd>>& fs) {
    size_t t = coeffs.size();
    long long n = G.size();
    double total_tuples = std::pow(static_cast<double>(n), static_cast<double>(t - 1));
    if (total_tuples > 2e8) throw std::runtime_error("brute force budget exceeded");
    // enumerate x_1..x_{t-1}, solve for x_t: c_t x_t = -(sum)
    // multiplication by c_t is bijective, so x_t = scale(inverse of c_t, -sum)
    // find the inverse scaling by brute force per factor
    std::vector<long long> inv_ct;  // as a CRT scaling: apply scale with inverse per factor
    // compute d with d * c_t = 1 mod lcm of factors -> per-component inverse
    // easiest: build a lookup of scale(c_t, .) and invert it
    std::vector<long long> scaled(static_cast<size_t>(n));
    for (long long x = 0; x < n; ++x) scaled[static_cast<size_t>(G.scale(coeffs[t - 1], x))] = x;
    cd acc(0.0);
    std::vector<long long> xs(t - 1, 0);
    std::function<void(size_t, long long, cd)> rec = [&](size_t k, long long partial, cd prod) {
        if (k == t - 1) {
            long long xt = scaled[static_cast<size_t>(G.neg(partial))];
            acc += prod * fs[t - 1][static_cast<size_t>(xt)];
            return;
        }
        for (long long x = 0; x < n; ++x)
            rec(k + 1, G.add(partial, G.scale(coeffs[k], x)),
                prod * fs[k][static_cast<size_t>(x)]);
    };
    rec(0, 0, cd(1.0));
    double denom = std::pow(static_cast<double>(n), static_cast<double>(t - 1));
    return acc / denom;
}

double uniformity_norm(const FiniteAbelianGroup& G, const std::vector<cd>& f) {
    auto hat = dft(G, f);
    double m = 0.0;
    for (const auto& v : hat) m = std::max(m, std::abs(v));
    return m;
}

double u2_norm(const FiniteAbelianGroup& G, const std::vector<cd>& f) {
    auto hat = dft(G, f);
    double s = 0.0;
    for (const auto& v : hat) {
        double a = std::abs(v);
        s += a * a * a * a;
    }
    return std::pow(s, 0.25);
}

double u2_norm_brute(const FiniteAbelianGroup& G, const std::vector<cd>& f) {
    long long n = G.size();
    cd acc(0.0);
    for (long long x = 0; x < n; ++x)
        for (long long h1 = 0; h1 < n; ++h1)
            for (long long h2 = 0; h2 < n; ++h2) {
                cd v = f[static_cast<size_t>(x)] *
                       std::conj(f[static_cast<size_t>(G.add(x, h1))]) *
                       std::conj(f[static_cast<size_t>(G.add(x, h2))]) *
                       f[static_cast<size_t>(G.add(G.add(x, h1), h2))];
                acc += v;
            }
    double avg = acc.real() / std::pow(static_cast<double>(n), 3.0);
    return std::pow(std::max(0.0, avg), 0.25);
}

BohrSet bohr_set(const FiniteAbelianGroup& G, const std::vector<long long>& S,
                 const BigRat& delta) {
    if (delta.sign() < 0) throw std::domain_error("bohr_set: radius must be >= 0");
    BohrSet B;
    B.freqs = S;
    B.radius = delta;
    for (long long x = 0; x < G.size(); ++x) {
        bool in = true;
        for (long long r : S)
            if (G.torus_norm(r, x) > delta) { in = false; break; }
        if (in) B.members.push_back(x);
    }
    // structural facts: 0 in B and B = -B
    if (B.members.empty() || B.members[0] != 0)
        throw std::logic_error("bohr_set: 0 must belong to every Bohr set");
    std::set<long long> mem(B.members.begin(), B.members.end());
    for (long long x : B.members)
        if (!mem.count(G.neg(x))) throw std::logic_error("bohr_set: set is not symmetric");
    // Prop size bounds for small radius
    if (!S.empty() && delta.to_double() <= 1.0 / (4.0 * M_PI)) {
        double beta = static_cast<double>(B.members.size()) / static_cast<double>(G.size());
        double lower = std::pow(delta.to_double(), static_cast<double>(S.size()));
        double upper = 4.0 / static_cast<double>(S.size());
        if (beta < lower * (1 - 1e-12) || beta > upper * (1 + 1e-12))
            throw std::logic_error("bohr_set: size bounds delta^|S| <= beta <= 4/|S| failed");
    }
    return B;
}

std::vector<long long> spectrum(const FiniteAbelianGroup& G, const std::vector<cd>& f,
                                double eps) {
    auto hat = dft(G, f);
    std::vector<long long> out;
    for (long long r = 0; r < G.size(); ++r)
        if (std::abs(hat[static_cast<size_t>(r)]) >= eps) out.push_back(r);
    // |Spec_eps| <= eps^{-2} ||f||_inf^2
    double sup = 0.0;
    for (const auto& v : f) sup = std::max(sup, std::abs(v));
    double bound = sup * sup / (eps * eps);
    if (static_cast<double>(out.size()) > bound * (1 + 1e-9))
        throw std::logic_error("spectrum: Parseval cardinality bound failed");
    return out;
}

BogolyubovCertificate bogolyubov_certificate(const FiniteAbelianGroup& G,
                                             const std::vector<long long>& A) {
    long long n = G.size();
    if (n > 10000) throw std::domain_error("bogolyubov: |G| budget 1e4 exceeded");
    if (A.empty()) throw std::domain_error("bogolyubov: A must be nonempty");
    double alpha = static_cast<double>(A.size()) / static_cast<double>(n);
    BogolyubovCertificate cert;
    cert.lambda = std::pow(alpha, 1.5) / std::sqrt(2.0);
    cert.spec_bound = 2.0 / (alpha * alpha);
    cert.spec = spectrum(G, indicator(G, A), cert.lambda);
    BohrSet B = bohr_set(G, cert.spec, BigRat(BigInt(1), BigInt(4)));
    cert.bohr_size = static_cast<long long>(B.members.size());
    // exact convolution counts: s(y) = #{(a1,a2): a1+a2 = y},
    // r4(x) = sum_u s(u) s(u - x) counts a1+a2-a3-a4 = x
    std::vector<long long> s(static_cast<size_t>(n), 0);
    for (long long a : A)
        for (long long b : A) s[static_cast<size_t>(G.add(a, b))]++;
    cert.containment = true;
    for (long long x : B.members) {
        unsigned long long r4 = 0;
        for (long long u = 0; u < n; ++u)
            r4 += static_cast<unsigned long long>(s[static_cast<size_t>(u)]) *
                  static_cast<unsigned long long>(s[static_cast<size_t>(G.sub(u, x))]);
        if (r4 == 0) { cert.containment = false; break; }
    }
    return cert;
}

VSIncrement density_increment_vs(const FiniteAbelianGroup& G,
                                 const std::vector<long long>& A, long long r, double c) {
    if (r == 0) throw std::domain_error("density_increment_vs: r must be nonzero");
    double alpha = static_cast<double>(A.size()) / static_cast<double>(G.size());
    auto hat = dft(G, indicator(G, A));
    if (std::abs(hat[static_cast<size_t>(r)]) < c * alpha * (1 - 1e-12))
        throw std::domain_error("density_increment_vs: |1_A-hat(r)| >= c alpha not met");
    long long p = G.factors()[0];
    for (long long f : G.factors())
        if (f != p) throw std::domain_error("density_increment_vs: group must be F_p^n");
    // cosets of r-perp are the level sets of x -> r.x
    std::vector<std::vector<long long>> level(static_cast<size_t>(p));
    for (long long x = 0; x < G.size(); ++x) {
        BigRat v = G.pairing(r, x);  // j/p
        long long j = (v * BigRat(p)).num().to_int64();
        level[static_cast<size_t>(j)].push_back(x);
    }
    std::set<long long> As(A.begin(), A.end());
    VSIncrement best;
    best.density = -1.0;
    for (long long j = 0; j < p; ++j) {
        long long inA = 0;
        for (long long x : level[static_cast<size_t>(j)])
            if (As.count(x)) ++inA;
        double d = static_cast<double>(inA) / static_cast<double>(level[static_cast<size_t>(j)].size());
        if (d > best.density) {
            best.density = d;
            best.coset = level[static_cast<size_t>(j)];
            best.coset_rep = level[static_cast<size_t>(j)][0];
        }
    }
    if (best.density < alpha * (1 + c / 2) * (1 - 1e-12))
        throw std::logic_error("density_increment_vs: promised increment not achieved");
    return best;
}

ZnIncrement density_increment_zn(long long N, const std::vector<long long>& B, long long r,
                                 double c) {
    // B subset of [1, N] embedded in Z_N (residues b mod N, with N = 0)
    FiniteAbelianGroup G = FiniteAbelianGroup::cyclic(N);
    std::vector<long long> Bres;
    for (long long b : B) {
        if (b < 1 || b > N) throw std::domain_error("density_increment_zn: B must lie in [1, N]");
        Bres.push_back(b % N);
    }
    double beta = static_cast<double>(B.size()) / static_cast<double>(N);
    auto hat = dft(G, balanced_indicator(G, Bres));
    if (std::abs(hat[static_cast<size_t>(((r % N) + N) % N)]) < c * beta * (1 - 1e-12))
        throw std::domain_error("density_increment_zn: |f_B-hat(r)| >= c beta not met");
    // Lemma 2.18 partition of [N] with eps = c / (8 pi)
    double eps = c / (8.0 * M_PI);
    long long u = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(N))));
    // pigeonhole step s in [1, u] minimizing ||r s / N||
    long long s = 1;
    BigRat best_norm = G.torus_norm(r, 1 % N);
    for (long long t = 2; t <= u; ++t) {
        BigRat nt = G.torus_norm(r, t % N);
        if (nt < best_norm) { best_norm = nt; s = t; }
    }
    long long piece_len = std::max<long long>(1, static_cast<long long>(std::floor(eps * static_cast<double>(u))));
    std::set<long long> Bset(B.begin(), B.end());
    ZnIncrement best;
    best.density = -1.0;
    best.promised_length = (c / 60.0) * std::sqrt(static_cast<double>(N));
    best.promised_density = beta * (1.0 + c / 4.0);
    // split each residue class mod s of [1, N] into progressions of ~piece_len
    for (long long a = 1; a <= s; ++a) {
        std::vector<long long> cls;
        for (long long x = a; x <= N; x += s) cls.push_back(x);
        if (cls.empty()) continue;
        size_t nb = (cls.size() + static_cast<size_t>(piece_len) - 1) / static_cast<size_t>(piece_len);
        size_t base = cls.size() / nb, extra = cls.size() % nb;
        size_t pos = 0;
        for (size_t b2 = 0; b2 < nb; ++b2) {
            size_t len = base + (b2 < extra ? 1 : 0);
            long long inB = 0;
            for (size_t i = 0; i < len; ++i)
                if (Bset.count(cls[pos + i])) ++inB;
            double d = static_cast<double>(inB) / static_cast<double>(len);
            if (d > best.density) {
                best.density = d;
                best.start = cls[pos];
                best.step = s;
                best.length = static_cast<long long>(len);
            }
            pos += len;
        }
    }
    if (best.length < static_cast<long long>(std::floor(best.promised_length)))
        throw std::logic_error("density_increment_zn: progression shorter than (c/60) sqrt(N)");
    if (best.density < best.promised_density * (1 - 1e-12))
        throw std::logic_error("density_increment_zn: density increment below beta(1 + c/4)");
    return best;
}

bool is_ap3_free(const std::vector<long long>& A) {
    std::unordered_set<long long> s(A.begin(), A.end());
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j) {
            long long sum = A[i] + A[j];
            if (sum % 2 == 0 && s.count(sum / 2) && sum / 2 != A[i]) return false;
        }
    return true;
}

BehrendSet behrend_set(long long N) {
    if (N < 10) throw std::domain_error("behrend_set: N must be >= 10");
    BehrendSet best;
    best.radix = 0;
    for (int m = 3; m <= 40; ++m) {
        long long digit_max = (m - 1) / 2;  // digits < m/2: no carry in x + z
        for (int d = 1; d <= 20; ++d) {
            // largest value: digit_max * (m^d - 1)/(m - 1)
            double max_val = 0;
            double md = 1;
            for (int i = 0; i < d; ++i) {
                max_val += static_cast<double>(digit_max) * md;
                md *= m;
            }
            if (md / m > 2e18) break;
            if (max_val + 1 > static_cast<double>(N) && d > 1) break;
            // enumerate digit vectors, bucket by squared length
            long long count = 1;
            bool too_many = false;
            for (int i = 0; i < d; ++i) {
                count *= (digit_max + 1);
                if (count > 2000000) { too_many = true; break; }
            }
            if (too_many) break;
            std::vector<std::vector<long long>> shells(
                static_cast<size_t>(d * digit_max * digit_max + 1));
            for (long long idx = 0; idx < count; ++idx) {
                long long t = idx, val = 0, norm = 0, pw = 1;
                for (int i = 0; i < d; ++i) {
                    long long dig = t % (digit_max + 1);
                    t /= (digit_max + 1);
                    val += dig * pw;
                    pw *= m;
                    norm += dig * dig;
                }
                if (val >= 1 && val <= N) shells[static_cast<size_t>(norm)].push_back(val);
            }
            for (size_t sh = 1; sh < shells.size(); ++sh) {
                if (static_cast<long long>(shells[sh].size()) >
                    static_cast<long long>(best.elements.size())) {
                    best.elements = shells[sh];
                    best.radix = m;
                    best.dim = d;
                    best.shell = static_cast<long long>(sh);
                }
            }
        }
    }
    std::sort(best.elements.begin(), best.elements.end());
    if (!is_ap3_free(best.elements))
        throw std::logic_error("behrend_set: output contains a 3-term progression");
    return best;
}

RothGraph roth_graph(const std::vector<long long>& A, long long n) {
    for (long long a : A)
        if (a < 1 || a > n) throw std::domain_error("roth_graph: A must lie in [1, n]");
    RothGraph g;
    g.n = n;
    g.vertices = 6 * n;
    std::unordered_set<long long> s(A.begin(), A.end());
    // vertices: (i,1) i in [1,n]; (j,2) j in [1,2n]; (k,3) k in [1,3n]
    // edges: j - i in A; k - j in A; k - i in 2A
    long long edges = 0;
    for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= 2 * n; ++j)
            if (s.count(j - i)) ++edges;
    for (long long j = 1; j <= 2 * n; ++j)
        for (long long k = 1; k <= 3 * n; ++k)
            if (s.count(k - j)) ++edges;
    for (long long i = 1; i <= n; ++i)
        for (long long k = 1; k <= 3 * n; ++k)
            if ((k - i) % 2 == 0 && s.count((k - i) / 2)) ++edges;
    g.edges = edges;
    // exact triangle count
    long long tri = 0;
    for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= 2 * n; ++j) {
            if (!s.count(j - i)) continue;
            for (long long k = 1; k <= 3 * n; ++k)
                if (s.count(k - j) && (k - i) % 2 == 0 && s.count((k - i) / 2)) ++tri;
        }
    g.triangles = tri;
    long long sols = 0;
    for (long long a1 : A)
        for (long long a2 : A)
            if ((a1 + a2) % 2 == 0 && s.count((a1 + a2) / 2)) ++sols;
    g.ap3_solutions = sols;
    if (g.triangles != g.n * sols)
        throw std::logic_error("roth_graph: triangle count != n * #solutions");
    return g;
}

}  // namespace fourier
}  // namespace arithlab
