#include "arithlab/heights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "arithlab/numtheory.hpp"
#include "arithlab/rootfind.hpp"
#include "arithlab/matrix.hpp"

namespace arithlab {
namespace heights {

CRat CRat::div(const CRat& o) const {
    BigRat n2 = o.norm2();
    if (n2.is_zero()) throw std::domain_error("CRat: division by zero");
    CRat num = *this * o.conj();
    return {num.re / n2, num.im / n2};
}

void sqrt_bounds(const BigRat& s, BigRat& lo, BigRat& hi) {
    if (s.sign() < 0) throw std::domain_error("sqrt_bounds: negative input");
    if (s.is_zero()) { lo = BigRat(0); hi = BigRat(0); return; }
    // sqrt(p/q) = sqrt(p q 4^k) / (q 2^k), floored isqrt at 80 guard bits
    const unsigned k = 80;
    BigInt pq = (s.num() * s.den()) << (2 * k);
    BigInt r = BigInt::isqrt(pq);
    BigInt den = s.den() << k;
    lo = BigRat(r, den);
    hi = (r * r == pq) ? lo : BigRat(r + BigInt(1), den);
}

namespace {

// round a rational to denominator 2^bits (floor), to stop denominator blowup
BigRat round_den(const BigRat& x, unsigned bits) {
    BigInt scaled = (x * BigRat(BigInt(1) << bits)).floor();
    return BigRat(scaled, BigInt(1) << bits);
}

CRat round_den(const CRat& z, unsigned bits) {
    return {round_den(z.re, bits), round_den(z.im, bits)};
}

CRat eval_poly(const IntPoly& f, const CRat& z) {
    CRat r{BigRat(0), BigRat(0)};
    for (size_t i = f.coefs().size(); i-- > 0;) {
        r = r * z;
        r.re += BigRat(f.coef(i));
    }
    return r;
}

// upper bound on |z|
BigRat abs_upper(const CRat& z) {
    BigRat lo, hi;
    sqrt_bounds(z.norm2(), lo, hi);
    return hi;
}

BigRat abs_lower(const CRat& z) {
    BigRat lo, hi;
    sqrt_bounds(z.norm2(), lo, hi);
    return lo;
}

}  // namespace

std::vector<CertifiedRoot> certify_roots_from(const IntPoly& f, std::vector<CRat> seeds,
                                              const BigRat& target_radius) {
    long long n = f.degree();
    if (n < 1) throw std::domain_error("certify_roots: degree must be >= 1");
    if (static_cast<long long>(seeds.size()) != n)
        throw std::invalid_argument("certify_roots_from: need one seed per root");
    IntPoly fd = f.derivative();
    // fixed-point representation z = (a + b i) / 2^k; all evaluation is
    // Gaussian-integer Horner with power-of-two scaling, no rational gcds
    const unsigned k = 104;
    BigInt scale = BigInt(1) << k;
    std::vector<BigInt> za(seeds.size()), zb(seeds.size());
    for (size_t i = 0; i < seeds.size(); ++i) {
        za[i] = (seeds[i].re * BigRat(scale)).floor();
        zb[i] = (seeds[i].im * BigRat(scale)).floor();
    }
    // H = 2^{k deg} g(z) computed as Horner with per-step rescaling
    auto eval_scaled = [&](const IntPoly& g, const BigInt& a, const BigInt& b,
                           BigInt& hre, BigInt& him) {
        long long d = g.degree();
        hre = g.coef(static_cast<size_t>(d));
        him = BigInt(0);
        for (long long j = d - 1; j >= 0; --j) {
            BigInt nre = hre * a - him * b + (g.coef(static_cast<size_t>(j)) << static_cast<unsigned>(k * (d - j)));
            BigInt nim = hre * b + him * a;
            hre = std::move(nre);
            him = std::move(nim);
        }
    };
    auto divround = [](const BigInt& num, const BigInt& den) {
        BigInt q, r;
        BigInt::divmod(num * BigInt(2) + den, den * BigInt(2), q, r);
        if (r.is_negative()) q -= BigInt(1);
        return q;  // floor(num/den + 1/2)
    };
    BigRat nn(n);
    for (int pass = 0; pass < 16; ++pass) {
        // Newton step in fixed point
        for (size_t i = 0; i < za.size(); ++i) {
            BigInt fre, fim, dre, dim;
            eval_scaled(f, za[i], zb[i], fre, fim);
            eval_scaled(fd, za[i], zb[i], dre, dim);
            BigInt D = dre * dre + dim * dim;
            if (D.is_zero()) continue;
            // f/f' = (q / D) / 2^k in z-units of 2^-k
            BigInt qre = fre * dre + fim * dim;
            BigInt qim = fim * dre - fre * dim;
            za[i] -= divround(qre, D);
            zb[i] -= divround(qim, D);
        }
        // certified radii r_i = n |f(z)| / |f'(z)|
        std::vector<BigRat> radii(za.size());
        bool all_ok = true;
        for (size_t i = 0; i < za.size() && all_ok; ++i) {
            BigInt fre, fim, dre, dim;
            eval_scaled(f, za[i], zb[i], fre, fim);
            eval_scaled(fd, za[i], zb[i], dre, dim);
            BigInt fn2 = fre * fre + fim * fim;
            BigInt dn2 = dre * dre + dim * dim;
            if (dn2.is_zero()) { all_ok = false; break; }
            // |f/f'| <= sqrt(fn2)/ (2^k sqrt(dn2)) with outward rounding
            BigInt num_hi = BigInt::isqrt(fn2) + BigInt(1);
            BigInt den_lo = BigInt::isqrt(dn2);
            if (den_lo.is_zero()) { all_ok = false; break; }
            // round the radius outward to a small dyadic so later interval
            // arithmetic stays cheap
            BigInt num = BigInt(n) * num_hi << 128;
            BigInt q, r;
            BigInt::divmod(num, den_lo * scale, q, r);
            if (!r.is_zero()) q += BigInt(1);
            radii[i] = BigRat(q, BigInt(1) << 128);
            if (radii[i] > target_radius) all_ok = false;
        }
        if (!all_ok) continue;
        // pairwise disjoint discs
        bool disjoint = true;
        for (size_t i = 0; i < za.size() && disjoint; ++i)
            for (size_t j = i + 1; j < za.size(); ++j) {
                BigInt dx = za[i] - za[j], dy = zb[i] - zb[j];
                BigRat dist_lo = BigRat(BigInt::isqrt(dx * dx + dy * dy), scale);
                if (!(dist_lo > radii[i] + radii[j])) { disjoint = false; break; }
            }
        if (!disjoint) continue;
        std::vector<CertifiedRoot> out(za.size());
        for (size_t i = 0; i < za.size(); ++i) {
            out[i].z = CRat{BigRat(za[i], scale), BigRat(zb[i], scale)};
            out[i].radius = radii[i];
            BigRat alo(BigInt::isqrt(za[i] * za[i] + zb[i] * zb[i]), scale);
            BigRat ahi = alo + BigRat(BigInt(1), scale);
            out[i].abs_lo = alo - radii[i];
            if (out[i].abs_lo.sign() < 0) out[i].abs_lo = BigRat(0);
            out[i].abs_hi = ahi + radii[i];
        }
        return out;
    }
    throw std::runtime_error("certify_roots: refinement failed to reach the target radius");
}

std::vector<CertifiedRoot> certify_roots(const IntPoly& f, const BigRat& target_radius) {
    std::vector<double> cd_(f.coefs().size());
    for (size_t i = 0; i < cd_.size(); ++i) cd_[i] = f.coef(i).to_double();
    std::vector<CRat> z;
    for (const auto& w : polyroots_double(cd_)) {
        z.push_back(CRat{
            BigRat(BigInt(static_cast<long long>(std::floor(w.real() * 1e15))), BigInt("1000000000000000")),
            BigRat(BigInt(static_cast<long long>(std::floor(w.imag() * 1e15))), BigInt("1000000000000000"))});
    }
    return certify_roots_from(f, std::move(z), target_radius);
}

AlgebraicNumber AlgebraicNumber::from_min_poly(const IntPoly& g) {
    if (g.degree() < 1) throw std::domain_error("AlgebraicNumber: degree must be >= 1");
    if (g.degree() > 24) throw std::domain_error("AlgebraicNumber: degree budget 24");
    IntPoly p = g.primitive_part();
    if (p.lead().is_negative()) p = -p;
    if (!(p == g) && !(p == -g))
        throw std::domain_error("AlgebraicNumber: polynomial must be primitive");
    if (!is_irreducible(p)) throw std::domain_error("AlgebraicNumber: polynomial is reducible");
    AlgebraicNumber a;
    a.g_ = p;
    a.roots_ = certify_roots(p, BigRat(BigInt(1), BigInt::pow(BigInt(10), 20)));
    return a;
}

AlgebraicNumber AlgebraicNumber::root_of_unity(long long n) {
    // cyclotomic polynomials are irreducible, so the generic degree cap and
    // factor search are unnecessary; roots start from exact-angle seeds
    if (n < 1 || n > 512) throw std::domain_error("root_of_unity: n budget 512");
    IntPoly g = cyclotomic_poly(n);
    AlgebraicNumber a;
    a.g_ = g;
    std::vector<CRat> seeds;
    for (long long j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        long double ang = 2.0L * static_cast<long double>(M_PI) * j / n;
        const long long scale = 1LL << 62;
        seeds.push_back(CRat{BigRat(BigInt(static_cast<long long>(cosl(ang) * scale)), BigInt(scale)),
                             BigRat(BigInt(static_cast<long long>(sinl(ang) * scale)), BigInt(scale))});
    }
    a.roots_ = certify_roots_from(g, seeds, BigRat(BigInt(1), BigInt::pow(BigInt(10), 20)));
    return a;
}

RealValue mahler_measure(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("mahler_measure: zero polynomial");
    RealValue r;
    if (f.degree() == 0) {
        r.value = f.coef(0).abs().log_abs();
        r.error = 1e-14 * (1 + std::abs(r.value));
        r.value = std::exp(r.value);
        r.error = r.value * 1e-13;
        return r;
    }
    // strip x^k factors (roots at 0 contribute nothing)
    std::vector<BigInt> c = f.coefs();
    size_t k = 0;
    while (c[k].is_zero()) ++k;
    IntPoly g(std::vector<BigInt>(c.begin() + k, c.end()));
    // M(g) = |content| * prod M(irr)^mult over the irreducible factorization;
    // M(x) = 1 covers the stripped zero roots
    double log_m = 0.0;
    double err = 1e-14;
    if (g.degree() >= 1) {
        auto fac = factor_int_poly(g);
        if (!(fac.content.abs() == BigInt(1)))
            log_m += fac.content.abs().log_abs();
        for (auto& [irr, mult] : fac.factors) {
            if (irr.degree() < 1) continue;
            if (!irr.lead().abs().is_one()) log_m += mult * irr.lead().abs().log_abs();
            auto roots = certify_roots(irr, BigRat(BigInt(1), BigInt::pow(BigInt(10), 20)));
            for (const auto& rt : roots) {
                double lo = rt.abs_lo.is_zero() ? 0.0 : rt.abs_lo.to_double();
                double hi = rt.abs_hi.to_double();
                double contrib_lo = lo > 1.0 ? std::log(lo) : 0.0;
                double contrib_hi = hi > 1.0 ? std::log(hi) : 0.0;
                log_m += mult * 0.5 * (contrib_lo + contrib_hi);
                err += mult * (0.5 * (contrib_hi - contrib_lo) + 1e-15);
            }
        }
    } else {
        log_m = g.coef(0).abs().log_abs();
    }
    r.value = std::exp(log_m);
    r.error = r.value * (err + 1e-13);
    return r;
}

RealValue weil_height(const AlgebraicNumber& a) {
    long long n = a.degree();
    // route 1: (log a_n + sum log+ |beta|)/n from the certified conjugates
    double s = a.min_poly().lead().log_abs();
    double err = 1e-14;
    for (const auto& rt : a.conjugates()) {
        double lo = rt.abs_lo.is_zero() ? 0.0 : rt.abs_lo.to_double();
        double hi = rt.abs_hi.to_double();
        double clo = lo > 1.0 ? std::log(lo) : 0.0;
        double chi = hi > 1.0 ? std::log(hi) : 0.0;
        s += 0.5 * (clo + chi);
        err += 0.5 * (chi - clo) + 1e-15;
    }
    double h1 = s / static_cast<double>(n);
    // route 2: log M(g)/n through mahler_measure
    RealValue m = mahler_measure(a.min_poly());
    double h2 = std::log(m.value) / static_cast<double>(n);
    if (std::abs(h1 - h2) > 1e-10 + err + m.error / std::max(1e-12, m.value))
        throw std::logic_error("weil_height: the two formulas disagree");
    RealValue r;
    r.value = h1;
    r.error = err / static_cast<double>(n) + 1e-13;
    return r;
}

IntPoly min_poly_of_power(const AlgebraicNumber& a, long long k) {
    if (k < 1) throw std::domain_error("min_poly_of_power: k must be >= 1");
    long long n = a.degree();
    // companion matrix of the monic rational version of g
    RatMatrix C(static_cast<size_t>(n), static_cast<size_t>(n));
    BigRat lead(a.min_poly().lead());
    for (long long i = 0; i + 1 < n; ++i) C.at(static_cast<size_t>(i + 1), static_cast<size_t>(i)) = BigRat(1);
    for (long long i = 0; i < n; ++i)
        C.at(static_cast<size_t>(i), static_cast<size_t>(n - 1)) =
            -BigRat(a.min_poly().coef(static_cast<size_t>(i))) / lead;
    // C^k
    RatMatrix P = RatMatrix::identity(static_cast<size_t>(n));
    RatMatrix base = C;
    long long e = k;
    while (e) {
        if (e & 1) P = P * base;
        e >>= 1;
        if (e) base = base * base;
    }
    // char poly of P has roots alpha_i^k
    // Faddeev-LeVerrier
    size_t m = static_cast<size_t>(n);
    std::vector<BigRat> cp(m + 1, BigRat(0));
    cp[m] = BigRat(1);
    RatMatrix Ak = P;
    RatMatrix I = RatMatrix::identity(m);
    for (size_t j = 1; j <= m; ++j) {
        BigRat tr(0);
        for (size_t i = 0; i < m; ++i) tr += Ak.at(i, i);
        BigRat cj = tr / BigRat(static_cast<long long>(j));
        cp[m - j] = -cj;
        if (j < m) Ak = P * (Ak - I.scaled(cj));
    }
    IntPoly charZ = IntPoly::from_rat_primitive(RatPoly(std::move(cp)));
    auto fac = factor_int_poly(charZ);
    // pick the factor vanishing at alpha^k (double evaluation at a certified root)
    std::complex<double> al = a.conjugates()[0].z.to_complex();
    std::complex<double> alk = std::pow(al, static_cast<double>(k));
    IntPoly best;
    double best_val = 1e300;
    for (auto& [irr, e2] : fac.factors) {
        std::complex<double> v(0.0);
        for (size_t i = irr.coefs().size(); i-- > 0;) v = v * alk + irr.coef(i).to_double();
        // normalize by coefficient scale
        double scale = 0;
        for (const auto& cc : irr.coefs()) scale = std::max(scale, std::abs(cc.to_double()));
        double val = std::abs(v) / std::max(1.0, scale);
        if (val < best_val) { best_val = val; best = irr; }
    }
    if (best.is_zero()) throw std::logic_error("min_poly_of_power: no factor selected");
    if (best.lead().is_negative()) best = -best;
    return best;
}

bool is_root_of_unity(const AlgebraicNumber& a) {
    const IntPoly& g = a.min_poly();
    long long n = a.degree();
    if (!g.lead().is_one()) return false;
    // fast filter: every conjugate must have modulus within 1e-15 of <= 1
    for (const auto& rt : a.conjugates()) {
        if (rt.abs_lo.to_double() > 1.0 + 1e-15) return false;
    }
    // exact identification: g must be Phi_d for some d with phi(d) = n
    bool cyc = false;
    for (long long d = 1; d <= 4 * n * n + 4; ++d) {
        if (nt::euler_phi(d) != n) continue;
        if (g == cyclotomic_poly(d)) { cyc = true; break; }
    }
    // the proof's route: minimal polynomials of alpha^(2^t) repeat
    std::set<std::string> seen;
    bool repeat = false;
    long long kk = 2;
    for (int t = 0; t <= 2 * static_cast<int>(std::log2(4.0 * n * n + 4)) + 4; ++t) {
        IntPoly mp = t == 0 ? g : min_poly_of_power(a, kk);
        if (t > 0) kk *= 2;
        std::string key = mp.to_string();
        if (seen.count(key)) { repeat = true; break; }
        seen.insert(key);
        // bounded-coefficient test: a root of unity power has |a_j| <= C(n, j)
        for (size_t j = 0; j < mp.coefs().size(); ++j) {
            BigInt bound(1);
            // C(n, j)
            BigInt num(1), den(1);
            for (size_t i = 0; i < j; ++i) {
                num *= BigInt(static_cast<long long>(mp.coefs().size() - 1 - i));
                den *= BigInt(static_cast<long long>(i + 1));
            }
            bound = num / den;
            if (mp.coef(j).abs() > bound) return false;  // escapes the finite set
        }
        if (kk > (1LL << 40)) break;
    }
    if (repeat != cyc)
        throw std::logic_error("is_root_of_unity: power iteration and cyclotomic check disagree");
    return cyc;
}

RealValue orbit_energy(const AlgebraicNumber& a) {
    long long n = a.degree();
    RealValue r;
    if (n == 1) return r;  // empty sum convention
    double s = 0.0, err = 0.0;
    for (size_t i = 0; i < a.conjugates().size(); ++i)
        for (size_t j = 0; j < a.conjugates().size(); ++j) {
            if (i == j) continue;
            CRat diff = a.conjugates()[i].z - a.conjugates()[j].z;
            BigRat rad = a.conjugates()[i].radius + a.conjugates()[j].radius;
            BigRat lo, hi;
            sqrt_bounds(diff.norm2(), lo, hi);
            double dlo = (lo - rad).to_double();
            double dhi = (hi + rad).to_double();
            if (dlo <= 0) throw std::logic_error("orbit_energy: roots not separated");
            s += 0.5 * (std::log(dlo) + std::log(dhi));
            err += 0.5 * (std::log(dhi) - std::log(dlo)) + 1e-15;
        }
    r.value = -s / static_cast<double>(n * n);
    r.error = err / static_cast<double>(n * n) + 1e-13;
    return r;
}

RealValue energy_height_gap(const AlgebraicNumber& a) {
    RealValue e = orbit_energy(a);
    RealValue h = weil_height(a);
    RealValue g;
    g.value = 2.0 * h.value - e.value;
    g.error = 2.0 * h.error + e.error;
    if (g.value < -g.error)
        throw std::logic_error("energy_height_gap: E' <= 2h violated");
    return g;
}

long long ramanujan_sum(long long n, long long k) {
    if (n < 1) throw std::domain_error("ramanujan_sum: n must be >= 1");
    // divisor formula
    long long kk = ((k % n) + n) % n;
    long long g = kk == 0 ? n : std::gcd(n, kk);
    long long s1 = 0;
    for (long long d : nt::divisors(g)) s1 += d * nt::moebius_mu(n / d);
    // exponential sum with certified rounding
    long double acc = 0.0L;
    for (long long j = 0; j < n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        long double ang = 2.0L * static_cast<long double>(M_PI) *
                          static_cast<long double>((static_cast<__int128>(j) * k) % n) /
                          static_cast<long double>(n);
        acc += cosl(ang);
    }
    long long s2 = static_cast<long long>(llroundl(acc));
    if (std::abs(acc - static_cast<long double>(s2)) > 1e-6L)
        throw std::logic_error("ramanujan_sum: exponential sum failed to certify an integer");
    if (s1 != s2)
        throw std::logic_error("ramanujan_sum: divisor formula and exponential sum disagree");
    return s1;
}

EquidistStats equidistribution_stats(const AlgebraicNumber& a, int K) {
    EquidistStats st;
    st.modulus_window_ok = true;
    std::vector<std::complex<double>> zs;
    for (const auto& rt : a.conjugates()) {
        double lo = rt.abs_lo.to_double(), hi = rt.abs_hi.to_double();
        if (hi < 0.8 || lo > 1.2) st.modulus_window_ok = false;
        zs.push_back(rt.z.to_complex());
    }
    for (int k = 1; k <= K; ++k) {
        std::complex<double> s(0.0);
        for (const auto& z : zs) s += std::pow(z, k);
        st.weyl.push_back(std::abs(s) / static_cast<double>(zs.size()));
    }
    // star discrepancy of normalized arguments
    std::vector<double> args;
    for (const auto& z : zs) {
        double t = std::arg(z) / (2.0 * M_PI);
        if (t < 0) t += 1.0;
        args.push_back(t);
    }
    std::sort(args.begin(), args.end());
    double disc = 0.0;
    size_t m = args.size();
    for (size_t i = 0; i < m; ++i) {
        double fi = static_cast<double>(i) / m, fi1 = static_cast<double>(i + 1) / m;
        disc = std::max(disc, std::max(std::abs(args[i] - fi), std::abs(args[i] - fi1)));
    }
    st.star_discrepancy = disc;
    return st;
}

std::vector<NorthcottEntry> northcott_enumerate(int D, double B) {
    if (D < 1 || D > 4) throw std::domain_error("northcott_enumerate: D budget is 1..4");
    if (B > std::log(3.0) + 1e-12) throw std::domain_error("northcott_enumerate: B budget is log 3");
    std::vector<NorthcottEntry> out;
    std::set<std::string> seen;
    for (int d = 1; d <= D; ++d) {
        double M = std::exp(d * B) * (1.0 + 1e-9);
        long long leadmax = static_cast<long long>(std::floor(M));
        // box |a_j| <= C(d, j) M
        std::vector<long long> bound(static_cast<size_t>(d) + 1);
        double box = 1.0;
        for (int j = 0; j <= d; ++j) {
            double c = 1.0;
            for (int i = 0; i < j; ++i) c = c * (d - i) / (i + 1);
            bound[static_cast<size_t>(j)] = static_cast<long long>(std::floor(c * M));
            box *= (j == d) ? static_cast<double>(leadmax)
                            : (2.0 * static_cast<double>(bound[static_cast<size_t>(j)]) + 1.0);
        }
        if (box > 5e6)
            throw std::runtime_error("northcott_enumerate: coefficient box exceeds the 5e6 budget");
        std::vector<long long> c(static_cast<size_t>(d) + 1, 0);
        std::function<void(int)> rec = [&](int j) {
            if (j < 0) {
                IntPoly f = IntPoly::from_int_list(std::vector<long long>(c.begin(), c.end()));
                if (f.degree() != d) return;
                if (!(f.content() == BigInt(1))) return;
                // double-precision prefilter with a wide safety margin; only
                // candidates near or below the cutoff get certified
                {
                    std::vector<double> cd_(f.coefs().size());
                    for (size_t i = 0; i < cd_.size(); ++i) cd_[i] = f.coef(i).to_double();
                    double est = std::log(std::abs(cd_.back()));
                    for (const auto& z : polyroots_double(cd_)) {
                        double az = std::abs(z);
                        if (az > 1.0) est += std::log(az);
                    }
                    if (est / d > B + 1e-6) return;
                }
                if (!is_irreducible(f)) return;
                RealValue m = mahler_measure(f);
                double h = std::log(m.value) / d;
                if (h <= B + 1e-9) {
                    std::string key = f.to_string();
                    if (!seen.count(key)) {
                        seen.insert(key);
                        out.push_back({f, h});
                    }
                }
                return;
            }
            if (j == d) {
                for (long long v = 1; v <= leadmax; ++v) {
                    c[static_cast<size_t>(j)] = v;
                    rec(j - 1);
                }
            } else {
                for (long long v = -bound[static_cast<size_t>(j)];
                     v <= bound[static_cast<size_t>(j)]; ++v) {
                    c[static_cast<size_t>(j)] = v;
                    rec(j - 1);
                }
            }
        };
        rec(d);
    }
    return out;
}

}  // namespace heights
}  // namespace arithlab
