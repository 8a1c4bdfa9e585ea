#include "arithlab/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "arithlab/numtheory.hpp"
#include "arithlab/poly.hpp"
#include "arithlab/rootfind.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arithlab {
namespace ec {

WeierstrassCurve::WeierstrassCurve(BigRat a1, BigRat a2, BigRat a3, BigRat a4, BigRat a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)) {
    b2_ = a1_ * a1_ + BigRat(4) * a2_;
    b4_ = BigRat(2) * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + BigRat(4) * a6_;
    b8_ = a1_ * a1_ * a6_ + BigRat(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
          a4_ * a4_;
    c4_ = b2_ * b2_ - BigRat(24) * b4_;
    c6_ = -b2_ * b2_ * b2_ + BigRat(36) * b2_ * b4_ - BigRat(216) * b6_;
    disc_ = -b2_ * b2_ * b8_ - BigRat(8) * b4_ * b4_ * b4_ - BigRat(27) * b6_ * b6_ +
            BigRat(9) * b2_ * b4_ * b6_;
    if (disc_.is_zero()) throw std::domain_error("WeierstrassCurve: singular (Delta = 0)");
    // consistency: 4 b8 = b2 b6 - b4^2
    if (!(BigRat(4) * b8_ == b2_ * b6_ - b4_ * b4_))
        throw std::logic_error("WeierstrassCurve: b8 identity failed");
    j_ = c4_ * c4_ * c4_ / disc_;
}

bool WeierstrassCurve::is_integral() const {
    return a1_.is_integer() && a2_.is_integer() && a3_.is_integer() && a4_.is_integer() &&
           a6_.is_integer();
}

WeierstrassCurve WeierstrassCurve::transformed(const BigRat& u, const BigRat& r,
                                               const BigRat& s, const BigRat& t) const {
    if (u.is_zero()) throw std::domain_error("transformed: u must be nonzero");
    BigRat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    BigRat na1 = (a1_ + BigRat(2) * s) / u;
    BigRat na2 = (a2_ - s * a1_ + BigRat(3) * r - s * s) / u2;
    BigRat na3 = (a3_ + r * a1_ + BigRat(2) * t) / u3;
    BigRat na4 = (a4_ - s * a3_ + BigRat(2) * r * a2_ - (t + r * s) * a1_ +
                  BigRat(3) * r * r - BigRat(2) * s * t) / u4;
    BigRat na6 = (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t - r * t * a1_) / u6;
    return WeierstrassCurve(na1, na2, na3, na4, na6);
}

WeierstrassCurve WeierstrassCurve::integral_model() const {
    BigInt l(1);
    for (const BigRat* a : {&a1_, &a2_, &a3_, &a4_, &a6_})
        l = BigInt::lcm(l, a->den());
    // x -> x / u^2 with u = 1/l makes a_i -> a_i l^i, integral
    return transformed(BigRat(BigInt(1), l), BigRat(0), BigRat(0), BigRat(0));
}

CurvePoint::CurvePoint(const WeierstrassCurve& E, BigRat x, BigRat y)
    : inf_(false), x_(std::move(x)), y_(std::move(y)) {
    BigRat lhs = y_ * y_ + E.a1() * x_ * y_ + E.a3() * y_;
    BigRat rhs = x_ * x_ * x_ + E.a2() * x_ * x_ + E.a4() * x_ + E.a6();
    if (!(lhs == rhs)) throw std::domain_error("CurvePoint: not on the curve");
}

const BigRat& CurvePoint::x() const {
    if (inf_) throw std::domain_error("CurvePoint: infinity has no x");
    return x_;
}

const BigRat& CurvePoint::y() const {
    if (inf_) throw std::domain_error("CurvePoint: infinity has no y");
    return y_;
}

std::string CurvePoint::to_string() const {
    if (inf_) return "O";
    return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
}

CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.is_infinity()) return P;
    return CurvePoint(E, P.x(), -P.y() - E.a1() * P.x() - E.a3());
}

CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const BigRat &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    BigRat lambda;
    if (x1 == x2) {
        // P + (-P) = O
        if (y2 == -y1 - E.a1() * x1 - E.a3()) return CurvePoint();
        // tangent slope
        BigRat num = BigRat(3) * x1 * x1 + BigRat(2) * E.a2() * x1 + E.a4() - E.a1() * y1;
        BigRat den = BigRat(2) * y1 + E.a1() * x1 + E.a3();
        lambda = num / den;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    BigRat nu = y1 - lambda * x1;
    BigRat x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
    BigRat y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
    return CurvePoint(E, x3, y3);
}

CurvePoint mul(const WeierstrassCurve& E, long long n, const CurvePoint& P) {
    if (n < 0) return mul(E, -n, neg(E, P));
    CurvePoint r;  // O
    CurvePoint base = P;
    while (n > 0) {
        if (n & 1) r = add(E, r, base);
        n >>= 1;
        if (n) base = add(E, base, base);
    }
    return r;
}

BigRat duplication_x(const WeierstrassCurve& E, const BigRat& x) {
    BigRat num = x * x * x * x - E.b4() * x * x - BigRat(2) * E.b6() * x - E.b8();
    BigRat den = BigRat(4) * x * x * x + E.b2() * x * x + BigRat(2) * E.b4() * x + E.b6();
    if (den.is_zero()) throw std::domain_error("duplication_x: 2P = O (denominator vanishes)");
    return num / den;
}

// ----------------------------------------------------------- reduction mod p

namespace {

long long rat_mod(const BigRat& v, long long p) {
    BigInt den = v.den() % BigInt(p);
    if (den.is_zero()) throw std::domain_error("rat_mod: denominator divisible by p");
    long long d = den.mod_euclid(BigInt(p)).to_int64();
    long long n = v.num().mod_euclid(BigInt(p)).to_int64();
    return n * static_cast<unsigned __int128>(nt::inv_mod(d, p)) % p;
}

// integral short model y^2 = x^3 + Ax + B isomorphic over Q, via the
// standard completion of the square and the 6-scaling
void short_model(const WeierstrassCurve& E, BigInt& A, BigInt& B) {
    WeierstrassCurve Ei = E.integral_model();
    BigRat a = BigRat(-27) * Ei.c4();
    BigRat b = BigRat(-54) * Ei.c6();
    if (!a.is_integer() || !b.is_integer()) throw std::logic_error("short_model: not integral");
    A = a.num();
    B = b.num();
}

// minimal at p >= 5: strip u = p while p^4 | A and p^6 | B
void p_minimize_short(BigInt& A, BigInt& B, long long p) {
    BigInt p4 = BigInt::pow(BigInt(p), 4), p6 = BigInt::pow(BigInt(p), 6);
    while ((A % p4).is_zero() && (B % p6).is_zero()) {
        A /= p4;
        B /= p6;
    }
}

long long vp(const BigInt& n, long long p) {
    if (n.is_zero()) throw std::domain_error("vp of zero");
    long long v = 0;
    BigInt m = n;
    BigInt pb(p);
    while ((m % pb).is_zero()) { m /= pb; ++v; }
    return v;
}

long long vp_rat(const BigRat& r, long long p) {
    if (r.is_zero()) throw std::domain_error("vp of zero");
    return vp(r.num(), p) - vp(r.den(), p);
}

}  // namespace

long long count_points_mod_p(const WeierstrassCurve& E, long long p, bool serial_reference) {
    if (!nt::is_prime(p)) throw std::domain_error("count_points_mod_p: p must be prime");
    if (p > 100000) throw std::runtime_error("count_points_mod_p: p budget 1e5 exceeded");
    long long a1 = rat_mod(E.a1(), p), a2 = rat_mod(E.a2(), p), a3 = rat_mod(E.a3(), p),
              a4 = rat_mod(E.a4(), p), a6 = rat_mod(E.a6(), p);
    if (p == 2) {
        long long count = 1;  // infinity
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y) {
                long long lhs = (y * y + a1 * x * y + a3 * y) % 2;
                long long rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                if (lhs == rhs) ++count;
            }
        return count;
    }
    // complete the square: solutions of y^2+h(x)y = f(x) <-> chi(h^2+4f)
    std::vector<char> qr(static_cast<size_t>(p), 0);
    for (long long t = 0; t < p; ++t) qr[static_cast<size_t>(t * static_cast<unsigned __int128>(t) % p)] = 1;
    long long total = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : total) schedule(static) if (!serial_reference && p > 512)
#endif
    for (long long x = 0; x < p; ++x) {
        unsigned __int128 x2 = static_cast<unsigned __int128>(x) * x % p;
        long long fx = static_cast<long long>(
            (x2 * x + static_cast<unsigned __int128>(a2) * x2 +
             static_cast<unsigned __int128>(a4) * x + a6) % p);
        long long hx = (a1 * x + a3) % p;
        long long d = static_cast<long long>(
            (static_cast<unsigned __int128>(hx) * hx + 4 * static_cast<unsigned __int128>(fx)) % p);
        if (d == 0) total += 1;
        else total += qr[static_cast<size_t>(d)] ? 2 : 0;
    }
    return total + 1;  // + infinity
}

ReductionData reduce_and_count(const WeierstrassCurve& E, long long p, bool serial_reference) {
    if (!nt::is_prime(p)) throw std::domain_error("reduce_and_count: p must be prime");
    ReductionData rd;
    rd.p = p;
    WeierstrassCurve Ei = E.integral_model();
    long long v_disc;
    if (p >= 5) {
        BigInt A, B;
        short_model(E, A, B);
        p_minimize_short(A, B, p);
        BigInt disc_short = BigInt(-16) * (BigInt(4) * A * A * A + BigInt(27) * B * B);
        v_disc = vp(disc_short, p);
    } else {
        // the given model is required to be minimal at 2 and 3
        v_disc = vp_rat(Ei.disc(), p);
    }
    rd.vp_disc_min = v_disc;
    if (v_disc == 0) {
        rd.type = ReductionType::Good;
        if (p >= 5) {
            BigInt A, B;
            short_model(E, A, B);
            p_minimize_short(A, B, p);
            WeierstrassCurve Es(BigRat(0), BigRat(0), BigRat(0), BigRat(A), BigRat(B));
            rd.points = count_points_mod_p(Es, p, serial_reference);
        } else {
            rd.points = count_points_mod_p(Ei, p, serial_reference);
        }
        rd.ap = p + 1 - rd.points;
        return rd;
    }
    // bad reduction: classify the singular point's tangent cone
    if (p >= 5) {
        BigInt A, B;
        short_model(E, A, B);
        p_minimize_short(A, B, p);
        long long Am = A.mod_euclid(BigInt(p)).to_int64();
        long long Bm = B.mod_euclid(BigInt(p)).to_int64();
        if (Am == 0) {  // with Bm = 0 forced: cusp
            rd.type = ReductionType::Additive;
            rd.ap = 0;
            return rd;
        }
        // node at (x0, 0) with x0 = -3B (2A)^{-1}; tangent slopes split iff
        // 3 x0 is a square mod p
        long long x0 = (p - 3 % p) % p * static_cast<unsigned __int128>(Bm) % p *
                       nt::inv_mod(2 * Am % p, p) % p;
        long long disc_cone = 3 * static_cast<unsigned __int128>(x0) % p;
        int leg = disc_cone == 0 ? 0 : nt::legendre_symbol(disc_cone, p);
        if (leg == 1) {
            rd.type = ReductionType::MultiplicativeSplit;
            rd.ap = 1;
        } else if (leg == -1) {
            rd.type = ReductionType::MultiplicativeNonSplit;
            rd.ap = -1;
        } else {
            rd.type = ReductionType::Additive;
            rd.ap = 0;
        }
        return rd;
    }
    // p = 2 or 3 on the given (minimal) model: scan the p^2 points
    long long a1 = rat_mod(Ei.a1(), p), a2 = rat_mod(Ei.a2(), p), a3 = rat_mod(Ei.a3(), p),
              a4 = rat_mod(Ei.a4(), p), a6 = rat_mod(Ei.a6(), p);
    auto md = [p](long long v) { return ((v % p) + p) % p; };
    long long sx = -1, sy = -1;
    for (long long x = 0; x < p && sx < 0; ++x)
        for (long long y = 0; y < p; ++y) {
            long long f = md(y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6);
            if (f != 0) continue;
            long long fx = md(a1 * y - 3 * x * x - 2 * a2 * x - a4);
            long long fy = md(2 * y + a1 * x + a3);
            if (fx == 0 && fy == 0) { sx = x; sy = y; break; }
        }
    if (sx < 0) throw std::logic_error("reduce_and_count: singular point not found");
    // translate: tangent cone y^2 + a1 xy - (a2 + 3 sx) x^2 (the a1 term is
    // unchanged by an (r, t)-translation)
    long long na1 = md(a1);
    long long na2 = md(a2 + 3 * sx);
    int roots = 0;
    for (long long z = 0; z < p; ++z)
        if (md(z * z + na1 * z - na2) == 0) ++roots;
    if (roots == 2) {
        rd.type = ReductionType::MultiplicativeSplit;
        rd.ap = 1;
    } else if (roots == 0) {
        rd.type = ReductionType::MultiplicativeNonSplit;
        rd.ap = -1;
    } else {
        rd.type = ReductionType::Additive;
        rd.ap = 0;
    }
    return rd;
}

std::vector<BigInt> an_coefficients(const WeierstrassCurve& E, long long N) {
    if (N < 1) throw std::domain_error("an_coefficients: N must be >= 1");
    std::vector<BigInt> a(static_cast<size_t>(N) + 1, BigInt(0));
    a[1] = BigInt(1);
    // prime powers first
    for (long long p : nt::primes_up_to(N)) {
        ReductionData rd = reduce_and_count(E, p);
        BigInt ap(rd.ap);
        bool good = rd.type == ReductionType::Good;
        // a_{p^k}
        std::vector<BigInt> pw;
        pw.push_back(BigInt(1));
        pw.push_back(ap);
        for (long long pk = p * p; pk <= N; pk *= p) {
            if (good) {
                BigInt next = ap * pw[pw.size() - 1] - BigInt(p) * pw[pw.size() - 2];
                pw.push_back(next);
            } else {
                pw.push_back(ap * pw[pw.size() - 1]);
            }
        }
        long long pk = p;
        for (size_t k = 1; k < pw.size() && pk <= N; ++k, pk *= p)
            a[static_cast<size_t>(pk)] = pw[k];
    }
    // multiplicative fill
    for (long long n = 2; n <= N; ++n) {
        auto f = nt::factor(n);
        if (f.size() <= 1) continue;
        BigInt v(1);
        for (auto [p, e] : f) {
            long long pk = 1;
            for (int i = 0; i < e; ++i) pk *= p;
            v *= a[static_cast<size_t>(pk)];
        }
        a[static_cast<size_t>(n)] = v;
    }
    // |a_n| <= sigma_0(n) sqrt(n), exactly: a_n^2 <= sigma_0(n)^2 n
    for (long long n = 1; n <= N; ++n) {
        BigInt s0 = nt::sigma_k(n, 0);
        if (a[static_cast<size_t>(n)] * a[static_cast<size_t>(n)] > s0 * s0 * BigInt(n))
            throw std::logic_error("an_coefficients: Hasse-type bound violated at n = " +
                                   std::to_string(n));
    }
    return std::vector<BigInt>(a.begin() + 1, a.end());
}

// ------------------------------------------------------------------ torsion

std::string TorsionGroup::name() const {
    if (invariants.empty()) return "trivial";
    if (invariants.size() == 1) return "Z/" + std::to_string(invariants[0]) + "Z";
    return "Z/" + std::to_string(invariants[0]) + "Z x Z/" + std::to_string(invariants[1]) + "Z";
}

long long TorsionGroup::order() const {
    long long o = 1;
    for (long long v : invariants) o *= v;
    return o;
}

TorsionGroup torsion(const WeierstrassCurve& E) {
    BigInt A, B;
    short_model(E, A, B);
    WeierstrassCurve Es(BigRat(0), BigRat(0), BigRat(0), BigRat(A), BigRat(B));
    BigInt D = BigInt(4) * A * A * A + BigInt(27) * B * B;
    // candidate y values: 0 or y^2 | D
    std::vector<BigInt> ys{BigInt(0)};
    BigInt Dabs = D.abs();
    if (Dabs.is_zero()) throw std::logic_error("torsion: degenerate discriminant");
    // factor |D| (fits in int64 at desk scale after minimization; guard)
    if (!Dabs.fits_int64())
        throw std::runtime_error("torsion: discriminant too large for divisor enumeration");
    auto fac = nt::factor(Dabs.to_int64());
    std::vector<long long> square_divisors{1};
    for (auto [p, e] : fac) {
        size_t sz = square_divisors.size();
        long long pk = 1;
        for (int i = 1; 2 * i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) square_divisors.push_back(square_divisors[j] * pk);
        }
    }
    for (long long y : square_divisors)
        if (y != 0) { ys.push_back(BigInt(y)); ys.push_back(BigInt(-y)); }
    // solve x^3 + Ax + (B - y^2) = 0 over Z
    std::vector<CurvePoint> candidates;
    for (const BigInt& y : ys) {
        BigInt cst = B - y * y;
        std::vector<BigInt> xs;
        if (cst.is_zero()) {
            xs.push_back(BigInt(0));
            BigInt r;
            if ((-BigRat(A)).sign() >= 0 && BigInt::is_square((-BigRat(A)).num(), &r)) {
                xs.push_back(r);
                xs.push_back(-r);
            }
        } else {
            // integer roots of the monic cubic: locate real roots in double
            // precision, then verify candidates exactly
            std::vector<double> cd{cst.to_double(), A.to_double(), 0.0, 1.0};
            for (const auto& z : polyroots_double(cd)) {
                if (std::abs(z.imag()) > 0.5) continue;
                long long base = static_cast<long long>(std::llround(z.real()));
                for (long long off = -3; off <= 3; ++off) {
                    BigInt x(base + off);
                    if ((x * x * x + A * x + cst).is_zero()) {
                        bool dup = false;
                        for (const auto& prev : xs)
                            if (prev == x) dup = true;
                        if (!dup) xs.push_back(x);
                    }
                }
            }
        }
        for (const BigInt& x : xs)
            candidates.emplace_back(Es, BigRat(x), BigRat(y));
    }
    // keep candidates annihilated by some n <= 12
    std::vector<CurvePoint> torsion_pts{CurvePoint()};
    for (const CurvePoint& P : candidates) {
        // P is torsion iff one of P, 2P, ..., 12P hits O
        bool tors = false;
        CurvePoint R;
        for (int n = 1; n <= 12; ++n) {
            R = add(Es, R, P);
            if (R.is_infinity()) { tors = true; break; }
        }
        if (tors) {
            bool dup = false;
            for (const auto& T : torsion_pts)
                if (T == P) { dup = true; break; }
            if (!dup) torsion_pts.push_back(P);
        }
    }
    long long order = static_cast<long long>(torsion_pts.size());
    // group structure from element orders
    long long max_order = 1;
    for (const CurvePoint& P : torsion_pts) {
        if (P.is_infinity()) continue;
        CurvePoint R;
        for (int n = 1; n <= 12; ++n) {
            R = add(Es, R, P);
            if (R.is_infinity()) { max_order = std::max<long long>(max_order, n); break; }
        }
    }
    TorsionGroup tg;
    if (order > 1) {
        if (max_order == order) tg.invariants = {order};
        else tg.invariants = {2, order / 2};
    }
    // Mazur's list
    bool on_list = false;
    if (tg.invariants.empty()) on_list = true;
    else if (tg.invariants.size() == 1) {
        long long n = tg.invariants[0];
        on_list = (n >= 2 && n <= 10) || n == 12;
    } else {
        long long n = tg.invariants[1];
        on_list = tg.invariants[0] == 2 && (n == 2 || n == 4 || n == 6 || n == 8);
    }
    if (!on_list) throw std::logic_error("torsion: group not on Mazur's list");
    // reduction-injection cross-check at two good primes coprime to the order
    int checked = 0;
    for (long long p : nt::primes_up_to(200)) {
        if (p < 5 || checked >= 2) continue;
        ReductionData rd = reduce_and_count(E, p);
        if (rd.type != ReductionType::Good) continue;
        if (order % p == 0) continue;
        ++checked;
        if (rd.points % order != 0)
            throw std::logic_error("torsion: reduction-injection bound violated at p = " +
                                   std::to_string(p));
    }
    // map the points back to the original model:
    // X = 36 l^2 x + 3 b2(l-model), Y = 216 l^3 y + 108(a1 x + a3)(l-model)
    WeierstrassCurve Ei = E.integral_model();
    BigInt l(1);
    for (const BigRat* a : {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()})
        l = BigInt::lcm(l, a->den());
    BigRat lr(l);
    for (const CurvePoint& P : torsion_pts) {
        if (P.is_infinity()) { tg.points.push_back(P); continue; }
        // invert: x_int = (X - 3 b2)/36 on the integral model, then x = x_int / l^2
        BigRat xi = (P.x() - BigRat(3) * Ei.b2()) / BigRat(36);
        BigRat yi = (P.y() / BigRat(108) - Ei.a1() * xi - Ei.a3()) / BigRat(2);
        BigRat x = xi / (lr * lr);
        BigRat y = yi / (lr * lr * lr);
        tg.points.push_back(CurvePoint(E, x, y));
    }
    return tg;
}

// ------------------------------------------------------------------ heights

HeightValue naive_height(const WeierstrassCurve& E, const CurvePoint& P) {
    (void)E;
    HeightValue h;
    if (P.is_infinity()) return h;
    const BigRat& x = P.x();
    BigInt m = x.num().abs() > x.den() ? x.num().abs() : x.den();
    h.value = m.is_one() || m.is_zero() ? 0.0 : m.log_abs();
    h.error = 1e-13 * (1.0 + std::abs(h.value));
    return h;
}

namespace {

struct DupData {
    // homogeneous quartics U' = Phi(U,V), V' = Psi(U,V)
    BigInt phi0, phi2, phi3, phi4;  // U^4 + phi2 U^2V^2 + phi3 UV^3 + phi4 V^4 (phi0 = 1)
    BigInt psi1, psi2, psi3, psi4;  // psi1 U^3V + psi2 U^2V^2 + psi3 UV^3 + psi4 V^4
    BigInt gcd_bound;               // per-step gcd divides this
    double c1;                      // |h(2P) - 4h(P)| <= c1
};

DupData duplication_data(const WeierstrassCurve& Ein) {
    WeierstrassCurve E = Ein.integral_model();
    DupData d;
    d.phi0 = BigInt(1);
    d.phi2 = -E.b4().num();
    d.phi3 = BigInt(-2) * E.b6().num();
    d.phi4 = -E.b8().num();
    d.psi1 = BigInt(4);
    d.psi2 = E.b2().num();
    d.psi3 = BigInt(2) * E.b4().num();
    d.psi4 = E.b6().num();
    // phi(x) = x^4 - b4 x^2 - 2 b6 x - b8, psi(x) = 4x^3 + b2 x^2 + 2 b4 x + b6
    IntPoly phi(std::vector<BigInt>{d.phi4, d.phi3, d.phi2, BigInt(0), BigInt(1)});
    IntPoly psi(std::vector<BigInt>{d.psi4, d.psi3, d.psi2, d.psi1});
    // Bezout a phi + b psi = L over Z  (v-side)
    RatPoly s, t;
    RatPoly g = RatPoly::xgcd(phi.to_rat(), psi.to_rat(), s, t);
    if (!(g == RatPoly::constant(BigRat(1))))
        throw std::logic_error("duplication_data: phi, psi not coprime");
    BigInt L(1);
    for (const auto& c : s.coefs()) L = BigInt::lcm(L, c.den());
    for (const auto& c : t.coefs()) L = BigInt::lcm(L, c.den());
    auto norm1 = [](const RatPoly& p, const BigInt& scale) {
        BigInt acc(0);
        for (const auto& c : p.coefs()) acc += (c * BigRat(scale)).num().abs();
        return acc;
    };
    BigInt sum_v = norm1(s, L) + norm1(t, L);
    // u-side: reversed polynomials phi~(t) = t^4 phi(1/t), psi~ similarly
    IntPoly phir = phi.reversed();
    IntPoly psir(std::vector<BigInt>{BigInt(0), d.psi1, d.psi2, d.psi3, d.psi4});
    RatPoly s2, t2;
    RatPoly g2 = RatPoly::xgcd(phir.to_rat(), psir.to_rat(), s2, t2);
    if (!(g2 == RatPoly::constant(BigRat(1))))
        throw std::logic_error("duplication_data: reversed pair not coprime");
    BigInt L2(1);
    for (const auto& c : s2.coefs()) L2 = BigInt::lcm(L2, c.den());
    for (const auto& c : t2.coefs()) L2 = BigInt::lcm(L2, c.den());
    BigInt sum_u = norm1(s2, L2) + norm1(t2, L2);
    d.gcd_bound = BigInt::lcm(L, L2);
    // upper side: log of coefficient 1-norms
    BigInt up1 = BigInt(1) + d.phi2.abs() + d.phi3.abs() + d.phi4.abs();
    BigInt up2 = d.psi1.abs() + d.psi2.abs() + d.psi3.abs() + d.psi4.abs();
    double c_up = std::log(std::max(up1.to_double(), up2.to_double()));
    // lower side: max(|Phi|,|Psi|) >= (L / sum) M^4, gcd <= gcd_bound
    double lo_v = sum_v.log_abs() - L.log_abs();
    double lo_u = sum_u.log_abs() - L2.log_abs();
    double c_lo = std::max(lo_v, lo_u);  // -log c_lo
    double c_down = d.gcd_bound.log_abs() + c_lo;
    d.c1 = std::max(c_up, c_down) + 1e-9;
    return d;
}

}  // namespace

double tate_c1(const WeierstrassCurve& E) { return duplication_data(E).c1; }

HeightValue canonical_height(const WeierstrassCurve& E, const CurvePoint& P, double eps) {
    if (eps <= 0) throw std::domain_error("canonical_height: eps must be positive");
    HeightValue h;
    if (P.is_infinity()) {
        h.error = 0.0;
        return h;
    }
    DupData d = duplication_data(E);
    // x-coordinate on the integral model: x_int = l^2 x
    BigInt l(1);
    for (const BigRat* a : {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()})
        l = BigInt::lcm(l, a->den());
    BigRat xi = P.x() * BigRat(l * l);
    BigInt U = xi.num(), V = xi.den();
    // choose n with c1 / (3 * 4^n) < eps
    int n = 0;
    double tail = d.c1 / 3.0;
    while (tail >= eps * 0.999) {
        tail /= 4.0;
        ++n;
        if (n > 64) throw std::runtime_error("canonical_height: eps too small");
    }
    for (int step = 0; step < n; ++step) {
        BigInt U2 = U * U, V2 = V * V;
        BigInt U3 = U2 * U, V3 = V2 * V;
        BigInt U4 = U2 * U2, V4 = V2 * V2;
        BigInt nU = U4 + d.phi2 * U2 * V2 + d.phi3 * U * V3 + d.phi4 * V4;
        BigInt nV = d.psi1 * U3 * V + d.psi2 * U2 * V2 + d.psi3 * U * V3 + d.psi4 * V4;
        if (nV.is_zero()) {
            // reached the point at infinity: P is torsion, h^ = 0 exactly
            h.value = 0.0;
            h.error = 0.0;
            return h;
        }
        // strip the common factor, which divides gcd_bound
        BigInt g = BigInt::gcd(BigInt::gcd(nU, d.gcd_bound), BigInt::gcd(nV, d.gcd_bound));
        if (!g.is_one()) { nU /= g; nV /= g; }
        U = std::move(nU);
        V = std::move(nV);
    }
    BigInt m = U.abs() > V.abs() ? U.abs() : V.abs();
    double hn = (m.is_zero() || m.is_one()) ? 0.0 : m.log_abs();
    double scale = std::pow(4.0, -n);
    h.value = hn * scale;
    h.error = tail + 1e-12 * (1.0 + std::abs(h.value));
    return h;
}

HeightValue height_pairing(const WeierstrassCurve& E, const CurvePoint& P,
                           const CurvePoint& Q, double eps) {
    HeightValue hpq = canonical_height(E, add(E, P, Q), eps);
    HeightValue hp = canonical_height(E, P, eps);
    HeightValue hq = canonical_height(E, Q, eps);
    HeightValue r;
    r.value = (hpq.value - hp.value - hq.value) / 2.0;
    r.error = (hpq.error + hp.error + hq.error) / 2.0;
    return r;
}

HeightValue regulator(const WeierstrassCurve& E, const std::vector<CurvePoint>& pts,
                      double eps) {
    size_t r = pts.size();
    HeightValue out;
    if (r == 0) {
        out.value = 1.0;
        return out;
    }
    std::vector<std::vector<HeightValue>> g(r, std::vector<HeightValue>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            HeightValue v = i == j ? canonical_height(E, pts[i], eps)
                                   : height_pairing(E, pts[i], pts[j], eps);
            g[i][j] = v;
            g[j][i] = v;
        }
    // determinant with crude interval propagation (r is tiny)
    std::vector<size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    double det = 0.0, err = 0.0;
    double maxabs = 0.0, maxerr = 0.0;
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            maxabs = std::max(maxabs, std::abs(g[i][j].value));
            maxerr = std::max(maxerr, g[i][j].error);
        }
    std::function<void(std::vector<size_t>&, size_t, double, int)> perm =
        [&](std::vector<size_t>& per, size_t k, double prod, int sign) {
            if (k == r) {
                det += sign * prod;
                return;
            }
            for (size_t i = k; i < r; ++i) {
                std::swap(per[k], per[i]);
                perm(per, k + 1, prod * g[k][per[k]].value, i == k ? sign : -sign);
                std::swap(per[k], per[i]);
            }
        };
    perm(idx, 0, 1.0, 1);
    // |d det| <= r * r! * (maxabs + maxerr)^(r-1) * maxerr
    double fact = 1.0;
    for (size_t i = 2; i <= r; ++i) fact *= static_cast<double>(i);
    err = static_cast<double>(r) * fact * std::pow(maxabs + maxerr, static_cast<double>(r - 1)) *
          maxerr;
    out.value = det;
    out.error = err;
    return out;
}

// -------------------------------------------------------------- root number

RootNumberResult root_number(const WeierstrassCurve& E) {
    RootNumberResult res;
    res.local_factors.push_back({0, -1, "infinite place"});
    int sign = -1;
    // bad primes: p >= 5 from the short model discriminant; 2 and 3 from the
    // given (assumed minimal there) model
    WeierstrassCurve Ei = E.integral_model();
    BigInt A, B;
    short_model(E, A, B);
    std::set<long long> bad;
    BigInt disc_num = Ei.disc().num().abs();
    if (!disc_num.fits_int64())
        throw std::runtime_error("root_number: discriminant too large to factor");
    for (auto [p, e] : nt::factor(disc_num.to_int64())) bad.insert(p);
    for (long long p : bad) {
        ReductionData rd = reduce_and_count(E, p);
        switch (rd.type) {
            case ReductionType::Good:
                break;  // p divided the non-minimal discriminant only
            case ReductionType::MultiplicativeSplit:
                res.local_factors.push_back({p, -1, "multiplicative split"});
                sign *= -1;
                break;
            case ReductionType::MultiplicativeNonSplit:
                res.local_factors.push_back({p, +1, "multiplicative non-split"});
                break;
            case ReductionType::Additive: {
                bool pot_mult = !E.j().is_zero() && vp_rat(E.j(), p) < 0;
                if (pot_mult && p > 2) {
                    int s = nt::legendre_symbol(-1, p);
                    res.local_factors.push_back({p, s, "additive, potentially multiplicative"});
                    sign *= s;
                } else if (!pot_mult && p > 3) {
                    long long ordd = rd.vp_disc_min;
                    long long e = 12 / std::gcd(ordd, 12LL);
                    int s;
                    if (e == 2 || e == 6) s = nt::legendre_symbol(-1, p);
                    else if (e == 4) s = nt::legendre_symbol(2, p);
                    else if (e == 3) s = nt::legendre_symbol(3, p);
                    else
                        throw std::logic_error("root_number: unexpected e = " + std::to_string(e));
                    res.local_factors.push_back(
                        {p, s, "additive, potentially good, e = " + std::to_string(e)});
                    sign *= s;
                } else {
                    res.determined = false;
                    res.undetermined_places.push_back(p);
                    res.local_factors.push_back({p, 0, "additive at p <= 3: undetermined"});
                }
                break;
            }
        }
    }
    res.sign = sign;
    return res;
}

ConductorResult conductor_away_23(const WeierstrassCurve& E) {
    ConductorResult c;
    c.odd_part_away_23 = BigInt(1);
    WeierstrassCurve Ei = E.integral_model();
    BigInt disc_num = Ei.disc().num().abs();
    if (!disc_num.fits_int64())
        throw std::runtime_error("conductor_away_23: discriminant too large to factor");
    for (auto [p, e] : nt::factor(disc_num.to_int64())) {
        ReductionData rd = reduce_and_count(E, p);
        if (rd.type == ReductionType::Good) continue;
        bool multiplicative = rd.type == ReductionType::MultiplicativeSplit ||
                              rd.type == ReductionType::MultiplicativeNonSplit;
        if (p >= 5) {
            int n = multiplicative ? 1 : 2;
            c.odd_part_away_23 *= BigInt::pow(BigInt(p), static_cast<unsigned>(n));
        } else if (p == 2) {
            if (multiplicative) { c.exp2_low = c.exp2_high = 1; }
            else { c.exp2_low = 2; c.exp2_high = 8; }
        } else {
            if (multiplicative) { c.exp3_low = c.exp3_high = 1; }
            else { c.exp3_low = 2; c.exp3_high = 5; }
        }
    }
    return c;
}

}  // namespace ec
}  // namespace arithlab
