#include "arithlab/quat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "arithlab/numtheory.hpp"
#include "arithlab/poly.hpp"
#include "arithlab/quadform.hpp"
#include "arithlab/rootfind.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arithlab {
namespace quat {

// ------------------------------------------------------------- Quaternion

Quaternion Quaternion::operator+(const Quaternion& o) const {
    return Quaternion(alg_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
    return Quaternion(alg_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]});
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    // basis products:  i^2 = a, j^2 = b, k^2 = -ab,
    // ij = k, ji = -k, ik = a j, ki = -a j, jk = -b i, kj = b i
    const BigRat& a = alg_.a;
    const BigRat& b = alg_.b;
    const BigRat &x0 = c_[0], &x1 = c_[1], &x2 = c_[2], &x3 = c_[3];
    const BigRat &y0 = o.c_[0], &y1 = o.c_[1], &y2 = o.c_[2], &y3 = o.c_[3];
    BigRat r0 = x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3;
    BigRat r1 = x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2;
    BigRat r2 = x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1;
    BigRat r3 = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
    return Quaternion(alg_, {r0, r1, r2, r3});
}

Quaternion Quaternion::scaled(const BigRat& v) const {
    return Quaternion(alg_, {c_[0] * v, c_[1] * v, c_[2] * v, c_[3] * v});
}

Quaternion Quaternion::conj() const {
    return Quaternion(alg_, {c_[0], -c_[1], -c_[2], -c_[3]});
}

BigRat Quaternion::trace() const { return c_[0] + c_[0]; }

BigRat Quaternion::norm() const {
    return c_[0] * c_[0] - alg_.a * c_[1] * c_[1] - alg_.b * c_[2] * c_[2] +
           alg_.a * alg_.b * c_[3] * c_[3];
}

bool Quaternion::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Quaternion::operator==(const Quaternion& o) const { return c_ == o.c_; }

std::string Quaternion::to_string() const {
    std::ostringstream os;
    os << c_[0].to_string() << " + " << c_[1].to_string() << "*i + "
       << c_[2].to_string() << "*j + " << c_[3].to_string() << "*k";
    return os.str();
}

// ------------------------------------------------------------ QuatLattice

static BigRat rat_gcd(const std::vector<BigRat>& vals) {
    BigInt l(1);
    for (const auto& v : vals) l = BigInt::lcm(l, v.den());
    BigInt g(0);
    for (const auto& v : vals) g = BigInt::gcd(g, v.num() * (l / v.den()));
    return BigRat(g, l);
}

QuatLattice QuatLattice::span(const QuatAlgebra& alg, const std::vector<Quaternion>& gens) {
    BigInt den(1);
    for (const auto& q : gens)
        for (size_t i = 0; i < 4; ++i) den = BigInt::lcm(den, q[i].den());
    std::vector<std::vector<BigInt>> rows;
    for (const auto& q : gens) {
        std::vector<BigInt> row(4);
        for (size_t i = 0; i < 4; ++i) row[i] = q[i].num() * (den / q[i].den());
        rows.push_back(std::move(row));
    }
    auto h = hnf_rows(std::move(rows));
    if (h.size() != 4) throw std::domain_error("QuatLattice: generators do not have full rank");
    QuatLattice L;
    L.alg_ = alg;
    L.den_ = den;
    L.b_ = std::move(h);
    return L;
}

Quaternion QuatLattice::basis(size_t i) const {
    std::array<BigRat, 4> c;
    for (size_t j = 0; j < 4; ++j) c[j] = BigRat(b_[i][j], den_);
    return Quaternion(alg_, c);
}

std::vector<Quaternion> QuatLattice::basis_all() const {
    return {basis(0), basis(1), basis(2), basis(3)};
}

const RatMatrix& QuatLattice::basis_inverse() const {
    if (!inv_cache_) {
        RatMatrix m(4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) m.at(i, j) = BigRat(b_[i][j], den_);
        inv_cache_ = m.inverse();
    }
    return *inv_cache_;
}

std::vector<BigRat> QuatLattice::coordinates(const Quaternion& q) const {
    // row vector v = coords of q; solve v = c * B  ->  c = v * B^{-1}
    const RatMatrix& inv = basis_inverse();
    std::vector<BigRat> c(4, BigRat(0));
    for (size_t j = 0; j < 4; ++j)
        for (size_t i = 0; i < 4; ++i)
            c[j] += q[i] * inv.at(i, j);
    return c;
}

bool QuatLattice::contains(const Quaternion& q) const {
    for (const auto& v : coordinates(q))
        if (!v.is_integer()) return false;
    return true;
}

bool QuatLattice::contains_lattice(const QuatLattice& o) const {
    for (size_t i = 0; i < 4; ++i)
        if (!contains(o.basis(i))) return false;
    return true;
}

bool QuatLattice::operator==(const QuatLattice& o) const {
    return contains_lattice(o) && o.contains_lattice(*this);
}

QuatLattice QuatLattice::product(const QuatLattice& o) const {
    std::vector<Quaternion> gens;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) gens.push_back(basis(i) * o.basis(j));
    return span(alg_, gens);
}

QuatLattice QuatLattice::conjugated() const {
    std::vector<Quaternion> gens;
    for (size_t i = 0; i < 4; ++i) gens.push_back(basis(i).conj());
    return span(alg_, gens);
}

QuatLattice QuatLattice::scaled(const BigRat& v) const {
    std::vector<Quaternion> gens;
    for (size_t i = 0; i < 4; ++i) gens.push_back(basis(i).scaled(v));
    return span(alg_, gens);
}

QuatLattice QuatLattice::sum(const QuatLattice& o) const {
    std::vector<Quaternion> gens = basis_all();
    for (const auto& q : o.basis_all()) gens.push_back(q);
    return span(alg_, gens);
}

RatMatrix QuatLattice::gram() const {
    RatMatrix g(4, 4);
    auto bs = basis_all();
    for (size_t r = 0; r < 4; ++r)
        for (size_t s = r; s < 4; ++s) {
            BigRat v = (bs[r] * bs[s].conj()).trace();
            g.at(r, s) = v;
            g.at(s, r) = v;
        }
    return g;
}

BigRat QuatLattice::norm() const {
    auto bs = basis_all();
    std::vector<BigRat> vals;
    for (size_t r = 0; r < 4; ++r) vals.push_back(bs[r].norm());
    for (size_t r = 0; r < 4; ++r)
        for (size_t s = r + 1; s < 4; ++s)
            vals.push_back((bs[r] * bs[s].conj()).trace());
    return rat_gcd(vals);
}

BigRat QuatLattice::gram_det() const { return gram().det(); }

BigRat QuatLattice::index_of(const QuatLattice& sub) const {
    if (!contains_lattice(sub)) throw std::domain_error("index_of: not a sublattice");
    RatMatrix a(4, 4), b(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            a.at(i, j) = BigRat(b_[i][j], den_);
            b.at(i, j) = BigRat(sub.b_[i][j], sub.den_);
        }
    return (b.det() / a.det()).abs();
}

// -------------------------------------------------------------- QuatOrder

QuatOrder::QuatOrder(const QuatAlgebra& alg, const std::vector<Quaternion>& basis) {
    lat_ = QuatLattice::span(alg, basis);
    std::array<BigRat, 4> one{BigRat(1), BigRat(0), BigRat(0), BigRat(0)};
    if (!lat_.contains(Quaternion(alg, one)))
        throw std::domain_error("QuatOrder: lattice does not contain 1");
    auto bs = lat_.basis_all();
    for (size_t i = 0; i < 4; ++i) {
        if (!bs[i].trace().is_integer() || !bs[i].norm().is_integer())
            throw std::domain_error("QuatOrder: basis element not integral");
        for (size_t j = 0; j < 4; ++j)
            if (!lat_.contains(bs[i] * bs[j]))
                throw std::domain_error("QuatOrder: not closed under multiplication");
    }
    BigRat det = lat_.gram_det();
    if (!det.is_integer() || det.sign() <= 0)
        throw std::domain_error("QuatOrder: trace-form determinant not a positive integer");
    BigInt root;
    if (!BigInt::is_square(det.num(), &root))
        throw std::domain_error("QuatOrder: determinant is not a perfect square");
    disc_ = root;
}

std::set<long long> ramification(const QuatAlgebra& alg) {
    if (alg.a.is_zero() || alg.b.is_zero())
        throw std::domain_error("ramification: parameters must be nonzero");
    // square class representative of a rational as a squarefree int64
    auto squarefree = [](const BigRat& r) -> long long {
        BigInt m = r.num() * r.den();
        long long v = m.to_int64();  // desk scale: parameters are small
        long long sign = v < 0 ? -1 : 1;
        v = std::abs(v);
        long long out = 1;
        for (auto [p, e] : nt::factor(v))
            if (e % 2 == 1) out *= p;
        return sign * out;
    };
    long long a = squarefree(alg.a);
    long long b = squarefree(alg.b);
    auto legendre_pm = [](long long u, long long p) { return nt::legendre_symbol(u, p); };
    auto hilbert_odd = [&](long long a0, long long b0, long long p) -> int {
        int alpha = 0, beta = 0;
        long long u = a0, w = b0;
        while (u % p == 0) { u /= p; ++alpha; }
        while (w % p == 0) { w /= p; ++beta; }
        int s = 1;
        if ((alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1) s = -s;
        if (beta % 2 == 1) s *= legendre_pm(u, p);
        if (alpha % 2 == 1) s *= legendre_pm(w, p);
        return s;
    };
    auto hilbert_2 = [](long long a0, long long b0) -> int {
        int alpha = 0, beta = 0;
        long long u = a0, w = b0;
        while (u % 2 == 0) { u /= 2; ++alpha; }
        while (w % 2 == 0) { w /= 2; ++beta; }
        auto eps = [](long long x) { return ((x - 1) / 2) % 2 != 0; };   // x odd
        auto omega = [](long long x) { return ((x * x - 1) / 8) % 2 != 0; };
        bool exp = (eps(u) && eps(w));
        if (alpha % 2 == 1 && omega(w)) exp = !exp;
        if (beta % 2 == 1 && omega(u)) exp = !exp;
        return exp ? -1 : 1;
    };
    std::set<long long> ram;
    if (a < 0 && b < 0) ram.insert(0);  // infinite place
    std::set<long long> candidates{2};
    for (auto [p, e] : nt::factor(std::abs(a))) candidates.insert(p);
    for (auto [p, e] : nt::factor(std::abs(b))) candidates.insert(p);
    for (long long p : candidates) {
        int s = p == 2 ? hilbert_2(a, b) : hilbert_odd(a, b, p);
        if (s == -1) ram.insert(p);
    }
    if (ram.size() % 2 != 0)
        throw std::logic_error("ramification: odd cardinality (internal error)");
    return ram;
}

static Quaternion make(const QuatAlgebra& alg, long long c0, long long c1, long long c2,
                       long long c3, long long den = 1) {
    return Quaternion(alg, {BigRat(BigInt(c0), BigInt(den)), BigRat(BigInt(c1), BigInt(den)),
                            BigRat(BigInt(c2), BigInt(den)), BigRat(BigInt(c3), BigInt(den))});
}

QuatOrder standard_maximal_order(long long N) {
    if (!nt::is_prime(N) || N % 4 != 3)
        throw std::domain_error("standard_maximal_order: N must be a prime = 3 mod 4");
    QuatAlgebra alg{BigRat(-1), BigRat(-N)};
    std::vector<Quaternion> basis{
        make(alg, 1, 0, 0, 0),
        make(alg, 0, 1, 0, 0),
        make(alg, 1, 0, 1, 0, 2),   // (1+j)/2
        make(alg, 0, 1, 0, 1, 2)};  // (i+k)/2
    QuatOrder R(alg, basis);
    if (!(R.reduced_discriminant() == BigInt(N)))
        throw std::logic_error("standard_maximal_order: unexpected discriminant");
    return R;
}

QuatOrder lipschitz_order() {
    QuatAlgebra alg{BigRat(-1), BigRat(-1)};
    return QuatOrder(alg, {make(alg, 1, 0, 0, 0), make(alg, 0, 1, 0, 0),
                           make(alg, 0, 0, 1, 0), make(alg, 0, 0, 0, 1)});
}

// saturate an order to a maximal one: adjoin integral (1/r)-elements while the
// discriminant exceeds the target
static QuatOrder saturate_order(const QuatAlgebra& alg, std::vector<Quaternion> basis,
                                const BigInt& target_disc) {
    QuatOrder cur(alg, basis);
    while (!(cur.reduced_discriminant() == target_disc)) {
        BigInt excess = cur.reduced_discriminant() / target_disc;
        if (excess * target_disc != cur.reduced_discriminant() || excess.is_one())
            throw std::logic_error("saturate_order: discriminant does not refine to target");
        long long r = nt::factor(excess.to_int64())[0].first;
        auto bs = cur.lattice().basis_all();
        bool improved = false;
        // candidates (sum v_i b_i)/r over nonzero classes v in (L/rL)
        long long total = r * r * r * r;
        for (long long idx = 1; idx < total && !improved; ++idx) {
            long long t = idx;
            std::array<long long, 4> v{};
            for (int i = 0; i < 4; ++i) { v[static_cast<size_t>(i)] = t % r; t /= r; }
            Quaternion e = make(alg, 0, 0, 0, 0);
            for (int i = 0; i < 4; ++i)
                e = e + bs[static_cast<size_t>(i)].scaled(BigRat(v[static_cast<size_t>(i)]));
            e = e.scaled(BigRat(BigInt(1), BigInt(r)));
            if (!e.trace().is_integer() || !e.norm().is_integer()) continue;
            if (cur.lattice().contains(e)) continue;
            std::vector<Quaternion> gens = cur.lattice().basis_all();
            gens.push_back(e);
            QuatLattice bigger = QuatLattice::span(alg, gens);
            // closure test
            bool closed = true;
            auto nb = bigger.basis_all();
            for (size_t i = 0; i < 4 && closed; ++i)
                for (size_t j = 0; j < 4 && closed; ++j)
                    if (!bigger.contains(nb[i] * nb[j])) closed = false;
            if (!closed) continue;
            cur = QuatOrder(alg, bigger.basis_all());
            improved = true;
        }
        if (!improved)
            throw std::logic_error("saturate_order: no integral extension found");
    }
    return cur;
}

QuatOrder maximal_order_for_prime(long long N) {
    if (!nt::is_prime(N)) throw std::domain_error("maximal_order_for_prime: N must be prime");
    if (N == 2) {
        QuatAlgebra alg{BigRat(-1), BigRat(-1)};
        QuatOrder R(alg, {make(alg, 1, 0, 0, 0), make(alg, 0, 1, 0, 0), make(alg, 0, 0, 1, 0),
                          make(alg, 1, 1, 1, 1, 2)});
        return R;
    }
    if (N % 4 == 3) return standard_maximal_order(N);
    QuatAlgebra alg;
    if (N % 8 == 5) {
        alg = QuatAlgebra{BigRat(-2), BigRat(-N)};
    } else {
        // N = 1 mod 8: find prime q = 3 mod 4 with (-q | N) = -1
        long long q = 3;
        while (true) {
            if (q % 4 == 3 && nt::is_prime(q)) {
                long long lg = nt::legendre_symbol((-q) % N, N);
                if (lg == -1) break;
            }
            q += 2;
        }
        alg = QuatAlgebra{BigRat(-q), BigRat(-N)};
    }
    auto ram = ramification(alg);
    if (!(ram == std::set<long long>{0, N}))
        throw std::logic_error("maximal_order_for_prime: wrong ramification");
    std::vector<Quaternion> basis{make(alg, 1, 0, 0, 0), make(alg, 0, 1, 0, 0),
                                  make(alg, 0, 0, 1, 0), make(alg, 0, 0, 0, 1)};
    return saturate_order(alg, basis, BigInt(N));
}

// -------------------------------------------------------------- RightIdeal

RightIdeal::RightIdeal(QuatLattice lat, const QuatOrder& order) : lat_(std::move(lat)) {
    auto bs = lat_.basis_all();
    auto rs = order.lattice().basis_all();
    for (const auto& b : bs)
        for (const auto& r : rs)
            if (!lat_.contains(b * r))
                throw std::domain_error("RightIdeal: lattice is not right-stable");
    norm_ = lat_.norm();
}

bool ideals_equivalent(const QuatLattice& I, const BigRat& nI,
                       const QuatLattice& J, const BigRat& nJ) {
    QuatLattice L = I.product(J.conjugated());
    BigRat target = nI * nJ;
    QuadFormEnumerator en(L.gram());
    return en.find_vector_with_value(target);
}

long long ideal_stabilizer_order(const QuatLattice& I, const BigRat& nI) {
    QuatLattice left_order = I.product(I.conjugated()).scaled(nI.inverse());
    QuadFormEnumerator en(left_order.gram());
    auto counts = en.counts_by_value_serial(BigRat(1), 1);
    if (counts[1] % 2 != 0) throw std::logic_error("ideal_stabilizer_order: odd unit count");
    return counts[1] / 2;
}

// action of the order basis on I/nI: right multiplication matrices
static std::array<std::array<std::array<long long, 4>, 4>, 4> action_matrices(
    const QuatLattice& I, const QuatOrder& R, long long n) {
    std::array<std::array<std::array<long long, 4>, 4>, 4> A{};
    auto bs = I.basis_all();
    auto rs = R.lattice().basis_all();
    for (size_t r = 0; r < 4; ++r)
        for (size_t i = 0; i < 4; ++i) {
            auto c = I.coordinates(bs[i] * rs[r]);
            for (size_t j = 0; j < 4; ++j) {
                if (!c[j].is_integer())
                    throw std::logic_error("action_matrices: ideal not right-stable");
                A[r][i][j] = c[j].num().mod_euclid(BigInt(n)).to_int64();
            }
        }
    return A;
}

std::vector<QuatLattice> hecke_neighbors(const QuatLattice& I, const BigRat& nI,
                                         const QuatOrder& R, long long n) {
    if (n < 1) throw std::domain_error("hecke_neighbors: n must be >= 1");
    BigInt disc = R.reduced_discriminant();
    if (BigInt::gcd(BigInt(n), disc) != BigInt(1))
        throw std::domain_error("hecke_neighbors: n must be coprime to the discriminant");
    if (n == 1) return {I};
    std::vector<QuatLattice> out;
    BigRat target_norm = BigRat(n) * nI;
    auto push_checked = [&](const QuatLattice& cand) {
        // right stability and the norm condition
        auto bs = cand.basis_all();
        auto rs = R.lattice().basis_all();
        for (const auto& b : bs)
            for (const auto& r : rs)
                if (!cand.contains(b * r)) return;
        if (!(cand.norm() == target_norm)) return;
        out.push_back(cand);
    };
    auto bs = I.basis_all();
    if (nt::is_prime(n)) {
        long long p = n;
        auto A = action_matrices(I, R, p);
        std::set<std::array<long long, 8>> seen;
        // canonical nonzero v: first nonzero coordinate equals 1
        for (int lead = 0; lead < 4; ++lead) {
            long long free_count = 1;
            for (int i = lead + 1; i < 4; ++i) free_count *= p;
            for (long long idx = 0; idx < free_count; ++idx) {
                std::array<long long, 4> v{0, 0, 0, 0};
                v[static_cast<size_t>(lead)] = 1;
                long long t = idx;
                for (int i = lead + 1; i < 4; ++i) { v[static_cast<size_t>(i)] = t % p; t /= p; }
                // row space of v*A_r
                std::vector<std::array<long long, 4>> rows;
                for (size_t r = 0; r < 4; ++r) {
                    std::array<long long, 4> w{0, 0, 0, 0};
                    for (size_t i = 0; i < 4; ++i) {
                        if (!v[i]) continue;
                        for (size_t j = 0; j < 4; ++j)
                            w[j] = (w[j] + v[i] * A[r][i][j]) % p;
                    }
                    rows.push_back(w);
                }
                // rref over F_p
                size_t rank = 0;
                for (size_t col = 0; col < 4 && rank < rows.size(); ++col) {
                    size_t piv = rank;
                    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
                    if (piv == rows.size()) continue;
                    std::swap(rows[rank], rows[piv]);
                    long long inv = nt::inv_mod(rows[rank][col], p);
                    for (size_t j2 = 0; j2 < 4; ++j2)
                        rows[rank][j2] = rows[rank][j2] * inv % p;
                    for (size_t i2 = 0; i2 < rows.size(); ++i2) {
                        if (i2 == rank || rows[i2][col] == 0) continue;
                        long long f = rows[i2][col];
                        for (size_t j2 = 0; j2 < 4; ++j2)
                            rows[i2][j2] = ((rows[i2][j2] - f * rows[rank][j2]) % p + p) % p;
                    }
                    ++rank;
                }
                if (rank != 2) continue;
                std::array<long long, 8> sig{rows[0][0], rows[0][1], rows[0][2], rows[0][3],
                                             rows[1][0], rows[1][1], rows[1][2], rows[1][3]};
                if (!seen.insert(sig).second) continue;
                // lift: span(row0, row1 as integer combinations of basis, p*basis)
                std::vector<Quaternion> gens;
                for (int rr = 0; rr < 2; ++rr) {
                    Quaternion g = make(I.algebra(), 0, 0, 0, 0);
                    for (size_t i = 0; i < 4; ++i)
                        g = g + bs[i].scaled(BigRat(rows[static_cast<size_t>(rr)][i]));
                    gens.push_back(g);
                }
                for (size_t i = 0; i < 4; ++i) gens.push_back(bs[i].scaled(BigRat(p)));
                push_checked(QuatLattice::span(I.algebra(), gens));
            }
        }
        if (static_cast<long long>(out.size()) != p + 1)
            throw std::logic_error("hecke_neighbors: expected p+1 neighbors, found " +
                                   std::to_string(out.size()));
        return out;
    }
    // composite n: Hermite normal forms H (rows) with diag d_i | n, prod = n^2,
    // n H^{-1} integral; candidate basis rows = H * (basis of I)
    std::vector<long long> divs = nt::divisors(n);
    BigInt n2 = BigInt(n) * BigInt(n);
    // budget estimate
    long long est = 0;
    for (long long d0 : divs)
        for (long long d1 : divs)
            for (long long d2 : divs)
                for (long long d3 : divs) {
                    if (BigInt(d0) * BigInt(d1) * BigInt(d2) * BigInt(d3) != n2) continue;
                    est += d1 * d2 * d2 * d3 * d3 * d3;
                }
    if (est > 5000000)
        throw std::runtime_error("hecke_neighbors: HNF budget exceeded (" +
                                 std::to_string(est) + " candidates; bound 5000000)");
    for (long long d0 : divs)
        for (long long d1 : divs)
            for (long long d2 : divs)
                for (long long d3 : divs) {
                    if (BigInt(d0) * BigInt(d1) * BigInt(d2) * BigInt(d3) != n2) continue;
                    std::array<long long, 4> diag{d0, d1, d2, d3};
                    // off-diagonal entries h[i][j], i < j, in [0, diag[j])
                    std::array<std::array<long long, 4>, 4> H{};
                    std::function<void(int, int)> rec = [&](int i, int j) {
                        if (i == 3) {
                            for (int r = 0; r < 4; ++r) H[static_cast<size_t>(r)][static_cast<size_t>(r)] = diag[static_cast<size_t>(r)];
                            // containment: n * H^{-1} integral; equivalently n e_r in rowspan.
                            // For triangular H solve by back substitution over Q.
                            RatMatrix hm(4, 4);
                            for (size_t a2 = 0; a2 < 4; ++a2)
                                for (size_t b2 = 0; b2 < 4; ++b2) hm.at(a2, b2) = BigRat(H[a2][b2]);
                            RatMatrix inv = hm.inverse();
                            for (size_t a2 = 0; a2 < 4; ++a2)
                                for (size_t b2 = 0; b2 < 4; ++b2)
                                    if (!(inv.at(a2, b2) * BigRat(n)).is_integer()) return;
                            std::vector<Quaternion> gens;
                            for (size_t r = 0; r < 4; ++r) {
                                Quaternion g = make(I.algebra(), 0, 0, 0, 0);
                                for (size_t c2 = 0; c2 < 4; ++c2)
                                    if (H[r][c2] != 0) g = g + bs[c2].scaled(BigRat(H[r][c2]));
                                gens.push_back(g);
                            }
                            push_checked(QuatLattice::span(I.algebra(), gens));
                            return;
                        }
                        int ni = i, nj = j + 1;
                        if (nj == 4) { ni = i + 1; nj = ni + 1; }
                        for (long long v = 0; v < diag[static_cast<size_t>(j)]; ++v) {
                            H[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                            rec(ni, nj);
                        }
                    };
                    rec(0, 1);
                }
    // sanity: total neighbor count is sigma(n) for n coprime to the discriminant
    if (BigInt(static_cast<long long>(out.size())) != nt::sigma_k(n, 1))
        throw std::logic_error("hecke_neighbors: expected sigma(n) neighbors, found " +
                               std::to_string(out.size()));
    return out;
}

BigRat ClassSet::mass() const {
    BigRat m(0);
    for (long long wi : w) m += BigRat(BigInt(1), BigInt(wi));
    return m;
}

long long class_number_formula(long long N) {
    long long base = N / 12;
    long long r = N % 12;
    if (r == 1) return base;
    if (r == 11) return base + 2;
    return base + 1;
}

ClassSet class_set(const QuatOrder& R) {
    BigInt discB = R.reduced_discriminant();
    long long N = discB.to_int64();
    if (!nt::is_prime(N)) throw std::domain_error("class_set: discriminant must be prime");
    if (N > 1000) throw std::runtime_error("class_set: discriminant budget 1000 exceeded");
    long long p = (N == 2) ? 3 : 2;
    ClassSet cs;
    cs.order = std::make_shared<const QuatOrder>(R);
    cs.reps.push_back(R.lattice());
    cs.norms.push_back(R.lattice().norm());
    cs.w.push_back(ideal_stabilizer_order(cs.reps[0], cs.norms[0]));
    size_t frontier = 0;
    while (frontier < cs.reps.size()) {
        QuatLattice I = cs.reps[frontier];
        BigRat nI = cs.norms[frontier];
        ++frontier;
        for (const auto& J : hecke_neighbors(I, nI, R, p)) {
            BigRat nJ = BigRat(p) * nI;
            bool known = false;
            for (size_t k = 0; k < cs.reps.size(); ++k) {
                if (ideals_equivalent(J, nJ, cs.reps[k], cs.norms[k])) { known = true; break; }
            }
            if (!known) {
                cs.reps.push_back(J);
                cs.norms.push_back(nJ);
                cs.w.push_back(ideal_stabilizer_order(J, nJ));
            }
        }
    }
    // Eichler mass for prime discriminant, in the stabilizer-mod-{+-1} convention
    if (!(cs.mass() == BigRat(BigInt(N - 1), BigInt(12))))
        throw std::logic_error("class_set: mass check failed");
    if (cs.h() != class_number_formula(N))
        throw std::logic_error("class_set: class number does not match the formula");
    return cs;
}

std::vector<std::vector<BigInt>> brandt_matrix(const ClassSet& cs, long long n) {
    size_t h = cs.reps.size();
    std::vector<std::vector<BigInt>> M(h, std::vector<BigInt>(h, BigInt(0)));
    for (size_t i = 0; i < h; ++i) {
        auto nb = hecke_neighbors(cs.reps[i], cs.norms[i], *cs.order, n);
        for (const auto& J : nb) {
            BigRat nJ = BigRat(n) * cs.norms[i];
            bool placed = false;
            for (size_t j = 0; j < h; ++j) {
                if (ideals_equivalent(J, nJ, cs.reps[j], cs.norms[j])) {
                    M[j][i] += BigInt(1);
                    placed = true;
                    break;
                }
            }
            if (!placed) throw std::logic_error("brandt_matrix: neighbor outside the class set");
        }
    }
    return M;
}

// ---------------------------------------------------------------- eigenbasis

namespace {

RatMatrix to_ratmatrix(const std::vector<std::vector<BigInt>>& m) {
    RatMatrix r(m.size(), m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) r.at(i, j) = BigRat(m[i][j]);
    return r;
}

// characteristic polynomial by Faddeev-LeVerrier, exact
RatPoly char_poly(const RatMatrix& m) {
    size_t n = m.rows();
    RatMatrix Mk = m;
    std::vector<BigRat> c(n + 1, BigRat(0));
    c[n] = BigRat(1);
    RatMatrix I = RatMatrix::identity(n);
    RatMatrix Ak = m;
    for (size_t k = 1; k <= n; ++k) {
        BigRat tr(0);
        for (size_t i = 0; i < n; ++i) tr += Ak.at(i, i);
        BigRat ck = tr / BigRat(static_cast<long long>(k));
        c[n - k] = -ck;
        if (k < n) Ak = m * (Ak - I.scaled(ck));
    }
    return RatPoly(std::move(c));
}

struct Block {
    std::vector<std::vector<BigRat>> basis;  // vectors in the ambient space
};

// restriction matrix of op to the block: op * B = B * M
RatMatrix restrict_to(const RatMatrix& op, const Block& blk) {
    size_t dim = blk.basis.size(), n = blk.basis[0].size();
    RatMatrix B(n, dim);
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < n; ++i) B.at(i, j) = blk.basis[j][i];
    RatMatrix opB = op * B;
    RatMatrix Bt = B.transpose();
    RatMatrix G = Bt * B;
    RatMatrix rhs = Bt * opB;
    // M = G^{-1} rhs
    return G.inverse() * rhs;
}

}  // namespace

std::vector<EigenData> eigenbasis(const ClassSet& cs, const std::vector<long long>& primes) {
    size_t h = static_cast<size_t>(cs.h());
    std::vector<RatMatrix> ops;
    for (long long p : primes) ops.push_back(to_ratmatrix(brandt_matrix(cs, p)));
    // commutativity assertion
    for (size_t a = 0; a < ops.size(); ++a)
        for (size_t b = a + 1; b < ops.size(); ++b)
            if (!(ops[a] * ops[b] == ops[b] * ops[a]))
                throw std::logic_error("eigenbasis: Brandt matrices do not commute");
    std::vector<Block> blocks;
    {
        Block full;
        for (size_t i = 0; i < h; ++i) {
            std::vector<BigRat> e(h, BigRat(0));
            e[i] = BigRat(1);
            full.basis.push_back(std::move(e));
        }
        blocks.push_back(std::move(full));
    }
    for (const RatMatrix& op : ops) {
        std::vector<Block> next;
        for (const Block& blk : blocks) {
            if (blk.basis.size() == 1) { next.push_back(blk); continue; }
            RatMatrix M = restrict_to(op, blk);
            RatPoly cp = char_poly(M);
            IntPoly cpz = IntPoly::from_rat_primitive(cp);
            auto fac = factor_int_poly(cpz);
            bool split_any = false;
            for (auto& [f, e] : fac.factors) {
                if (f.degree() != 1) continue;
                // rational eigenvalue lambda = -c0/c1
                BigRat lam = BigRat(-f.coef(0), f.coef(1));
                size_t dim = blk.basis.size();
                RatMatrix shifted = M - RatMatrix::identity(dim).scaled(lam);
                auto ker = shifted.kernel();
                if (ker.empty()) continue;
                Block nb;
                for (const auto& kv : ker) {
                    std::vector<BigRat> v(h, BigRat(0));
                    for (size_t j = 0; j < dim; ++j)
                        for (size_t i = 0; i < h; ++i) v[i] += blk.basis[j][i] * kv[j];
                    nb.basis.push_back(std::move(v));
                }
                next.push_back(std::move(nb));
                split_any = true;
            }
            // remaining invariant subspace: kernel of the product of the
            // irreducible non-linear factors evaluated at M
            RatPoly irr_part = RatPoly::constant(BigRat(1));
            for (auto& [f, e] : fac.factors)
                if (f.degree() > 1)
                    for (int i = 0; i < e; ++i) irr_part = irr_part * f.to_rat();
            if (irr_part.degree() >= 1) {
                // kernel of irr_part(M) inside the block, Horner evaluation
                size_t dim = blk.basis.size();
                RatMatrix val = RatMatrix::identity(dim).scaled(BigRat(0));
                for (long long d = irr_part.degree(); d >= 0; --d) {
                    val = val * M;
                    val = val + RatMatrix::identity(dim).scaled(irr_part.coef(static_cast<size_t>(d)));
                }
                auto ker = val.kernel();
                if (!ker.empty()) {
                    Block nb;
                    for (const auto& kv : ker) {
                        std::vector<BigRat> v(h, BigRat(0));
                        for (size_t j = 0; j < dim; ++j)
                            for (size_t i = 0; i < h; ++i) v[i] += blk.basis[j][i] * kv[j];
                        nb.basis.push_back(std::move(v));
                    }
                    next.push_back(std::move(nb));
                    split_any = true;
                }
            }
            if (!split_any) next.push_back(blk);
        }
        blocks = std::move(next);
    }
    std::vector<EigenData> out;
    for (const Block& blk : blocks) {
        EigenData ed;
        if (blk.basis.size() == 1) {
            ed.rational = true;
            ed.vec = blk.basis[0];
            for (const RatMatrix& op : ops) {
                std::vector<BigRat> img = op.mul_vec(ed.vec);
                // eigenvalue from the first nonzero coordinate
                size_t idx = 0;
                while (idx < ed.vec.size() && ed.vec[idx].is_zero()) ++idx;
                BigRat lam = img[idx] / ed.vec[idx];
                // verify op v = lam v exactly
                for (size_t i = 0; i < ed.vec.size(); ++i)
                    if (!(img[i] == lam * ed.vec[i]))
                        throw std::logic_error("eigenbasis: vector is not a simultaneous eigenvector");
                ed.eigenvalues.push_back(lam);
            }
        } else {
            ed.rational = false;
            ed.block_dim = static_cast<long long>(blk.basis.size());
            for (const RatMatrix& op : ops) {
                RatMatrix M = restrict_to(op, blk);
                RatPoly cp = char_poly(M);
                std::vector<double> cd(cp.coefs().size());
                for (size_t i = 0; i < cd.size(); ++i) cd[i] = cp.coefs()[i].to_double();
                std::vector<double> evs;
                for (const auto& z : polyroots_double(cd)) evs.push_back(z.real());
                std::sort(evs.begin(), evs.end());
                ed.approx_eigenvalues.push_back(std::move(evs));
            }
        }
        out.push_back(std::move(ed));
    }
    // the degree vector e0 must appear with eigenvalues p + 1
    bool found_e0 = false;
    for (const auto& ed : out) {
        if (!ed.rational) continue;
        // proportional to (1/w_i)?
        BigRat ratio;
        bool prop = true;
        for (size_t i = 0; i < ed.vec.size(); ++i) {
            BigRat expect = BigRat(BigInt(1), BigInt(cs.w[i]));
            if (ed.vec[i].is_zero()) { prop = false; break; }
            BigRat r = ed.vec[i] / expect;
            if (i == 0) ratio = r;
            else if (!(r == ratio)) { prop = false; break; }
        }
        if (prop) {
            found_e0 = true;
            for (size_t k = 0; k < primes.size(); ++k)
                if (!(ed.eigenvalues[k] == BigRat(primes[k] + 1)))
                    throw std::logic_error("eigenbasis: e0 eigenvalue is not p+1");
        }
    }
    if (!found_e0) throw std::logic_error("eigenbasis: degree eigenvector e0 not found");
    return out;
}

QSeries theta_pair(const ClassSet& cs, const std::vector<BigRat>& f,
                   const std::vector<BigRat>& g, long long precision) {
    size_t h = static_cast<size_t>(cs.h());
    if (f.size() != h || g.size() != h) throw std::invalid_argument("theta_pair: vector size");
    // route A: Brandt matrices
    std::vector<BigRat> routeA(static_cast<size_t>(precision) + 1, BigRat(0));
    BigRat grf(0), grg(0);
    for (size_t i = 0; i < h; ++i) { grf += f[i]; grg += g[i]; }
    routeA[0] = grf * grg * BigRat(BigInt(1), BigInt(2));
    for (long long n = 1; n <= precision; ++n) {
        auto M = brandt_matrix(cs, n);
        // <t_n f, g> with <[I_i],[I_j]> = w_i delta_ij
        BigRat s(0);
        for (size_t i = 0; i < h; ++i) {
            BigRat tfi(0);
            for (size_t j = 0; j < h; ++j) tfi += BigRat(M[i][j]) * f[j];
            s += tfi * g[i] * BigRat(cs.w[i]);
        }
        routeA[static_cast<size_t>(n)] = s;
    }
    // route B: half theta series of M_ij = {d : d I_j in I_i}
    std::vector<BigRat> routeB(static_cast<size_t>(precision) + 1, BigRat(0));
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < h; ++j) {
            BigRat c = f[i] * g[j];
            if (c.is_zero()) continue;
            QuatLattice M = cs.reps[i].product(cs.reps[j].conjugated());
            BigRat step = M.norm();
            if (!(step == cs.norms[i] * cs.norms[j]))
                throw std::logic_error("theta_pair: lattice norm mismatch");
            QuadFormEnumerator en(M.gram());
            auto counts = en.counts_by_value(step, static_cast<size_t>(precision));
            for (long long n = 0; n <= precision; ++n)
                routeB[static_cast<size_t>(n)] +=
                    c * BigRat(counts[static_cast<size_t>(n)]) * BigRat(BigInt(1), BigInt(2));
        }
    for (size_t n = 0; n < routeA.size(); ++n)
        if (!(routeA[n] == routeB[n]))
            throw std::logic_error("theta_pair: Brandt route and lattice route disagree at q^" +
                                   std::to_string(n));
    return QSeries(2, std::move(routeA));
}

TraceFloorResult congruence_trace_floor(long long p, long long B, bool serial_reference) {
    if (!nt::is_prime(p) || p < 5)
        throw std::domain_error("congruence_trace_floor: p must be a prime >= 5");
    TraceFloorResult res;
    res.floor_bound = p * p - 1;
    long long ymax = B / p;
    std::set<std::array<long long, 4>> sols;  // sign-normalized |x_i| tuples
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (!serial_reference)
#endif
    for (long long y1 = 0; y1 <= ymax; ++y1) {
        std::set<std::array<long long, 4>> local;
        for (long long y2 = 0; y2 <= ymax; ++y2) {
            for (long long y3 = 0; y3 <= ymax; ++y3) {
                long long x1 = p * y1, x2 = p * y2, x3 = p * y3;
                long long rhs = 1 + 2 * x1 * x1 + 3 * x2 * x2 - 6 * x3 * x3;
                if (rhs < 0) continue;
                long long x0 = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(rhs))));
                while (x0 * x0 > rhs) --x0;
                while ((x0 + 1) * (x0 + 1) <= rhs) ++x0;
                if (x0 * x0 != rhs) continue;
                if (x0 > B) continue;
                if (x0 <= 1 && x1 == 0 && x2 == 0 && x3 == 0) continue;  // +-1
                local.insert({x0, x1, x2, x3});
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        sols.insert(local.begin(), local.end());
    }
    res.solutions_in_box = static_cast<long long>(sols.size());
    res.solutions.assign(sols.begin(), sols.end());
    std::sort(res.solutions.begin(), res.solutions.end());
    if (!res.solutions.empty()) {
        long long best = res.solutions.front()[0];
        if (best < res.floor_bound)
            throw std::logic_error("congruence_trace_floor: found unit violating |x0| >= p^2-1");
        res.found = true;
        res.min_abs_x0 = best;
        res.witness = res.solutions.front();
        res.displacement = 2.0 * std::acosh(static_cast<double>(best));
    }
    return res;
}

}  // namespace quat
}  // namespace arithlab
