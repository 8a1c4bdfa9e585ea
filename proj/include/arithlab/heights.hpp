#pragma once

#include <complex>
#include <string>
#include <vector>

#include "arithlab/bigint.hpp"
#include "arithlab/poly.hpp"

namespace arithlab {
namespace heights {

/// Complex number with exact rational parts; the working type of the
/// certified Newton refinement.
struct CRat {
    BigRat re, im;
    CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
    CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
    CRat operator*(const CRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRat conj() const { return {re, -im}; }
    BigRat norm2() const { return re * re + im * im; }
    CRat div(const CRat& o) const;
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// sqrt bounds for a nonnegative rational: lo^2 <= s <= hi^2.
void sqrt_bounds(const BigRat& s, BigRat& lo, BigRat& hi);

struct CertifiedRoot {
    CRat z;          // approximation
    BigRat radius;   // certified: some true root lies within `radius` of z
    BigRat abs_lo, abs_hi;  // certified bounds on the modulus of that root
};

/// Algebraic number given by its primitive minimal polynomial over Z.
/// Construction verifies irreducibility (degree <= 24) and certifies the full
/// conjugate set: pairwise disjoint discs of radius <= 1e-20.
class AlgebraicNumber {
public:
    static AlgebraicNumber from_min_poly(const IntPoly& g);
    /// Primitive n-th root of unity (min poly Phi_n), bypassing the generic
    /// degree cap: cyclotomics are irreducible and the roots have exact-angle
    /// seeds. Certification is the same disc argument.
    static AlgebraicNumber root_of_unity(long long n);

    const IntPoly& min_poly() const { return g_; }
    long long degree() const { return g_.degree(); }
    const std::vector<CertifiedRoot>& conjugates() const { return roots_; }

private:
    IntPoly g_;
    std::vector<CertifiedRoot> roots_;
};

/// Certify all roots of a squarefree polynomial to the target radius.
std::vector<CertifiedRoot> certify_roots(const IntPoly& f, const BigRat& target_radius);
/// Same, starting from caller-provided approximations (one per root).
std::vector<CertifiedRoot> certify_roots_from(const IntPoly& f, std::vector<CRat> seeds,
                                              const BigRat& target_radius);

struct RealValue {
    double value = 0.0;
    double error = 0.0;
};

/// Mahler measure |lead| prod max(1, |root|) with propagated error <= ~1e-12;
/// a modulus interval straddling 1 contributes its full width, never a guess.
RealValue mahler_measure(const IntPoly& f);

/// Weil height log M(g_alpha) / deg, computed both as (log a_n + sum log+ |b|)/deg
/// and through the measure; the two evaluations must agree to 1e-10.
RealValue weil_height(const AlgebraicNumber& a);

/// Kronecker test: decides via the monic/modulus filter plus the power
/// iteration of minimal polynomials of alpha^(2^t), and cross-checks the
/// exact cyclotomic identification g = Phi_d with phi(d) = deg.
bool is_root_of_unity(const AlgebraicNumber& a);

/// Minimal polynomial of alpha^k via the companion-matrix power.
IntPoly min_poly_of_power(const AlgebraicNumber& a, long long k);

/// E'(delta_G) = -(1/n^2) sum_{i != j} log |a_i - a_j|.
RealValue orbit_energy(const AlgebraicNumber& a);
/// 2h(alpha) - E'; asserted nonnegative within error.
RealValue energy_height_gap(const AlgebraicNumber& a);

/// Ramanujan sum by the divisor formula (exact) and by the exponential sum
/// (rounded with certified margin); both must agree.
long long ramanujan_sum(long long n, long long k);

struct EquidistStats {
    std::vector<double> weyl;        // |E z^k| for k = 1..K
    double star_discrepancy;         // of arguments against uniform
    bool modulus_window_ok;          // all |z| within [1 - 0.2, 1 + 0.2]
};

EquidistStats equidistribution_stats(const AlgebraicNumber& a, int K);

struct NorthcottEntry {
    IntPoly poly;
    double height;
};

/// All algebraic numbers with deg <= D and h <= B (up to conjugacy), by the
/// coefficient-box enumeration |a_j| <= C(d,j) e^{dB}; throws a budget error
/// when the box exceeds ~1e8 tuples.
std::vector<NorthcottEntry> northcott_enumerate(int D, double B);

}  // namespace heights
}  // namespace arithlab
