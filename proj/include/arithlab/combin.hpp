#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "arithlab/bigint.hpp"

namespace arithlab {
namespace combin {

// ---- sumsets over Z and Z_N (mod = 0 means the integers) ----

std::vector<long long> sumset(const std::vector<long long>& A, const std::vector<long long>& B,
                              long long mod = 0);
std::vector<long long> restricted_sumset(const std::vector<long long>& A,
                                         const std::vector<long long>& B, long long mod = 0);
std::vector<long long> difference_set(const std::vector<long long>& A,
                                      const std::vector<long long>& B, long long mod = 0);
std::vector<long long> product_set(const std::vector<long long>& A,
                                   const std::vector<long long>& B);
/// kB - mB
std::vector<long long> iterated_sumset(const std::vector<long long>& B, int k, int m,
                                       long long mod = 0);

/// additive energy #{(a,b,c,d) : a + b = c + d}; multiplicative analogue
BigInt energy_additive(const std::vector<long long>& A, long long mod = 0);
BigInt energy_multiplicative(const std::vector<long long>& A);

struct InequalityCheck {
    bool holds;
    std::string detail;
};

/// |A+B| >= min(p, |A|+|B|-1) in Z_p.
InequalityCheck check_cauchy_davenport(const std::vector<long long>& A,
                                       const std::vector<long long>& B, long long p);
/// |A ^+ B| >= min(|A|+|B|-3, p), and -2 when |A| != |B|.
InequalityCheck check_restricted_sumset(const std::vector<long long>& A,
                                        const std::vector<long long>& B, long long p);
/// |kB - mB| |A|^{k+m-1} <= |A+B|^{k+m}, exactly in big integers.
InequalityCheck check_pluennecke(const std::vector<long long>& A,
                                 const std::vector<long long>& B, int k, int m,
                                 long long mod = 0);
/// Ruzsa triangle |AC^{-1}||B| <= |AB^{-1}||BC^{-1}| in an explicit group.
InequalityCheck check_ruzsa_triangle(const std::function<long long(long long, long long)>& mul,
                                     const std::function<long long(long long)>& inv,
                                     const std::vector<long long>& A,
                                     const std::vector<long long>& B,
                                     const std::vector<long long>& C);
/// |A^k| |A|^{k-3} <= |A^3|^{k-2} for symmetric A.
InequalityCheck check_tripling_power(const std::function<long long(long long, long long)>& mul,
                                     const std::vector<long long>& A, int k);
/// E^x(A) |A.A| >= |A|^4 (Cauchy-Schwarz), exact.
InequalityCheck check_multiplicative_energy(const std::vector<long long>& A);

/// Ruzsa covering: when |A+B| <= K|A| finds X subset of B, |X| <= K, with
/// B inside A - A + X (greedy from the proof).
struct CoveringResult {
    std::vector<long long> X;
    bool covered;
    BigRat K;
};
CoveringResult ruzsa_covering(const std::vector<long long>& A, const std::vector<long long>& B,
                              long long mod);

// ---- incidences ----

struct RatPoint {
    BigRat x, y;
};
/// line y = a x + b, or vertical x = c when `vertical`
struct RatLine {
    bool vertical = false;
    BigRat a, b, c;
};

struct IncidenceReport {
    long long incidences;
    bool bound_ok;
    double bound;
};

/// Exact incidences in the rational plane; Szemeredi-Trotter bound asserted.
IncidenceReport incidences_rational(const std::vector<RatPoint>& P,
                                    const std::vector<RatLine>& L);
/// Exact incidences in F_p^2 with the Vinh bound PL/p + sqrt(p P L);
/// lines given as (a, b, c) meaning ax + by = c with (a, b) != (0, 0).
IncidenceReport incidences_fp(long long p, const std::vector<std::pair<long long, long long>>& P,
                              const std::vector<std::array<long long, 3>>& lines);

// ---- Kakeya ----

struct KakeyaSet {
    long long p;
    int n;
    std::vector<long long> points;  // encoded base p
};

/// Paraboloid-slice construction: contains a line in every direction.
KakeyaSet kakeya_construct(long long p, int n);
/// Exhaustive verification that every direction has a full line inside S.
bool kakeya_verify(const KakeyaSet& S);

// ---- Sidon / B_h ----

struct SidonCertificate {
    bool ok;
    int h;
    long long modulus;  // 0 = integers
    std::vector<long long> violating;  // first violating tuple if any
};

SidonCertificate sidon_verify(const std::vector<long long>& A, int h, long long mod = 0);

/// Difference triangle rows of a Sidon candidate in the integers.
std::vector<std::vector<long long>> difference_triangle(const std::vector<long long>& A);

std::vector<long long> sidon_erdos_turan(long long p);            // in [0, 2p^2]
std::vector<long long> sidon_ruzsa(long long p);                  // in Z_{p(p-1)}
std::vector<long long> sidon_bose_chowla(long long q, int h);     // in Z_{q^h - 1}

struct SidonBounds {
    double trivial;    // sqrt(2n) + 1/2
    double lindstrom;  // n^{1/2} + n^{1/4} + 1
    double refined;    // n^{1/2} + n^{1/4} + 1/2
};
SidonBounds sidon_upper_bounds(long long n);

/// Exhaustive maximal Sidon-set size in [1, n], branch and bound; n <= 40.
long long f2_max_exhaustive(long long n);

std::vector<long long> greedy_mian_chowla(int count);
std::vector<long long> greedy_bh(int h, int count);

}  // namespace combin
}  // namespace arithlab
