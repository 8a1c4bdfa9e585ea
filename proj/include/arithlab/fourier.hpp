#pragma once

#include <complex>
#include <string>
#include <vector>

#include "arithlab/bigint.hpp"

namespace arithlab {
namespace fourier {

/// Finite abelian group as a product of cyclic factors Z_{N_1} x ... x Z_{N_t},
/// elements indexed in mixed radix. The self-pairing r.x = sum r_j x_j / N_j
/// (mod 1) realizes the character group.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<long long> factors);
    static FiniteAbelianGroup cyclic(long long N) { return FiniteAbelianGroup({N}); }
    static FiniteAbelianGroup vector_space(long long p, int n);

    long long size() const { return size_; }
    const std::vector<long long>& factors() const { return f_; }

    std::vector<long long> tuple(long long index) const;
    long long index(const std::vector<long long>& tuple) const;

    long long add(long long a, long long b) const;
    long long sub(long long a, long long b) const;
    long long neg(long long a) const;
    long long scale(long long c, long long a) const;
    /// multiplication by c is a bijection iff gcd(c, N_j) = 1 for all j
    bool scaling_bijective(long long c) const;

    /// r.x as an exact rational in [0, 1).
    BigRat pairing(long long r, long long x) const;
    /// || r.x ||_T, distance to the nearest integer, exact.
    BigRat torus_norm(long long r, long long x) const;

    bool operator==(const FiniteAbelianGroup& o) const = default;

private:
    std::vector<long long> f_;
    long long size_;
    long long lcm_;
};

using cd = std::complex<double>;

/// f_hat(r) = E_x f(x) conj(e(r.x)); dense transform with an FFT fast path
/// for cyclic 2-power orders. The dense serial version is the oracle.
std::vector<cd> dft(const FiniteAbelianGroup& G, const std::vector<cd>& f,
                    bool serial_reference = false);
std::vector<cd> inverse_dft(const FiniteAbelianGroup& G, const std::vector<cd>& fhat);
/// (f*g)(x) = E_y f(y) g(x - y)
std::vector<cd> convolution(const FiniteAbelianGroup& G, const std::vector<cd>& f,
                            const std::vector<cd>& g);

std::vector<cd> indicator(const FiniteAbelianGroup& G, const std::vector<long long>& A);
/// balanced function 1_A - alpha
std::vector<cd> balanced_indicator(const FiniteAbelianGroup& G, const std::vector<long long>& A);

/// Fourier-side value of E_{c1 x1 + ... + ct xt = 0} f1(x1)...ft(xt);
/// throws when some multiplication-by-c_i is not bijective.
cd count_linear_solutions(const FiniteAbelianGroup& G, const std::vector<long long>& coeffs,
                          const std::vector<std::vector<cd>>& fs);
/// Brute-force oracle for the same average (enumerates |G|^(t-1)).
cd count_linear_solutions_brute(const FiniteAbelianGroup& G,
                                const std::vector<long long>& coeffs,
                                const std::vector<std::vector<cd>>& fs);

double uniformity_norm(const FiniteAbelianGroup& G, const std::vector<cd>& f);
/// ||f||_{U^2}^4 = sum_r |f_hat(r)|^4 (and the 4-point average agrees).
double u2_norm(const FiniteAbelianGroup& G, const std::vector<cd>& f);
double u2_norm_brute(const FiniteAbelianGroup& G, const std::vector<cd>& f);

struct BohrSet {
    std::vector<long long> freqs;
    BigRat radius;
    std::vector<long long> members;  // sorted element indices
};

/// Exact Bohr set; asserts 0 in B, B = -B, and the size bounds
/// delta^{|S|} <= |B|/|G| <= 4/|S| whenever delta <= 1/(4 pi) and S != {}.
BohrSet bohr_set(const FiniteAbelianGroup& G, const std::vector<long long>& S,
                 const BigRat& delta);

std::vector<long long> spectrum(const FiniteAbelianGroup& G, const std::vector<cd>& f,
                                double eps);

struct BogolyubovCertificate {
    std::vector<long long> spec;    // S = Spec_lambda(1_A)
    double lambda;
    long long bohr_size;
    bool containment;               // B(S, 1/4) inside 2A - 2A (exhaustive)
    double spec_bound;              // 2 alpha^{-2}
};

/// Runs the proof of the 2A-2A containment with lambda = alpha^{3/2}/sqrt(2);
/// the convolution positivity check is exact integer counting.
BogolyubovCertificate bogolyubov_certificate(const FiniteAbelianGroup& G,
                                             const std::vector<long long>& A);

struct VSIncrement {
    long long coset_rep;            // x with density measured on x + r-perp
    std::vector<long long> coset;   // the affine subspace
    double density;
};

/// Density increment on a codimension-1 coset of F_p^n; requires a frequency
/// r != 0 with |1_A-hat(r)| >= c alpha and certifies density >= alpha(1+c/2).
VSIncrement density_increment_vs(const FiniteAbelianGroup& G,
                                 const std::vector<long long>& A, long long r, double c);

struct ZnIncrement {
    long long start, step, length;  // genuine integer progression inside [N]
    double density;
    double promised_length;         // (c/60) sqrt(N)
    double promised_density;        // beta (1 + c/4)
};

/// Density increment for B inside [1, N] (embedded in Z_N) along a genuine
/// integer progression, with the constants c1 = c/60 and c2 = c/4 certified.
ZnIncrement density_increment_zn(long long N, const std::vector<long long>& B, long long r,
                                 double c);

struct BehrendSet {
    std::vector<long long> elements;  // subset of [1, N], verified 3-AP-free
    int radix, dim;
    long long shell;                  // the chosen squared-length shell
};

/// Sphere-shell digit construction maximized over small (radix, dim); output
/// verified 3-AP-free exhaustively.
BehrendSet behrend_set(long long N);

bool is_ap3_free(const std::vector<long long>& A);

struct RothGraph {
    long long n;
    long long triangles;
    long long ap3_solutions;   // #{(a1,a2,a3) in A^3 : a1 + a2 = 2 a3}
    long long vertices, edges;
};

/// Tripartite graph on [n] + [2n] + [3n] whose triangles are in n-to-1
/// correspondence with solutions of a1 + a2 = 2 a3 in A.
RothGraph roth_graph(const std::vector<long long>& A, long long n);

}  // namespace fourier
}  // namespace arithlab
