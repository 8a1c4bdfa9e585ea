#pragma once

#include <array>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arithlab/bigint.hpp"
#include "arithlab/matrix.hpp"
#include "arithlab/qseries.hpp"

namespace arithlab {
namespace quat {

/// Rational quaternion algebra (a,b): basis 1,i,j,k with i^2=a, j^2=b,
/// ij = -ji = k (so k^2 = -ab).
struct QuatAlgebra {
    BigRat a, b;
    bool is_definite() const { return a.sign() < 0 && b.sign() < 0; }
    bool operator==(const QuatAlgebra& o) const = default;
};

/// Quaternion x0 + x1 i + x2 j + x3 k with exact rational coordinates.
class Quaternion {
public:
    Quaternion() : c_{BigRat(0), BigRat(0), BigRat(0), BigRat(0)} {}
    Quaternion(QuatAlgebra alg, std::array<BigRat, 4> c) : alg_(alg), c_(c) {}

    const QuatAlgebra& algebra() const { return alg_; }
    const BigRat& operator[](size_t i) const { return c_[i]; }

    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator-(const Quaternion& o) const;
    Quaternion operator*(const Quaternion& o) const;
    Quaternion scaled(const BigRat& v) const;
    Quaternion conj() const;
    BigRat trace() const;   // x + x* = 2 x0
    BigRat norm() const;    // x x* = x0^2 - a x1^2 - b x2^2 + ab x3^2
    bool is_zero() const;
    bool operator==(const Quaternion& o) const;

    std::string to_string() const;

private:
    QuatAlgebra alg_;
    std::array<BigRat, 4> c_;
};

/// Full-rank lattice in a quaternion algebra: rows of basis_/den_ are the
/// coordinates of the four basis quaternions.
class QuatLattice {
public:
    QuatLattice() = default;
    /// Lattice spanned by the given quaternions (HNF-reduced, must be rank 4).
    static QuatLattice span(const QuatAlgebra& alg, const std::vector<Quaternion>& gens);

    const QuatAlgebra& algebra() const { return alg_; }
    Quaternion basis(size_t i) const;
    std::vector<Quaternion> basis_all() const;

    bool contains(const Quaternion& q) const;
    bool contains_lattice(const QuatLattice& o) const;
    bool operator==(const QuatLattice& o) const;

    QuatLattice product(const QuatLattice& o) const;    // span of pairwise products
    QuatLattice conjugated() const;
    QuatLattice scaled(const BigRat& v) const;
    QuatLattice sum(const QuatLattice& o) const;

    /// Gram matrix of the norm form: G[r][s] = trace(b_r * conj(b_s)); the
    /// quadratic form Q(x) = (1/2) x^T G x equals norm(sum x_i b_i).
    RatMatrix gram() const;

    /// Certified lattice norm: gcd of all norms of lattice vectors, computed
    /// from basis norms together with the off-diagonal bilinear values.
    BigRat norm() const;

    /// det of the trace form = (disc)^2 for orders.
    BigRat gram_det() const;

    /// Coordinates of q in this basis (solves exactly); empty when q outside QQ-span.
    std::vector<BigRat> coordinates(const Quaternion& q) const;

    /// index [this : sub] for a full-rank sublattice.
    BigRat index_of(const QuatLattice& sub) const;

private:
    QuatAlgebra alg_;
    BigInt den_;                          // positive
    std::vector<std::vector<BigInt>> b_;  // 4x4 integer rows; basis = rows / den_
    mutable std::optional<RatMatrix> inv_cache_;
    const RatMatrix& basis_inverse() const;
    friend class QuatOrder;
};

/// An order: unital multiplicatively closed lattice; reduced discriminant
/// computed and verified integral at construction.
class QuatOrder {
public:
    QuatOrder(const QuatAlgebra& alg, const std::vector<Quaternion>& basis);

    const QuatAlgebra& algebra() const { return lat_.algebra(); }
    const QuatLattice& lattice() const { return lat_; }
    const BigInt& reduced_discriminant() const { return disc_; }

private:
    QuatLattice lat_;
    BigInt disc_;
};

/// Places where (a,b) is a division algebra; 0 denotes the infinite place.
std::set<long long> ramification(const QuatAlgebra& alg);

/// The order [1, i, (1+j)/2, (i+k)/2] in (-1,-N) for prime N = 3 mod 4.
QuatOrder standard_maximal_order(long long N);
/// Lipschitz order [1,i,j,k] of (-1,-1) (discriminant 4, not maximal).
QuatOrder lipschitz_order();

/// Definite algebra ramified exactly at {N, infinity} plus a maximal order,
/// for any prime N (case split on N mod 8).
QuatOrder maximal_order_for_prime(long long N);

/// Right ideal of a fixed order; right stability verified at construction.
class RightIdeal {
public:
    RightIdeal(QuatLattice lat, const QuatOrder& order);
    const QuatLattice& lattice() const { return lat_; }
    const BigRat& norm() const { return norm_; }

private:
    QuatLattice lat_;
    BigRat norm_;
};

/// Left equivalence: I ~ J iff I conj(J) represents norm(I)norm(J).
bool ideals_equivalent(const QuatLattice& I, const BigRat& nI,
                       const QuatLattice& J, const BigRat& nJ);

/// Stabilizer order w_I = #{d : dI = I}/{±1}.
long long ideal_stabilizer_order(const QuatLattice& I, const BigRat& nI);

/// T_n(I): sublattices I' of index n^2 with norm(I') = n norm(I) that are
/// right R-modules. Prime n uses the cyclic-submodule enumeration of I/nI;
/// composite n enumerates Hermite normal forms containing nI.
std::vector<QuatLattice> hecke_neighbors(const QuatLattice& I, const BigRat& nI,
                                         const QuatOrder& R, long long n);

struct ClassSet {
    std::shared_ptr<const QuatOrder> order;
    std::vector<QuatLattice> reps;
    std::vector<BigRat> norms;
    std::vector<long long> w;
    long long h() const { return static_cast<long long>(reps.size()); }
    BigRat mass() const;
};

/// Right ideal classes by closing the T_p neighbor graph from R, p the
/// smallest prime not dividing the (prime) discriminant. Verifies the mass
/// (N-1)/12 and the class-number formula.
ClassSet class_set(const QuatOrder& R);

/// Expected class number for prime discriminant N.
long long class_number_formula(long long N);

/// h x h integer Brandt matrix of t_n: column i lists the classes of T_n(I_i).
std::vector<std::vector<BigInt>> brandt_matrix(const ClassSet& cs, long long n);

struct EigenData {
    bool rational = true;
    std::vector<BigRat> vec;              // rational simultaneous eigenvector
    std::vector<BigRat> eigenvalues;      // one per requested prime
    // for an irrational block: dimension and minimal polynomial of the first
    // Hecke action restricted to the block, with double-precision eigenvalues
    long long block_dim = 1;
    std::vector<std::vector<double>> approx_eigenvalues;
};

/// Simultaneous eigenvectors of the Brandt matrices at the given primes.
/// e0 = sum (1/w_i)[I_i] always appears with eigenvalue p+1 at every prime.
std::vector<EigenData> eigenbasis(const ClassSet& cs, const std::vector<long long>& primes);

/// Theta pairing phi(f, g) through q^precision; both computations (Brandt
/// route and half-theta-series of {d : d I_j in I_i}) are run and must agree.
QSeries theta_pair(const ClassSet& cs, const std::vector<BigRat>& f,
                   const std::vector<BigRat>& g, long long precision);

struct TraceFloorResult {
    bool found = false;
    long long min_abs_x0 = 0;
    std::array<long long, 4> witness{0, 0, 0, 0};          // minimal |x0| solution
    std::vector<std::array<long long, 4>> solutions;       // sign-normalized, sorted
    long long floor_bound = 0;      // p^2 - 1
    double displacement = 0.0;      // 2 arccosh(|x0|)
    long long solutions_in_box = 0;

    bool contains(const std::array<long long, 4>& w) const {
        for (const auto& s : solutions)
            if (s == w) return true;
        return false;
    }
};

/// Search units of the (2,3) order with p | x1,x2,x3 inside the coefficient
/// box |x_i| <= B; every nontrivial solution must satisfy |x0| >= p^2 - 1.
TraceFloorResult congruence_trace_floor(long long p, long long B,
                                        bool serial_reference = false);

}  // namespace quat
}  // namespace arithlab
