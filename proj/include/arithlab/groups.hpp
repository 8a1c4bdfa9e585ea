#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arithlab/bigint.hpp"

namespace arithlab {
namespace groups {

/// Explicit finite group: multiplication by index with identity 0.
class GroupTable {
public:
    GroupTable(long long n, std::vector<int32_t> table);

    static GroupTable cyclic(long long N);
    static GroupTable symmetric(int k);  // S_k, k <= 8

    long long order() const { return n_; }
    long long mul(long long a, long long b) const { return table_[static_cast<size_t>(a * n_ + b)]; }
    long long inv(long long a) const { return inv_[static_cast<size_t>(a)]; }

private:
    long long n_;
    std::vector<int32_t> table_;
    std::vector<int32_t> inv_;
};

/// SL_2(F_p): elements indexed densely; multiplication on the fly.
class SL2 {
public:
    explicit SL2(long long p);
    long long p() const { return p_; }
    long long order() const { return static_cast<long long>(elements_.size()); }

    using Mat = std::array<long long, 4>;  // (a, b, c, d) row-major

    long long index(const Mat& m) const;
    Mat element(long long idx) const { return elements_[static_cast<size_t>(idx)]; }
    long long mul(long long a, long long b) const;
    long long inv(long long a) const;
    long long trace_of(long long idx) const;
    bool regular_semisimple(long long idx) const;  // trace != +-2

    GroupTable to_table() const;  // materialized table (order <= ~3000)

    /// the standard unipotent pair {(1 1;0 1)^{+-1}, (1 0;1 1)^{+-1}}
    std::vector<long long> unipotent_generators() const;

private:
    long long p_;
    std::vector<Mat> elements_;
    std::vector<int32_t> index_of_;  // dense lookup over (a,b,c) with d determined? full p^4 map
    long long key(const Mat& m) const;
};

/// Exact diameter of Cay(G, A u A^{-1}) as the eccentricity of the identity
/// under BFS (equals the diameter by vertex transitivity).
/// Throws when A does not generate.
long long cayley_diameter(const std::function<long long(long long, long long)>& mul,
                          long long order, const std::vector<long long>& gens);

struct GrowthProfile {
    std::vector<long long> sizes;  // |A|, |A^2|, ..., |A^kmax|
    bool reached_whole_group;
    double growth_exponent;        // log|A^3| / log|A|
};

GrowthProfile growth_profile(const std::function<long long(long long, long long)>& mul,
                             long long order, const std::vector<long long>& A, int kmax);

struct NikolovPyberReport {
    long long group_order;
    long long set_size;     // ceil(2 |G|^{8/9})
    int trials;
    int successes;          // trials with A^3 = G
};

/// Samples symmetric sets of size ceil(2 |G|^{8/9}) in SL_2(F_p) and checks
/// A^3 = G exhaustively. Requires the threshold to be < |G|.
NikolovPyberReport nikolov_pyber_check(long long p, int trials, uint64_t seed);

/// Eigenvalues (ascending) of a dense symmetric matrix by cyclic Jacobi.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m);

struct SpectrumReport {
    std::vector<double> eigenvalues;               // of the normalized adjacency, descending
    std::vector<std::pair<double, int>> clusters;  // value, multiplicity (tol 1e-6)
    double trace_sq_identity_residual;             // |sum v_j^2 - |G|/|A||
};

/// Spectrum of (1/|A|) sum_{a in A} f(a g) on Cay(G, A); A symmetrized.
SpectrumReport adjacency_spectrum(const std::function<long long(long long, long long)>& mul,
                                  const std::function<long long(long long)>& inv,
                                  long long order, std::vector<long long> A);

struct LinkGraph {
    long long vertices;
    std::vector<std::pair<long long, long long>> edges;
};

/// L(S) for an integer generating set S of Z: vertices S, edge (s,s') iff
/// s' - s in S.
LinkGraph link_graph_integers(const std::vector<long long>& S);
/// L(S) inside a finite group: edge (s, s') iff s^{-1} s' in S.
LinkGraph link_graph_group(const GroupTable& G, const std::vector<long long>& S);
/// Incidence graph of the projective plane P^2(F_q).
LinkGraph projective_plane_incidence(long long q);

struct ZukReport {
    bool connected;
    double lambda1;     // smallest nonzero eigenvalue of the weighted Laplacian
    bool verdict;       // lambda1 > 1/2 (property (T) criterion); meaningless if disconnected
};

ZukReport zuk_criterion(const LinkGraph& L);

struct ExpanderSample {
    int trials;
    int meeting_threshold;      // h' >= 3/2
    double fraction;
    std::vector<double> h_prime_values;
};

/// Random bipartite X(n, k) from k uniform permutations; h' computed exactly
/// by scanning subsets of the first row (n <= 18).
ExpanderSample random_expander_sample(int n, int k, int trials, uint64_t seed);

/// Exact edge-isoperimetric constant by scanning all subsets (2n <= 24 vertices).
double isoperimetric_exact(int n, const std::vector<std::vector<int>>& adj);

/// h'(X) for one X(n,k) instance given the k permutations.
double h_prime_exact(int n, const std::vector<std::vector<int>>& perms);

/// Exact return probability p_{2n}(id, id) of the simple random walk:
BigRat return_probability_zd(int d, int two_n);                      // Z^d lattice
BigRat return_probability_group(const GroupTable& G, const std::vector<long long>& S,
                                int two_n);                          // finite group
BigRat return_probability_free2(int two_n);                          // F_2, 4-regular tree

struct OrbitStabCheck {
    long long lhs;  // |A^{-1}A n Stab(x)|
    double rhs;     // |A| / |Ax|
    bool holds;
};

/// Lemma |A^{-1}A n Stab(x)| >= |A|/|Ax| on an explicit action.
OrbitStabCheck orbit_stabilizer_check(
    const std::function<long long(long long, long long)>& mul,
    const std::function<long long(long long)>& inv, long long order,
    const std::vector<long long>& A,
    const std::function<long long(long long, long long)>& action, long long x);

struct ConjugacyCheck {
    long long lhs;        // |A^{-1}A n C(g)|
    long long orbit_cut;  // |A^{l+1}A^{-1} n Cl(g)|
    bool holds;           // lhs >= |A| / orbit_cut
};

ConjugacyCheck conjugation_check(const std::function<long long(long long, long long)>& mul,
                                 const std::function<long long(long long)>& inv,
                                 long long order, const std::vector<long long>& A, long long g,
                                 int l);

/// Deterministic counter-based generator (splitmix64 stream).
struct CounterRng {
    uint64_t seed;
    uint64_t counter = 0;
    uint64_t next();
    uint64_t next_below(uint64_t n);  // uniform in [0, n)
};

}  // namespace groups
}  // namespace arithlab
