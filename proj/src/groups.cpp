#include "arithlab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "arithlab/numtheory.hpp"

namespace arithlab {
namespace groups {

uint64_t CounterRng::next() {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (++counter);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t CounterRng::next_below(uint64_t n) {
    // rejection sampling for uniformity
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = next();
    while (v >= lim) v = next();
    return v % n;
}

GroupTable::GroupTable(long long n, std::vector<int32_t> table) : n_(n), table_(std::move(table)) {
    if (static_cast<long long>(table_.size()) != n * n)
        throw std::invalid_argument("GroupTable: table shape");
    inv_.assign(static_cast<size_t>(n), -1);
    for (long long a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::invalid_argument("GroupTable: 0 is not the identity");
        for (long long b = 0; b < n; ++b)
            if (mul(a, b) == 0) inv_[static_cast<size_t>(a)] = static_cast<int32_t>(b);
        if (inv_[static_cast<size_t>(a)] < 0)
            throw std::invalid_argument("GroupTable: missing inverse");
    }
}

GroupTable GroupTable::cyclic(long long N) {
    std::vector<int32_t> t(static_cast<size_t>(N * N));
    for (long long a = 0; a < N; ++a)
        for (long long b = 0; b < N; ++b)
            t[static_cast<size_t>(a * N + b)] = static_cast<int32_t>((a + b) % N);
    return GroupTable(N, std::move(t));
}

GroupTable GroupTable::symmetric(int k) {
    if (k < 1 || k > 8) throw std::domain_error("GroupTable::symmetric: k must be 1..8");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(static_cast<size_t>(k));
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // ensure identity is index 0 (next_permutation starts at identity)
    long long n = static_cast<long long>(perms.size());
    auto find_idx = [&](const std::vector<int>& q) {
        return static_cast<int32_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int32_t> t(static_cast<size_t>(n * n));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
            std::vector<int> comp(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                comp[static_cast<size_t>(i)] =
                    perms[static_cast<size_t>(a)][static_cast<size_t>(
                        perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
            t[static_cast<size_t>(a * n + b)] = find_idx(comp);
        }
    return GroupTable(n, std::move(t));
}

// --------------------------------------------------------------------- SL2

SL2::SL2(long long p) : p_(p) {
    if (!nt::is_prime(p)) throw std::domain_error("SL2: p must be prime");
    if (p > 101) throw std::domain_error("SL2: element enumeration budget (p <= 101)");
    index_of_.assign(static_cast<size_t>(p * p * p * p), -1);
    // identity first
    elements_.push_back({1, 0, 0, 1});
    index_of_[static_cast<size_t>(key({1, 0, 0, 1}))] = 0;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c)
                for (long long d = 0; d < p; ++d) {
                    if ((a * d - b * c % p + p * p) % p != 1) continue;
                    Mat m{a, b, c, d};
                    if (index_of_[static_cast<size_t>(key(m))] >= 0) continue;
                    index_of_[static_cast<size_t>(key(m))] =
                        static_cast<int32_t>(elements_.size());
                    elements_.push_back(m);
                }
    if (static_cast<long long>(elements_.size()) != p * (p * p - 1))
        throw std::logic_error("SL2: order mismatch");
}

long long SL2::key(const Mat& m) const {
    return ((m[0] * p_ + m[1]) * p_ + m[2]) * p_ + m[3];
}

long long SL2::index(const Mat& m) const {
    Mat r;
    for (int i = 0; i < 4; ++i) r[static_cast<size_t>(i)] = ((m[static_cast<size_t>(i)] % p_) + p_) % p_;
    long long idx = index_of_[static_cast<size_t>(key(r))];
    if (idx < 0) throw std::domain_error("SL2: matrix not in the group");
    return idx;
}

long long SL2::mul(long long a, long long b) const {
    const Mat& x = elements_[static_cast<size_t>(a)];
    const Mat& y = elements_[static_cast<size_t>(b)];
    Mat r{(x[0] * y[0] + x[1] * y[2]) % p_, (x[0] * y[1] + x[1] * y[3]) % p_,
          (x[2] * y[0] + x[3] * y[2]) % p_, (x[2] * y[1] + x[3] * y[3]) % p_};
    return index_of_[static_cast<size_t>(key(r))];
}

long long SL2::inv(long long a) const {
    const Mat& x = elements_[static_cast<size_t>(a)];
    Mat r{x[3], (p_ - x[1]) % p_, (p_ - x[2]) % p_, x[0]};
    return index_of_[static_cast<size_t>(key(r))];
}

long long SL2::trace_of(long long idx) const {
    const Mat& x = elements_[static_cast<size_t>(idx)];
    return (x[0] + x[3]) % p_;
}

bool SL2::regular_semisimple(long long idx) const {
    long long t = trace_of(idx);
    return t != 2 % p_ && t != (p_ - 2) % p_;
}

GroupTable SL2::to_table() const {
    long long n = order();
    if (n > 3000) throw std::domain_error("SL2::to_table: order too large to materialize");
    std::vector<int32_t> t(static_cast<size_t>(n * n));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            t[static_cast<size_t>(a * n + b)] = static_cast<int32_t>(mul(a, b));
    return GroupTable(n, std::move(t));
}

std::vector<long long> SL2::unipotent_generators() const {
    std::vector<long long> g;
    g.push_back(index({1, 1, 0, 1}));
    g.push_back(index({1, p_ - 1, 0, 1}));
    g.push_back(index({1, 0, 1, 1}));
    g.push_back(index({1, 0, p_ - 1, 1}));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

// --------------------------------------------------------------- diameters

long long cayley_diameter(const std::function<long long(long long, long long)>& mul,
                          long long order, const std::vector<long long>& gens) {
    if (order > 10000000) throw std::domain_error("cayley_diameter: order budget 1e7");
    std::vector<int32_t> dist(static_cast<size_t>(order), -1);
    std::queue<long long> q;
    dist[0] = 0;
    q.push(0);
    long long seen = 1, ecc = 0;
    while (!q.empty()) {
        long long g = q.front();
        q.pop();
        for (long long s : gens) {
            long long h = mul(s, g);
            if (dist[static_cast<size_t>(h)] < 0) {
                dist[static_cast<size_t>(h)] = dist[static_cast<size_t>(g)] + 1;
                ecc = std::max<long long>(ecc, dist[static_cast<size_t>(h)]);
                ++seen;
                q.push(h);
            }
        }
    }
    if (seen != order)
        throw std::domain_error("cayley_diameter: generating set does not generate the group");
    return ecc;
}

GrowthProfile growth_profile(const std::function<long long(long long, long long)>& mul,
                             long long order, const std::vector<long long>& A, int kmax) {
    GrowthProfile g;
    std::unordered_set<long long> cur(A.begin(), A.end());
    std::vector<long long> curv(cur.begin(), cur.end());
    g.sizes.push_back(static_cast<long long>(cur.size()));
    for (int k = 2; k <= kmax; ++k) {
        std::unordered_set<long long> next;
        for (long long x : curv)
            for (long long a : A) next.insert(mul(x, a));
        curv.assign(next.begin(), next.end());
        cur = std::move(next);
        g.sizes.push_back(static_cast<long long>(cur.size()));
        if (static_cast<long long>(cur.size()) == order) break;
    }
    g.reached_whole_group = !g.sizes.empty() && g.sizes.back() == order;
    if (g.sizes.size() >= 3 && g.sizes[0] > 1)
        g.growth_exponent = std::log(static_cast<double>(g.sizes[2])) /
                            std::log(static_cast<double>(g.sizes[0]));
    else
        g.growth_exponent = 0.0;
    return g;
}

NikolovPyberReport nikolov_pyber_check(long long p, int trials, uint64_t seed) {
    SL2 sl(p);
    long long n = sl.order();
    long long threshold =
        static_cast<long long>(std::ceil(2.0 * std::pow(static_cast<double>(n), 8.0 / 9.0)));
    if (threshold >= n)
        throw std::domain_error("nikolov_pyber_check: threshold 2|G|^{8/9} is not below |G|");
    NikolovPyberReport rep{n, threshold, trials, 0};
    CounterRng rng{seed};
    for (int t = 0; t < trials; ++t) {
        // random symmetric set of exactly `threshold` elements
        std::set<long long> A;
        while (static_cast<long long>(A.size()) < threshold) {
            long long room = threshold - static_cast<long long>(A.size());
            long long g = static_cast<long long>(rng.next_below(static_cast<uint64_t>(n)));
            long long gi = sl.inv(g);
            if (room == 1) {
                // only a self-inverse element fits; SL2 has just two of them,
                // so free a slot when both are taken
                bool placed = false;
                for (long long h = 0; h < n && !placed; ++h)
                    if (sl.inv(h) == h && !A.count(h)) {
                        A.insert(h);
                        placed = true;
                    }
                if (!placed) {
                    auto it = A.begin();
                    std::advance(it, static_cast<long long>(rng.next_below(A.size())));
                    long long v = *it;
                    A.erase(v);
                    A.erase(sl.inv(v));
                }
                continue;
            }
            if (g == gi) {
                A.insert(g);
            } else {
                A.insert(g);
                A.insert(gi);
            }
        }
        std::vector<char> inA(static_cast<size_t>(n), 0), A2(static_cast<size_t>(n), 0),
            A3(static_cast<size_t>(n), 0);
        for (long long a : A) inA[static_cast<size_t>(a)] = 1;
        std::vector<long long> Av(A.begin(), A.end());
        for (long long a : Av)
            for (long long b : Av) A2[static_cast<size_t>(sl.mul(a, b))] = 1;
        for (long long x = 0; x < n; ++x) {
            if (!A2[static_cast<size_t>(x)]) continue;
            for (long long a : Av) A3[static_cast<size_t>(sl.mul(x, a))] = 1;
        }
        bool all = true;
        for (long long x = 0; x < n; ++x)
            if (!A3[static_cast<size_t>(x)]) { all = false; break; }
        if (all) ++rep.successes;
    }
    return rep;
}

// --------------------------------------------------------------- spectra

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m) {
    size_t n = m.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
        if (off < 1e-24) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-15) continue;
                double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (size_t i = 0; i < n; ++i) ev[i] = m[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

SpectrumReport adjacency_spectrum(const std::function<long long(long long, long long)>& mul,
                                  const std::function<long long(long long)>& inv,
                                  long long order, std::vector<long long> A) {
    if (order > 5000) throw std::domain_error("adjacency_spectrum: dense solve budget 5000");
    // symmetrize the generating set
    std::set<long long> s(A.begin(), A.end());
    for (long long a : A) s.insert(inv(a));
    A.assign(s.begin(), s.end());
    size_t n = static_cast<size_t>(order);
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    double w = 1.0 / static_cast<double>(A.size());
    for (long long g = 0; g < order; ++g)
        for (long long a : A) m[static_cast<size_t>(mul(a, g))][static_cast<size_t>(g)] += w;
    SpectrumReport rep;
    rep.eigenvalues = jacobi_eigenvalues(std::move(m));
    std::reverse(rep.eigenvalues.begin(), rep.eigenvalues.end());  // descending
    // clusters with tolerance 1e-6
    for (double v : rep.eigenvalues) {
        if (!rep.clusters.empty() && std::abs(rep.clusters.back().first - v) <= 1e-6)
            rep.clusters.back().second++;
        else
            rep.clusters.emplace_back(v, 1);
    }
    double tr = 0.0;
    for (double v : rep.eigenvalues) tr += v * v;
    rep.trace_sq_identity_residual =
        std::abs(tr - static_cast<double>(order) / static_cast<double>(A.size()));
    return rep;
}

LinkGraph link_graph_integers(const std::vector<long long>& S) {
    LinkGraph L;
    L.vertices = static_cast<long long>(S.size());
    std::set<long long> s(S.begin(), S.end());
    if (s.count(0)) throw std::domain_error("link graph: S must not contain the identity");
    for (long long x : S)
        if (!s.count(-x)) throw std::domain_error("link graph: S must be symmetric");
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j)
            if (s.count(S[j] - S[i]))
                L.edges.emplace_back(static_cast<long long>(i), static_cast<long long>(j));
    return L;
}

LinkGraph link_graph_group(const GroupTable& G, const std::vector<long long>& S) {
    LinkGraph L;
    L.vertices = static_cast<long long>(S.size());
    std::set<long long> s(S.begin(), S.end());
    if (s.count(0)) throw std::domain_error("link graph: S must not contain the identity");
    for (long long x : S)
        if (!s.count(G.inv(x))) throw std::domain_error("link graph: S must be symmetric");
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j)
            if (s.count(G.mul(G.inv(S[i]), S[j])))
                L.edges.emplace_back(static_cast<long long>(i), static_cast<long long>(j));
    return L;
}

LinkGraph projective_plane_incidence(long long q) {
    // points and lines of P^2(F_q): nonzero triples up to scale; incidence by
    // the standard dot product
    std::vector<std::array<long long, 3>> pts;
    for (long long x = 0; x < q; ++x)
        for (long long y = 0; y < q; ++y)
            for (long long z = 0; z < q; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                // canonical representative: first nonzero coordinate = 1
                std::array<long long, 3> v{x, y, z};
                long long lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
                if (lead != 1) continue;
                pts.push_back(v);
            }
    LinkGraph L;
    long long m = static_cast<long long>(pts.size());
    L.vertices = 2 * m;  // points then lines
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < m; ++j) {
            long long dot = 0;
            for (int k = 0; k < 3; ++k)
                dot += pts[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                       pts[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (dot % q == 0) L.edges.emplace_back(i, m + j);
        }
    return L;
}

ZukReport zuk_criterion(const LinkGraph& L) {
    size_t n = static_cast<size_t>(L.vertices);
    std::vector<std::vector<double>> adj(n, std::vector<double>(n, 0.0));
    std::vector<double> deg(n, 0.0);
    for (auto [a, b] : L.edges) {
        adj[static_cast<size_t>(a)][static_cast<size_t>(b)] += 1.0;
        adj[static_cast<size_t>(b)][static_cast<size_t>(a)] += 1.0;
        deg[static_cast<size_t>(a)] += 1.0;
        deg[static_cast<size_t>(b)] += 1.0;
    }
    ZukReport rep;
    // connectivity by BFS
    std::vector<char> vis(n, 0);
    std::queue<size_t> q;
    q.push(0);
    vis[0] = 1;
    size_t seen = 1;
    while (!q.empty()) {
        size_t v = q.front();
        q.pop();
        for (size_t w = 0; w < n; ++w)
            if (adj[v][w] > 0 && !vis[w]) {
                vis[w] = 1;
                ++seen;
                q.push(w);
            }
    }
    rep.connected = seen == n;
    if (!rep.connected) {
        rep.lambda1 = 0.0;
        rep.verdict = false;
        return rep;
    }
    for (size_t i = 0; i < n; ++i)
        if (deg[i] == 0.0) throw std::domain_error("zuk_criterion: isolated vertex");
    // normalized adjacency D^{-1/2} W D^{-1/2}; Laplacian spectrum = 1 - spec
    std::vector<std::vector<double>> N(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            N[i][j] = adj[i][j] / std::sqrt(deg[i] * deg[j]);
    auto ev = jacobi_eigenvalues(std::move(N));  // ascending
    double mu2 = ev[n - 2];
    rep.lambda1 = 1.0 - mu2;
    rep.verdict = rep.lambda1 > 0.5;
    return rep;
}

double h_prime_exact(int n, const std::vector<std::vector<int>>& perms) {
    if (n > 18) throw std::domain_error("h_prime_exact: n budget 18 (2^n subset scan)");
    double best = std::numeric_limits<double>::infinity();
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (2 * size > n) continue;
        uint32_t nb = 0;
        for (const auto& perm : perms) {
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) nb |= 1u << perm[static_cast<size_t>(i)];
        }
        double ratio = static_cast<double>(__builtin_popcount(nb)) / static_cast<double>(size);
        best = std::min(best, ratio);
    }
    return best;
}

double isoperimetric_exact(int n, const std::vector<std::vector<int>>& adj) {
    // adj over 2n vertices; h = min |boundary edges| / |A| over |A| <= n
    int total = 2 * n;
    if (total > 24) throw std::domain_error("isoperimetric_exact: vertex budget 24");
    double best = std::numeric_limits<double>::infinity();
    for (uint32_t mask = 1; mask < (1u << total); ++mask) {
        int size = __builtin_popcount(mask);
        if (2 * size > total) continue;
        long long boundary = 0;
        for (int a = 0; a < total; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b : adj[static_cast<size_t>(a)])
                if (!(mask & (1u << b))) ++boundary;
        }
        best = std::min(best, static_cast<double>(boundary) / static_cast<double>(size));
    }
    return best;
}

ExpanderSample random_expander_sample(int n, int k, int trials, uint64_t seed) {
    if (k < 5) throw std::domain_error("random_expander_sample: k must be >= 5");
    ExpanderSample rep;
    rep.trials = trials;
    rep.meeting_threshold = 0;
    CounterRng rng{seed};
    for (int t = 0; t < trials; ++t) {
        std::vector<std::vector<int>> perms(static_cast<size_t>(k),
                                            std::vector<int>(static_cast<size_t>(n)));
        for (int j = 0; j < k; ++j) {
            std::iota(perms[static_cast<size_t>(j)].begin(), perms[static_cast<size_t>(j)].end(), 0);
            for (int i = n - 1; i > 0; --i) {
                int r = static_cast<int>(rng.next_below(static_cast<uint64_t>(i + 1)));
                std::swap(perms[static_cast<size_t>(j)][static_cast<size_t>(i)],
                          perms[static_cast<size_t>(j)][static_cast<size_t>(r)]);
            }
        }
        double hp = h_prime_exact(n, perms);
        rep.h_prime_values.push_back(hp);
        if (hp >= 1.5) ++rep.meeting_threshold;
    }
    rep.fraction = trials > 0 ? static_cast<double>(rep.meeting_threshold) / trials : 0.0;
    return rep;
}

BigRat return_probability_zd(int d, int two_n) {
    if (two_n % 2 != 0 || two_n < 0) throw std::domain_error("return_probability: even length");
    if (two_n > 40) throw std::domain_error("return_probability: 2n budget 40");
    // DP over displacement vectors in [-2n, 2n]^d
    long long width = 2 * two_n + 1;
    long long states = 1;
    for (int i = 0; i < d; ++i) {
        states *= width;
        if (states > 100000000) throw std::domain_error("return_probability_zd: state budget");
    }
    std::vector<BigInt> cur(static_cast<size_t>(states), BigInt(0));
    long long origin = 0;
    for (int i = 0; i < d; ++i) origin = origin * width + two_n;
    cur[static_cast<size_t>(origin)] = BigInt(1);
    for (int step = 0; step < two_n; ++step) {
        std::vector<BigInt> next(static_cast<size_t>(states), BigInt(0));
        for (long long sidx = 0; sidx < states; ++sidx) {
            if (cur[static_cast<size_t>(sidx)].is_zero()) continue;
            long long rem = sidx;
            std::vector<long long> coord(static_cast<size_t>(d));
            for (int i = d - 1; i >= 0; --i) {
                coord[static_cast<size_t>(i)] = rem % width;
                rem /= width;
            }
            for (int i = 0; i < d; ++i)
                for (int delta : {-1, 1}) {
                    long long c = coord[static_cast<size_t>(i)] + delta;
                    if (c < 0 || c >= width) continue;
                    long long nidx = 0;
                    for (int j = 0; j < d; ++j)
                        nidx = nidx * width + (j == i ? c : coord[static_cast<size_t>(j)]);
                    next[static_cast<size_t>(nidx)] += cur[static_cast<size_t>(sidx)];
                }
        }
        cur = std::move(next);
    }
    BigInt total = BigInt::pow(BigInt(2 * d), static_cast<unsigned>(two_n));
    return BigRat(cur[static_cast<size_t>(origin)], total);
}

BigRat return_probability_group(const GroupTable& G, const std::vector<long long>& S,
                                int two_n) {
    if (two_n > 40) throw std::domain_error("return_probability: 2n budget 40");
    long long n = G.order();
    std::vector<BigInt> cur(static_cast<size_t>(n), BigInt(0));
    cur[0] = BigInt(1);
    for (int step = 0; step < two_n; ++step) {
        std::vector<BigInt> next(static_cast<size_t>(n), BigInt(0));
        for (long long g = 0; g < n; ++g) {
            if (cur[static_cast<size_t>(g)].is_zero()) continue;
            for (long long s : S) next[static_cast<size_t>(G.mul(s, g))] += cur[static_cast<size_t>(g)];
        }
        cur = std::move(next);
    }
    return BigRat(cur[0], BigInt::pow(BigInt(static_cast<long long>(S.size())),
                                      static_cast<unsigned>(two_n)));
}

BigRat return_probability_free2(int two_n) {
    if (two_n > 60) throw std::domain_error("return_probability: 2n budget 60");
    // walk counts on the 4-regular tree, DP over the distance from the root
    std::vector<BigInt> cur(static_cast<size_t>(two_n) + 2, BigInt(0));
    cur[0] = BigInt(1);
    for (int step = 0; step < two_n; ++step) {
        std::vector<BigInt> next(cur.size(), BigInt(0));
        for (size_t dcur = 0; dcur < cur.size(); ++dcur) {
            if (cur[dcur].is_zero()) continue;
            if (dcur == 0) {
                next[1] += cur[0] * BigInt(4);
            } else {
                if (dcur + 1 < next.size()) next[dcur + 1] += cur[dcur] * BigInt(3);
                next[dcur - 1] += cur[dcur];
            }
        }
        cur = std::move(next);
    }
    return BigRat(cur[0], BigInt::pow(BigInt(4), static_cast<unsigned>(two_n)));
}

OrbitStabCheck orbit_stabilizer_check(
    const std::function<long long(long long, long long)>& mul,
    const std::function<long long(long long)>& inv, long long order,
    const std::vector<long long>& A,
    const std::function<long long(long long, long long)>& action, long long x) {
    (void)order;
    std::set<long long> orbit;
    for (long long a : A) orbit.insert(action(a, x));
    std::set<long long> AinvA;
    for (long long a : A)
        for (long long b : A) AinvA.insert(mul(inv(a), b));
    long long stab_count = 0;
    for (long long g : AinvA)
        if (action(g, x) == x) ++stab_count;
    OrbitStabCheck chk;
    chk.lhs = stab_count;
    chk.rhs = static_cast<double>(A.size()) / static_cast<double>(orbit.size());
    chk.holds = static_cast<double>(chk.lhs) >= chk.rhs - 1e-12;
    return chk;
}

ConjugacyCheck conjugation_check(const std::function<long long(long long, long long)>& mul,
                                 const std::function<long long(long long)>& inv,
                                 long long order, const std::vector<long long>& A, long long g,
                                 int l) {
    // centralizer condition via commuting test, conjugacy class of g
    std::vector<long long> Cl;
    for (long long h = 0; h < order; ++h) Cl.push_back(mul(mul(h, g), inv(h)));
    std::set<long long> cls(Cl.begin(), Cl.end());
    std::set<long long> AinvA;
    for (long long a : A)
        for (long long b : A) AinvA.insert(mul(inv(a), b));
    long long lhs = 0;
    for (long long h : AinvA)
        if (mul(h, g) == mul(g, h)) ++lhs;
    // A^{l+1} A^{-1}
    std::set<long long> power{0};
    for (int i = 0; i < l + 1; ++i) {
        std::set<long long> next;
        for (long long x : power)
            for (long long a : A) next.insert(mul(x, a));
        power = std::move(next);
    }
    std::set<long long> PA;
    for (long long x : power)
        for (long long a : A) PA.insert(mul(x, inv(a)));
    long long cut = 0;
    for (long long x : PA)
        if (cls.count(x)) ++cut;
    ConjugacyCheck chk;
    chk.lhs = lhs;
    chk.orbit_cut = cut;
    chk.holds = cut > 0 && static_cast<double>(lhs) >=
                               static_cast<double>(A.size()) / static_cast<double>(cut) - 1e-12;
    return chk;
}

}  // namespace groups
}  // namespace arithlab
