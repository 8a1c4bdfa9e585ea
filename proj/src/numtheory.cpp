#include "arithlab/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace arithlab {
namespace nt {

using u128 = unsigned __int128;

long long pow_mod(long long b, long long e, long long m) {
    if (m <= 0) throw std::domain_error("pow_mod: modulus must be positive");
    u128 r = 1, bb = static_cast<u128>(((b % m) + m) % m);
    while (e > 0) {
        if (e & 1) r = r * bb % static_cast<u128>(m);
        bb = bb * bb % static_cast<u128>(m);
        e >>= 1;
    }
    return static_cast<long long>(r);
}

long long inv_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        long long q = g / a1;
        g -= q * a1; std::swap(g, a1);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("inv_mod: not invertible");
    return ((x % m) + m) % m;
}

static bool miller_rabin(long long n, long long a) {
    if (a % n == 0) return true;
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    long long x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = static_cast<long long>(static_cast<u128>(x) * x % static_cast<u128>(n));
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n > kPrimalityBound)
        throw std::domain_error("is_prime: input exceeds the deterministic bound 3.3e14");
    // deterministic witness set valid beyond 3.3e14
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL})
        if (!miller_rabin(n, a)) return false;
    return true;
}

std::vector<std::pair<long long, int>> factor(long long n) {
    if (n < 1) throw std::domain_error("factor: n must be >= 1");
    std::vector<std::pair<long long, int>> f;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<long long> divisors(long long n) {
    auto f = factor(n);
    std::vector<long long> ds{1};
    for (auto [p, e] : f) {
        size_t sz = ds.size();
        long long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long long euler_phi(long long n) {
    long long r = n;
    for (auto [p, e] : factor(n)) r = r / p * (p - 1);
    return r;
}

int moebius_mu(long long n) {
    int sign = 1;
    for (auto [p, e] : factor(n)) {
        if (e >= 2) return 0;
        sign = -sign;
    }
    return sign;
}

BigInt sigma_k(long long n, unsigned k) {
    BigInt r(1);
    for (auto [p, e] : factor(n)) {
        // 1 + p^k + ... + p^(e*k)
        BigInt term(1), pk = BigInt::pow(BigInt(p), k), pw(1);
        for (int i = 1; i <= e; ++i) {
            pw *= pk;
            term += pw;
        }
        r *= term;
    }
    return r;
}

int legendre_symbol(long long a, long long p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("legendre_symbol: p must be an odd prime");
    long long r = pow_mod(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

long long primitive_root(long long p) {
    if (!is_prime(p)) throw std::domain_error("primitive_root: p must be prime");
    if (p == 2) return 1;
    long long phi = p - 1;
    auto f = factor(phi);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : f) {
            if (pow_mod(g, phi / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> ps;
    if (n < 2) return ps;
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    for (long long i = 2; i <= n; ++i) {
        if (sieve[static_cast<size_t>(i)]) {
            ps.push_back(i);
            for (long long j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
        }
    }
    return ps;
}

}  // namespace nt
}  // namespace arithlab
