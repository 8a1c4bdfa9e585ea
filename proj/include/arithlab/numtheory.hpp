#pragma once

#include <cstdint>
#include <vector>
#include <utility>

#include "arithlab/bigint.hpp"

namespace arithlab {

/// Elementary multiplicative number theory over machine-size inputs
/// (factorization by trial division, deterministic Miller-Rabin below
/// 3.3e14; larger inputs are rejected).
namespace nt {

inline constexpr long long kPrimalityBound = 330000000000000LL;  // 3.3e14

bool is_prime(long long n);

/// prime -> exponent pairs, ascending primes. n >= 1, n <= 1e12 intended.
std::vector<std::pair<long long, int>> factor(long long n);

std::vector<long long> divisors(long long n);

long long euler_phi(long long n);
int moebius_mu(long long n);
/// sigma_k(n) = sum of k-th powers of divisors, exact.
BigInt sigma_k(long long n, unsigned k);

/// Legendre symbol (a/p) for odd prime p.
int legendre_symbol(long long a, long long p);

/// Smallest positive generator of (Z/pZ)*.
long long primitive_root(long long p);

long long pow_mod(long long b, long long e, long long m);
long long inv_mod(long long a, long long m);

/// Primes up to n inclusive.
std::vector<long long> primes_up_to(long long n);

}  // namespace nt
}  // namespace arithlab
