#pragma once

#include <string>
#include <vector>

#include "arithlab/qseries.hpp"

namespace arithlab {
namespace modforms {

/// Normalized Eisenstein series E_2k as an exact q-series (integer
/// coefficients except for weight 12), weights 4..14.
QSeries eisenstein(int weight, long long precision);

/// Discriminant cusp form (E4^3 - E6^2)/1728 to the given precision.
/// Every coefficient is asserted integral.
QSeries delta_series(long long precision);

/// Ramanujan tau(n).
BigInt tau(long long n);

/// Hecke operator T_n on a level-1 form of the series' weight.
/// Output precision floor(input/n); requires enough input precision.
QSeries hecke_Tn(const QSeries& f, long long n);

struct EigenformReport {
    bool ok = true;
    std::string first_violation;  // empty when ok
};

/// Checks weak multiplicativity and the prime-power recursion on the
/// stored coefficients; requires a_1 = 1.
EigenformReport is_normalized_eigenform(const QSeries& f,
                                        const std::vector<long long>& primes);

/// Theta series of an even unimodular lattice through q^N by exact vector
/// enumeration; the parallel kernel and the serial reference agree.
QSeries theta_series(const EvenLattice& L, long long precision, bool serial_reference = false);

struct SigmaIdentityReport {
    bool eq_2_13_ok = true;
    bool eq_2_14_ok = true;
    long long first_failure_n = 0;
};

/// sigma_7(n) = sigma_3(n) + 120 sum sigma_3(m) sigma_3(n-m), and
/// 11 sigma_9(n) = 21 sigma_5(n) - 10 sigma_3(n) + 5040 sum sigma_3(m) sigma_5(n-m),
/// both checked exactly for all n <= N with the convolution running m = 1..n-1.
SigmaIdentityReport verify_sigma_identities(long long N);

}  // namespace modforms
}  // namespace arithlab
