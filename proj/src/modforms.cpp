#include "arithlab/modforms.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "arithlab/numtheory.hpp"
#include "arithlab/quadform.hpp"

namespace arithlab {
namespace modforms {

QSeries eisenstein(int weight, long long precision) {
    if (weight % 2 != 0 || weight < 4)
        throw std::domain_error("eisenstein: weight must be even and >= 4");
    if (precision < 0) throw std::domain_error("eisenstein: negative precision");
    BigRat c;
    switch (weight) {
        case 4: c = BigRat(240); break;
        case 6: c = BigRat(-504); break;
        case 8: c = BigRat(480); break;
        case 10: c = BigRat(-264); break;
        case 12: c = BigRat(BigInt(65520), BigInt(691)); break;
        case 14: c = BigRat(-24); break;
        default:
            throw std::domain_error("eisenstein: weight must be one of 4,6,8,10,12,14");
    }
    std::vector<BigRat> a(static_cast<size_t>(precision) + 1, BigRat(0));
    a[0] = BigRat(1);
    unsigned k = static_cast<unsigned>(weight - 1);
    for (long long n = 1; n <= precision; ++n)
        a[static_cast<size_t>(n)] = c * BigRat(nt::sigma_k(n, k));
    return QSeries(weight, std::move(a));
}

QSeries delta_series(long long precision) {
    if (precision < 1) throw std::domain_error("delta_series: precision must be >= 1");
    QSeries e4 = eisenstein(4, precision);
    QSeries e6 = eisenstein(6, precision);
    QSeries num = e4 * e4 * e4 - e6 * e6;
    QSeries d = num.scaled(BigRat(BigInt(1), BigInt(1728)));
    if (!d.is_integral())
        throw std::logic_error("delta_series: coefficients failed integrality");
    return QSeries(12, d.coeffs());
}

BigInt tau(long long n) {
    if (n < 1) throw std::domain_error("tau: n must be >= 1");
    static std::map<long long, BigInt> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    QSeries d = delta_series(n);
    for (long long m = 1; m <= n; ++m) cache[m] = d.coeff(static_cast<size_t>(m)).num();
    return cache[n];
}

QSeries hecke_Tn(const QSeries& f, long long n) {
    if (n < 1) throw std::domain_error("hecke_Tn: n must be >= 1");
    long long out_prec = f.precision() / n;
    if (out_prec < 1)
        throw std::domain_error("hecke_Tn: input precision " + std::to_string(f.precision()) +
                                " too small; need at least " + std::to_string(n) +
                                " for one output coefficient");
    unsigned km1 = static_cast<unsigned>(f.weight() - 1);
    std::vector<BigRat> a(static_cast<size_t>(out_prec) + 1, BigRat(0));
    for (long long m = 0; m <= out_prec; ++m) {
        BigRat s(0);
        if (m == 0) {
            // a_0(T_n f) = sigma_{k-1}(n) a_0(f)
            s = BigRat(nt::sigma_k(n, km1)) * f.coeff(0);
        } else {
            long long g = std::gcd(m, n);
            for (long long d : nt::divisors(g)) {
                long long idx = n * m / (d * d);
                s += BigRat(BigInt::pow(BigInt(d), km1)) * f.coeff(static_cast<size_t>(idx));
            }
        }
        a[static_cast<size_t>(m)] = s;
    }
    return QSeries(f.weight(), std::move(a));
}

EigenformReport is_normalized_eigenform(const QSeries& f,
                                        const std::vector<long long>& primes) {
    EigenformReport rep;
    if (!(f.coeff(1) == BigRat(1)))
        throw std::domain_error("is_normalized_eigenform: a_1 must be 1");
    long long N = f.precision();
    BigInt pk = BigInt::pow(BigInt(1), 0);
    // weak multiplicativity a_{mn} = a_m a_n for coprime m, n
    for (long long m = 2; m <= N; ++m) {
        for (long long n = 2; m * n <= N; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (!(f.coeff(static_cast<size_t>(m * n)) ==
                  f.coeff(static_cast<size_t>(m)) * f.coeff(static_cast<size_t>(n)))) {
                rep.ok = false;
                rep.first_violation = "a_{mn} != a_m a_n at (m,n) = (" + std::to_string(m) +
                                      "," + std::to_string(n) + ")";
                return rep;
            }
        }
    }
    // a_p a_{p^s} = a_{p^{s+1}} + p^{2k-1} a_{p^{s-1}}
    unsigned km1 = static_cast<unsigned>(f.weight() - 1);
    for (long long p : primes) {
        BigRat pw(BigInt::pow(BigInt(p), km1));
        long long ps = p;  // p^s
        for (int s = 1;; ++s) {
            long long ps1 = ps * p;
            if (ps1 > N) break;
            BigRat lhs = f.coeff(static_cast<size_t>(p)) * f.coeff(static_cast<size_t>(ps));
            BigRat rhs = f.coeff(static_cast<size_t>(ps1)) +
                         pw * f.coeff(static_cast<size_t>(ps / p));
            if (!(lhs == rhs)) {
                rep.ok = false;
                rep.first_violation = "recursion fails at p = " + std::to_string(p) +
                                      ", s = " + std::to_string(s);
                return rep;
            }
            ps = ps1;
        }
    }
    return rep;
}

QSeries theta_series(const EvenLattice& L, long long precision, bool serial_reference) {
    if (precision < 0) throw std::domain_error("theta_series: negative precision");
    size_t n = L.rank();
    RatMatrix gram(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gram.at(i, j) = BigRat(L.gram()[i][j]);
    QuadFormEnumerator en(gram);
    // Q(x) = (1/2) x^T G x = m exactly when ||x||^2 = 2m
    std::vector<long long> counts =
        serial_reference ? en.counts_by_value_serial(BigRat(1), static_cast<size_t>(precision))
                         : en.counts_by_value(BigRat(1), static_cast<size_t>(precision));
    std::vector<BigRat> a(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) a[i] = BigRat(counts[i]);
    int weight = static_cast<int>(n / 2);
    return QSeries(weight, std::move(a));
}

SigmaIdentityReport verify_sigma_identities(long long N) {
    SigmaIdentityReport rep;
    for (long long n = 1; n <= N; ++n) {
        BigInt conv33(0), conv35(0);
        for (long long m = 1; m <= n - 1; ++m) {
            conv33 += nt::sigma_k(m, 3) * nt::sigma_k(n - m, 3);
            conv35 += nt::sigma_k(m, 3) * nt::sigma_k(n - m, 5);
        }
        if (!(nt::sigma_k(n, 7) == nt::sigma_k(n, 3) + BigInt(120) * conv33)) {
            rep.eq_2_13_ok = false;
            rep.first_failure_n = n;
            return rep;
        }
        if (!(BigInt(11) * nt::sigma_k(n, 9) ==
              BigInt(21) * nt::sigma_k(n, 5) - BigInt(10) * nt::sigma_k(n, 3) +
                  BigInt(5040) * conv35)) {
            rep.eq_2_14_ok = false;
            rep.first_failure_n = n;
            return rep;
        }
    }
    return rep;
}

}  // namespace modforms
}  // namespace arithlab
