#pragma once

#include <vector>
#include <string>

#include "arithlab/bigint.hpp"

namespace arithlab {

/// Dense polynomial over Q, coefficients lowest degree first, no trailing
/// zero coefficients (zero polynomial = empty vector). Degree cap 1e5.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> c) : c_(std::move(c)) { trim(); }
    static RatPoly constant(const BigRat& v);
    static RatPoly x();  // the monomial x
    static RatPoly monomial(size_t deg, const BigRat& coef);

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const BigRat& coef(size_t i) const;
    const std::vector<BigRat>& coefs() const { return c_; }
    const BigRat& lead() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const BigRat& v) const;
    bool operator==(const RatPoly& o) const = default;

    /// Division with remainder: *this = q * d + r, deg r < deg d.
    void divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const;

    RatPoly derivative() const;
    BigRat eval(const BigRat& x) const;

    static RatPoly gcd(RatPoly a, RatPoly b);  // monic gcd
    /// Extended gcd: returns g (monic) and s, t with s*a + t*b = g.
    static RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<BigRat> c_;
    void trim();
};

/// Dense polynomial over Z, coefficients lowest degree first.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }
    static IntPoly constant(const BigInt& v);
    static IntPoly from_int_list(const std::vector<long long>& c);

    bool is_zero() const { return c_.empty(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const BigInt& coef(size_t i) const;
    const std::vector<BigInt>& coefs() const { return c_; }
    const BigInt& lead() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const = default;

    BigInt eval(const BigInt& x) const;
    IntPoly derivative() const;

    BigInt content() const;           // gcd of coefficients, >= 0 (0 for zero poly)
    IntPoly primitive_part() const;   // content removed, sign of lead preserved

    /// Exact division; throws std::domain_error when not divisible.
    IntPoly divide_exact(const IntPoly& d) const;
    /// true iff d divides *this over Z.
    bool divisible_by(const IntPoly& d) const;

    /// Reversal x^deg * f(1/x).
    IntPoly reversed() const;

    RatPoly to_rat() const;
    /// Clears denominators and removes content: primitive integer multiple.
    static IntPoly from_rat_primitive(const RatPoly& p);

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<BigInt> c_;
    void trim();
};

/// Sylvester-matrix resultant of f and g over Z.
BigInt resultant(const IntPoly& f, const IntPoly& g);
/// Discriminant via a_n * D(f) = (-1)^(n(n-1)/2) R(f, f'); exact rational.
BigRat discriminant(const IntPoly& f);

/// n-th cyclotomic polynomial by exact division of x^n - 1.
IntPoly cyclotomic_poly(long long n);

/// Factorization into irreducible primitive factors (Zassenhaus: Berlekamp
/// mod p, Hensel lifting, subset recombination); degree cap 64. The unit
/// content is returned separately.
struct IntFactorization {
    BigInt content;                                   // signed content
    std::vector<std::pair<IntPoly, int>> factors;     // irreducible^multiplicity
};
IntFactorization factor_int_poly(const IntPoly& f);

/// true iff the primitive polynomial f is irreducible over Q (deg >= 1).
bool is_irreducible(const IntPoly& f);

}  // namespace arithlab
