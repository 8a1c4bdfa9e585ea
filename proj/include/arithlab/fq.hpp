#pragma once

#include <cstdint>
#include <memory>
#include <vector>
#include <string>

namespace arithlab {

/// Residue in Z/NZ, always reduced into [0, N).
class ZmodN {
public:
    ZmodN(long long modulus, long long value);
    long long modulus() const { return n_; }
    long long value() const { return v_; }

    ZmodN operator+(const ZmodN& o) const;
    ZmodN operator-(const ZmodN& o) const;
    ZmodN operator*(const ZmodN& o) const;
    ZmodN inverse() const;
    ZmodN pow(long long e) const;
    bool operator==(const ZmodN& o) const = default;

private:
    long long n_, v_;
    void check(const ZmodN& o) const;
};

class FqElement;

/// F_q = F_p[t]/(m(t)) with m the lexicographically smallest monic
/// irreducible of the right degree (smallest coefficient tuple from the
/// leading side down), so discrete logarithms reproduce across runs.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    /// q = p^d; q <= 2^16 enforced via the defining-polynomial search.
    static std::shared_ptr<const FiniteField> make(long long p, int d);

    long long p() const { return p_; }
    int degree() const { return d_; }
    long long q() const { return q_; }
    const std::vector<long long>& modulus_poly() const { return mod_; }

    FqElement zero() const;
    FqElement one() const;
    FqElement generator_t() const;                 // the class of t
    FqElement from_coeffs(std::vector<long long> c) const;
    FqElement from_int(long long c) const;
    /// Element from its index in the lexicographic enumeration.
    FqElement element(long long index) const;

    /// Smallest-index multiplicative generator, deterministic.
    FqElement multiplicative_generator() const;

private:
    long long p_, q_;
    int d_;
    std::vector<long long> mod_;  // monic, degree d, lowest-first
    FiniteField(long long p, int d, std::vector<long long> mod);
    friend class FqElement;
};

/// Element of a FiniteField; coefficient vector length = field degree.
class FqElement {
public:
    FqElement() = default;

    const std::shared_ptr<const FiniteField>& field() const { return f_; }
    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const;
    long long index() const;  // lexicographic index in [0, q)

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator*(const FqElement& o) const;
    FqElement inverse() const;
    FqElement pow(long long e) const;
    bool operator==(const FqElement& o) const;

    /// Multiplicative order; element must be nonzero.
    long long order() const;

    std::string to_string() const;

private:
    std::shared_ptr<const FiniteField> f_;
    std::vector<long long> c_;
    FqElement(std::shared_ptr<const FiniteField> f, std::vector<long long> c);
    friend class FiniteField;
};

/// Baby-step/giant-step discrete logarithm: smallest k >= 0 with base^k ==
/// target. base must generate the multiplicative group; target nonzero.
long long discrete_log(const FqElement& base, const FqElement& target);

}  // namespace arithlab
