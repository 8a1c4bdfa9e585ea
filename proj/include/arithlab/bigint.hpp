#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>
#include <compare>

namespace arithlab {

/// Arbitrary-precision signed integer, sign-magnitude over 64-bit limbs.
/// Multiplication switches to Karatsuba above a limb threshold; division is
/// Knuth algorithm D. All operations are exact.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal) { return BigInt(decimal); }
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const { return sign_ == 0 || (limbs_[0] & 1u) == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);  // truncated toward zero
    BigInt& operator%=(const BigInt& o);  // sign follows dividend

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(BigInt a, const BigInt& b) { a /= b; return a; }
    friend BigInt operator%(BigInt a, const BigInt& b) { a %= b; return a; }

    /// Quotient and remainder with |r| < |b| and r matching the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    /// Euclidean remainder in [0, |b|).
    BigInt mod_euclid(const BigInt& b) const;

    BigInt& operator<<=(unsigned bits);
    BigInt& operator>>=(unsigned bits);
    friend BigInt operator<<(BigInt a, unsigned b) { a <<= b; return a; }
    friend BigInt operator>>(BigInt a, unsigned b) { a >>= b; return a; }

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const = default;

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt lcm(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long long e);
    /// floor(sqrt(n)); n must be >= 0.
    static BigInt isqrt(const BigInt& n);
    /// true iff n is a perfect square (n >= 0).
    static bool is_square(const BigInt& n, BigInt* root = nullptr);

    /// Number of bits in |x|; 0 for x = 0.
    size_t bit_length() const;
    bool bit(size_t i) const;

    /// Nearest double (may overflow to +-inf for huge values).
    double to_double() const;
    /// log |x| for x != 0, accurate to ~1e-14 relative even for huge x.
    double log_abs() const;

    /// Checked conversion; throws std::overflow_error when out of range.
    long long to_int64() const;

    bool fits_int64() const;

    size_t limb_count() const { return limbs_.size(); }

    // exposed for the Karatsuba recursion helpers
    static std::vector<uint64_t> mul_school(const uint64_t* a, size_t na,
                                            const uint64_t* b, size_t nb);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

    struct Hash {
        size_t operator()(const BigInt& x) const;
    };

private:
    // little-endian limbs, no trailing zeros; sign_ == 0 iff limbs_ empty
    std::vector<uint64_t> limbs_;
    int sign_ = 0;

    void trim();
    static int cmp_abs(const BigInt& a, const BigInt& b);
    static std::vector<uint64_t> add_abs(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    // requires |a| >= |b|
    static std::vector<uint64_t> sub_abs(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static std::vector<uint64_t> mul_abs(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static void divmod_abs(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                           std::vector<uint64_t>& q, std::vector<uint64_t>& r);
};

/// Exact rational p/q in lowest terms, q > 0.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long v) : num_(v), den_(1) {}
    BigRat(int v) : num_(v), den_(1) {}
    BigRat(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRat(BigInt n, BigInt d);
    /// Parses "p/q" or a plain integer string.
    explicit BigRat(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    BigRat operator-() const;
    BigRat& operator+=(const BigRat& o);
    BigRat& operator-=(const BigRat& o);
    BigRat& operator*=(const BigRat& o);
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { a += b; return a; }
    friend BigRat operator-(BigRat a, const BigRat& b) { a -= b; return a; }
    friend BigRat operator*(BigRat a, const BigRat& b) { a *= b; return a; }
    friend BigRat operator/(BigRat a, const BigRat& b) { a /= b; return a; }

    std::strong_ordering operator<=>(const BigRat& o) const;
    bool operator==(const BigRat& o) const = default;

    BigRat abs() const;
    BigRat inverse() const;

    /// floor of the rational as a BigInt
    BigInt floor() const;
    BigInt ceil() const;

    double to_double() const;
    std::string to_string() const;  // "p/q", or "p" when integral

    friend std::ostream& operator<<(std::ostream& os, const BigRat& x);

    struct Hash {
        size_t operator()(const BigRat& x) const;
    };

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace arithlab
