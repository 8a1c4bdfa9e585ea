#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithlab/bigint.hpp"

namespace arithlab {
namespace ec {

/// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q
/// with the standard derived invariants; Delta != 0 enforced.
class WeierstrassCurve {
public:
    WeierstrassCurve(BigRat a1, BigRat a2, BigRat a3, BigRat a4, BigRat a6);

    const BigRat& a1() const { return a1_; }
    const BigRat& a2() const { return a2_; }
    const BigRat& a3() const { return a3_; }
    const BigRat& a4() const { return a4_; }
    const BigRat& a6() const { return a6_; }
    const BigRat& b2() const { return b2_; }
    const BigRat& b4() const { return b4_; }
    const BigRat& b6() const { return b6_; }
    const BigRat& b8() const { return b8_; }
    const BigRat& c4() const { return c4_; }
    const BigRat& c6() const { return c6_; }
    const BigRat& disc() const { return disc_; }
    const BigRat& j() const { return j_; }

    bool is_integral() const;
    /// Admissible change (u, r, s, t): x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    WeierstrassCurve transformed(const BigRat& u, const BigRat& r, const BigRat& s,
                                 const BigRat& t) const;
    /// An integral model of the same curve (scales by the coefficient lcm).
    WeierstrassCurve integral_model() const;

    bool operator==(const WeierstrassCurve& o) const = default;

private:
    BigRat a1_, a2_, a3_, a4_, a6_;
    BigRat b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
};

/// Point on a curve: infinity or exact affine coordinates (on-curve checked).
class CurvePoint {
public:
    CurvePoint() : inf_(true) {}  // point at infinity
    CurvePoint(const WeierstrassCurve& E, BigRat x, BigRat y);

    bool is_infinity() const { return inf_; }
    const BigRat& x() const;
    const BigRat& y() const;

    std::string to_string() const;
    bool operator==(const CurvePoint& o) const;

private:
    bool inf_ = true;
    BigRat x_, y_;
};

CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint mul(const WeierstrassCurve& E, long long n, const CurvePoint& P);

/// x([2]P) as the pair (numerator, denominator) of Eq-(3) duplication
/// polynomials evaluated at x; used as the independent symbolic check.
BigRat duplication_x(const WeierstrassCurve& E, const BigRat& x);

enum class ReductionType { Good, MultiplicativeSplit, MultiplicativeNonSplit, Additive };

struct ReductionData {
    long long p = 0;
    ReductionType type = ReductionType::Good;
    long long ap = 0;
    long long points = 0;        // #E~(F_p) for good p (0 otherwise)
    long long vp_disc_min = 0;   // valuation of the minimal discriminant at p
};

/// Reduction type and a_p at p. Good p counts points exhaustively (p <= 1e5);
/// at p in {2,3} the given model must already be minimal (the minimization
/// implemented here is the Tate-free one valid away from 2 and 3).
ReductionData reduce_and_count(const WeierstrassCurve& E, long long p,
                               bool serial_reference = false);

/// Exhaustive point count of y^2 + a1xy + a3y = f(x) over F_p (parallel over
/// x via a quadratic-residue table; p = 2 is brute force).
long long count_points_mod_p(const WeierstrassCurve& E, long long p,
                             bool serial_reference = false);

/// L-series coefficients a_1..a_N by multiplicative extension of the a_p.
/// |a_n| <= sigma_0(n) sqrt(n) is asserted exactly.
std::vector<BigInt> an_coefficients(const WeierstrassCurve& E, long long N);

struct TorsionGroup {
    std::vector<long long> invariants;  // {} trivial, {n} cyclic, {2, 2n} product
    std::vector<CurvePoint> points;     // all torsion points on the original model
    std::string name() const;
    long long order() const;
};

/// Torsion subgroup by Lutz-Nagell on the integral short model, candidates
/// confirmed by multiplication up to 12; the result is checked against
/// Mazur's list and against the reduction-injection bound at two good primes.
TorsionGroup torsion(const WeierstrassCurve& E);

struct HeightValue {
    double value = 0.0;
    double error = 0.0;
};

/// log H(x(P)) with H(u/v) = max(|u|, |v|).
HeightValue naive_height(const WeierstrassCurve& E, const CurvePoint& P);

/// Neron-Tate height via the Tate telescope h(2^n P)/4^n, with n chosen so
/// the tail bound c1/(3*4^n) < eps; c1 is the explicit doubling-discrepancy
/// bound derived from Bezout cofactors of the duplication polynomials.
HeightValue canonical_height(const WeierstrassCurve& E, const CurvePoint& P, double eps);

/// The doubling-discrepancy constant |h(2P) - 4h(P)| <= c1 used above.
double tate_c1(const WeierstrassCurve& E);

HeightValue height_pairing(const WeierstrassCurve& E, const CurvePoint& P,
                           const CurvePoint& Q, double eps);

/// det(<P_i, P_j>) with interval error propagation; empty list gives 1.
HeightValue regulator(const WeierstrassCurve& E, const std::vector<CurvePoint>& pts,
                      double eps);

struct LocalRootNumber {
    long long p;        // 0 = infinite place
    int sign;           // +1 / -1, or 0 when undetermined
    std::string reason;
};

struct RootNumberResult {
    bool determined = true;
    int sign = 1;                      // product over determined places
    std::vector<LocalRootNumber> local_factors;
    std::vector<long long> undetermined_places;
};

/// Global root number as the product of local signs; additive potentially
/// good reduction at p in {2,3} is reported as undetermined, never guessed.
RootNumberResult root_number(const WeierstrassCurve& E);

struct ConductorResult {
    BigInt odd_part_away_23;  // exact product over bad p >= 5
    int exp2_low = 0, exp2_high = 0;
    int exp3_low = 0, exp3_high = 0;
};

/// Conductor exponents: 1 multiplicative / 2 additive for p >= 5 exact; at
/// 2 and 3 the bracket the volume gives (2..8 at 2, 2..5 at 3).
ConductorResult conductor_away_23(const WeierstrassCurve& E);

}  // namespace ec
}  // namespace arithlab
