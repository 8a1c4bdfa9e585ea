#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "arithlab/heights.hpp"
#include "arithlab/numtheory.hpp"

using namespace arithlab;
using namespace arithlab::heights;

TEST_CASE("certified roots: quadratics and cyclotomics") {
    // x^2 - x - 1: roots phi and 1 - phi
    auto a = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, -1, 1}));
    REQUIRE(a.conjugates().size() == 2);
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    bool saw_phi = false, saw_conj = false;
    for (const auto& rt : a.conjugates()) {
        double re = rt.z.re.to_double();
        CHECK(rt.radius.to_double() <= 1e-20);
        if (std::abs(re - phi) < 1e-12) saw_phi = true;
        if (std::abs(re - (1.0 - phi)) < 1e-12) saw_conj = true;
    }
    CHECK(saw_phi);
    CHECK(saw_conj);
    // reducible and imprimitive inputs rejected
    CHECK_THROWS(AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, 0, 1})));
    CHECK_THROWS(AlgebraicNumber::from_min_poly(IntPoly::from_int_list({2, 0, 2})));
}

TEST_CASE("mahler measure fixtures") {
    // x^n - 1 -> 1
    for (int n : {1, 2, 6, 12}) {
        std::vector<long long> c(static_cast<size_t>(n) + 1, 0);
        c[0] = -1;
        c[static_cast<size_t>(n)] = 1;
        auto m = mahler_measure(IntPoly::from_int_list(c));
        CHECK(m.value == doctest::Approx(1.0).epsilon(1e-10));
    }
    // x^2 - x - 1 -> golden ratio
    auto m = mahler_measure(IntPoly::from_int_list({-1, -1, 1}));
    CHECK(m.value == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(m.error < 1e-10);
    // 2x - 1 -> 2
    CHECK(mahler_measure(IntPoly::from_int_list({-1, 2})).value == doctest::Approx(2.0));
    // Lehmer's degree-10 polynomial: regression fixture
    auto lehmer = mahler_measure(
        IntPoly::from_int_list({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}));
    CHECK(lehmer.value == doctest::Approx(1.17628081825991).epsilon(1e-10));
}

TEST_CASE("mahler multiplicativity and reversal invariance") {
    std::mt19937_64 rng(808);
    int done = 0;
    while (done < 12) {
        std::vector<long long> c1(4), c2(5);
        for (auto& v : c1) v = static_cast<long long>(rng() % 9) - 4;
        for (auto& v : c2) v = static_cast<long long>(rng() % 9) - 4;
        IntPoly f = IntPoly::from_int_list(c1), g = IntPoly::from_int_list(c2);
        if (f.degree() < 1 || g.degree() < 1) continue;
        if (f.coef(0).is_zero() || g.coef(0).is_zero()) continue;
        auto mf = mahler_measure(f), mg = mahler_measure(g), mfg = mahler_measure(f * g);
        CHECK(mfg.value == doctest::Approx(mf.value * mg.value).epsilon(1e-9));
        auto mr = mahler_measure(f.reversed());
        CHECK(mr.value == doctest::Approx(mf.value).epsilon(1e-10));
        ++done;
    }
}

TEST_CASE("weil heights") {
    // h(2) = log 2
    auto two = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-2, 1}));
    CHECK(weil_height(two).value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    // h(zeta_12) = 0
    auto z12 = AlgebraicNumber::from_min_poly(cyclotomic_poly(12));
    CHECK(std::abs(weil_height(z12).value) < 1e-12);
    // h(phi) = (1/2) log phi
    auto phi = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, -1, 1}));
    CHECK(weil_height(phi).value ==
          doctest::Approx(0.5 * std::log((1.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
    // h(alpha) = h(1/alpha) via the reversed polynomial
    auto third = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, 3}));  // 1/3
    auto three = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-3, 1}));
    CHECK(weil_height(third).value == doctest::Approx(weil_height(three).value).epsilon(1e-12));
    auto rev = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, -1, 1}).reversed());
    CHECK(weil_height(rev).value == doctest::Approx(weil_height(phi).value).epsilon(1e-12));
}

TEST_CASE("kronecker root-of-unity test") {
    CHECK(is_root_of_unity(AlgebraicNumber::from_min_poly(cyclotomic_poly(7))));
    CHECK(is_root_of_unity(AlgebraicNumber::from_min_poly(cyclotomic_poly(1))));   // 1
    CHECK(is_root_of_unity(AlgebraicNumber::from_min_poly(cyclotomic_poly(2))));   // -1
    CHECK(is_root_of_unity(AlgebraicNumber::from_min_poly(cyclotomic_poly(12))));
    CHECK(!is_root_of_unity(AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, -1, 1}))));
    CHECK(!is_root_of_unity(AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-2, 1}))));
    // monic, all roots on the circle, but not cyclotomic cannot exist (Kronecker);
    // non-monic with roots inside the disc: 2x^2 + 1
    CHECK(!is_root_of_unity(AlgebraicNumber::from_min_poly(IntPoly::from_int_list({1, 0, 2}))));
}

TEST_CASE("minimal polynomial of powers and height scaling") {
    auto phi = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, -1, 1}));
    // phi^2 = phi + 1 has minimal polynomial x^2 - 3x + 1
    IntPoly p2 = min_poly_of_power(phi, 2);
    CHECK(p2 == IntPoly::from_int_list({1, -3, 1}));
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 8) {
        std::vector<long long> c(4);
        for (auto& v : c) v = static_cast<long long>(rng() % 7) - 3;
        IntPoly f = IntPoly::from_int_list(c);
        if (f.degree() < 2 || !is_irreducible(f)) continue;
        auto a = AlgebraicNumber::from_min_poly(f.lead().is_negative() ? -f : f);
        double h = weil_height(a).value;
        for (long long k = 2; k <= 5; ++k) {
            IntPoly mk = min_poly_of_power(a, k);
            CHECK(mk.degree() <= a.degree());
            auto ak = AlgebraicNumber::from_min_poly(mk);
            double hk = weil_height(ak).value;
            CHECK(hk <= k * h + 1e-9);
        }
        ++done;
    }
}

TEST_CASE("orbit energy and the energy-height comparison") {
    // phi: orbit {phi, 1-phi}, E' = -(2/4) log sqrt(5) = -(1/4) log 5... the
    // two-point orbit has E' = -(1/4) * 2 log|phi - (1-phi)| / ... directly:
    auto phi = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-1, -1, 1}));
    auto e = orbit_energy(phi);
    CHECK(e.value == doctest::Approx(-0.25 * std::log(5.0)).epsilon(1e-10));
    auto gap = energy_height_gap(phi);
    CHECK(gap.value >= -gap.error);
    // roots of unity: E' <= 0 = 2h
    for (long long n : {5LL, 8LL, 12LL}) {
        auto z = AlgebraicNumber::from_min_poly(cyclotomic_poly(n));
        CHECK(orbit_energy(z).value <= 1e-10);
        energy_height_gap(z);  // must not throw
    }
    // degree 1: E' = 0 by the empty-sum convention, gap = 2h
    auto five = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-5, 1}));
    CHECK(orbit_energy(five).value == 0.0);
    CHECK(energy_height_gap(five).value == doctest::Approx(2.0 * std::log(5.0)).epsilon(1e-10));
}

TEST_CASE("random algebraic numbers satisfy E' <= 2h") {
    std::mt19937_64 rng(5150);
    int done = 0;
    while (done < 30) {
        int deg = 2 + static_cast<int>(rng() % 5);
        std::vector<long long> c(static_cast<size_t>(deg) + 1);
        for (auto& v : c) v = static_cast<long long>(rng() % 19) - 9;
        IntPoly f = IntPoly::from_int_list(c);
        if (f.degree() != deg) continue;
        f = f.primitive_part();
        if (f.lead().is_negative()) f = -f;
        if (!is_irreducible(f)) continue;
        auto a = AlgebraicNumber::from_min_poly(f);
        energy_height_gap(a);  // throws if E' > 2h
        ++done;
    }
}

TEST_CASE("ramanujan sums") {
    CHECK(ramanujan_sum(12, 4) == -2);
    for (long long n : {1LL, 2LL, 6LL, 10LL, 101LL})
        CHECK(ramanujan_sum(n, n) == nt::euler_phi(n));
    for (long long p : {3LL, 7LL, 11LL})
        for (long long k : {1LL, 2LL, 5LL})
            if (k % p != 0) CHECK(ramanujan_sum(p, k) == -1);
    // double route agrees for a grid (throws internally otherwise)
    for (long long n = 1; n <= 60; ++n)
        for (long long k = 1; k <= 12; ++k) ramanujan_sum(n, k);
}

TEST_CASE("equidistribution statistics of roots of unity") {
    // mu~_n: k-th Weyl sum has modulus |S(n,k)| / phi(n)
    for (long long n : {7LL, 12LL, 30LL}) {
        auto z = AlgebraicNumber::from_min_poly(cyclotomic_poly(n));
        auto st = equidistribution_stats(z, 6);
        CHECK(st.modulus_window_ok);
        for (int k = 1; k <= 6; ++k) {
            double expect = std::abs(static_cast<double>(ramanujan_sum(n, k))) /
                            static_cast<double>(nt::euler_phi(n));
            CHECK(st.weyl[static_cast<size_t>(k - 1)] == doctest::Approx(expect).epsilon(1e-8));
        }
    }
    // mu~_101: all Weyl sums 1/100 for k <= 10
    auto z101 = AlgebraicNumber::root_of_unity(101);
    auto st = equidistribution_stats(z101, 10);
    for (double w : st.weyl) CHECK(w == doctest::Approx(0.01).epsilon(1e-7));
    // n = 2 (alpha = -1): single point, maximal discrepancy
    auto m1 = AlgebraicNumber::from_min_poly(cyclotomic_poly(2));
    CHECK(equidistribution_stats(m1, 3).star_discrepancy == doctest::Approx(0.5));
    // an alpha with conjugates off the unit annulus is reported
    auto two = AlgebraicNumber::from_min_poly(IntPoly::from_int_list({-2, 1}));
    CHECK(!equidistribution_stats(two, 2).modulus_window_ok);
}

TEST_CASE("northcott enumeration") {
    // D = 1, B = log 2: rationals with max(|num|, |den|) <= 2
    auto list1 = northcott_enumerate(1, std::log(2.0));
    std::set<std::string> polys;
    for (const auto& e : list1) polys.insert(e.poly.to_string());
    // +-1, +-2, +-1/2 : minimal polynomials x -+ 1, x -+ 2, 2x -+ 1
    CHECK(polys.size() == 6);
    CHECK(polys.count(IntPoly::from_int_list({-1, 1}).to_string()));
    CHECK(polys.count(IntPoly::from_int_list({1, 2}).to_string()));
    // B = 0: exactly roots of unity of degree <= D
    auto list2 = northcott_enumerate(2, 0.0);
    std::set<std::string> got;
    for (const auto& e : list2) {
        CHECK(std::abs(e.height) < 1e-9);
        got.insert(e.poly.to_string());
    }
    std::set<std::string> expect;
    for (long long d : {1LL, 2LL, 3LL, 4LL, 6LL}) expect.insert(cyclotomic_poly(d).to_string());
    CHECK(got == expect);
    auto list4 = northcott_enumerate(4, 0.0);
    std::set<std::string> got4;
    for (const auto& e : list4) got4.insert(e.poly.to_string());
    std::set<std::string> expect4;
    for (long long d : {1LL, 2LL, 3LL, 4LL, 6LL, 5LL, 8LL, 10LL, 12LL})
        expect4.insert(cyclotomic_poly(d).to_string());
    CHECK(got4 == expect4);
    // budget guard: boxes beyond ~5e6 tuples are refused, not ground through
    CHECK_THROWS(northcott_enumerate(3, std::log(3.0)));
    CHECK_THROWS(northcott_enumerate(4, std::log(2.0)));
}
