#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kuga/cyclotomic.hpp"
#include "kuga/exact.hpp"
#include "support.hpp"

using namespace kuga;
using kuga::testing::rng_for;

TEST_SUITE("exact") {

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-4/10") == Rational(-2, 5));
    CHECK(to_string(Rational(-2, 5)) == "-2/5");
    CHECK(to_string(Rational(3)) == "3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("floor and fractional part") {
    CHECK(floor_of(Rational(-1, 3)) == -1);
    CHECK(frac_part(Rational(-1, 3)) == Rational(2, 3));
    CHECK(frac_part(Rational(7, 2)) == Rational(1, 2));
    CHECK(is_integer(Rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
}

TEST_CASE("gaussian rational parsing") {
    CHECK(parse_gaussian("1/2+1/2i") == GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK(parse_gaussian("-i") == GaussianRational(Rational(0), Rational(-1)));
    CHECK(parse_gaussian("3/2i") == GaussianRational(Rational(0), Rational(3, 2)));
    CHECK(parse_gaussian("2") == GaussianRational(Rational(2)));
    CHECK(parse_gaussian("1/3-2i") == GaussianRational(Rational(1, 3), Rational(-2)));
    CHECK_THROWS_AS(parse_gaussian("1/2+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("0.5i"), std::invalid_argument);
    CHECK(parse_gaussian(to_string(GaussianRational(Rational(-5, 3), Rational(7, 4)))) ==
          GaussianRational(Rational(-5, 3), Rational(7, 4)));
}

TEST_CASE("complex float parsing") {
    CHECK(parse_complex("2i") == std::complex<double>(0, 2));
    CHECK(parse_complex("1e-3-0.5i") == std::complex<double>(1e-3, -0.5));
    CHECK(parse_complex("-1") == std::complex<double>(-1, 0));
    CHECK(parse_complex("i") == std::complex<double>(0, 1));
    CHECK(parse_complex("0.2+3i") == std::complex<double>(0.2, 3));
    CHECK_THROWS_AS(parse_complex("1+2j"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
}

TEST_CASE("cyclotomic zero test oracles") {
    const Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK(cyclotomic_is_zero(z3 + z3 * z3 + Cyclotomic(1)));
    CHECK_FALSE(cyclotomic_is_zero(Cyclotomic::zeta(4) + Cyclotomic(1)));
    CHECK(cyclotomic_is_zero(Cyclotomic::zeta(6) - z3 - Cyclotomic(1)));
}

TEST_CASE("root_to_complex oracles") {
    CHECK(std::abs(root_to_complex(RootOfUnity(Rational(0))) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(root_to_complex(RootOfUnity(Rational(1, 2))) - std::complex<double>(-1, 0)) < 1e-15);
    const double h = std::sqrt(2.0) / 2;
    CHECK(std::abs(root_to_complex(RootOfUnity(Rational(1, 8))) - std::complex<double>(h, h)) < 1e-15);
    CHECK(RootOfUnity(Rational(5, 4)) == RootOfUnity(Rational(1, 4)));
    CHECK(RootOfUnity(Rational(-1, 4)).exponent() == Rational(3, 4));
}

TEST_CASE("conductor cap is enforced") {
    CHECK_NOTHROW(Cyclotomic::zeta(720));
    CHECK_THROWS_AS(Cyclotomic::zeta(721), std::domain_error);
    CHECK_THROWS_AS(Cyclotomic::zeta(360) * Cyclotomic::zeta(7), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
    // Phi_12 = x^4 - x^2 + 1, Phi_15 has degree 8 with coefficients in {-1, 0, 1}
    const auto& p12 = cyclotomic_polynomial(12);
    REQUIRE(p12.size() == 5);
    CHECK(p12[0] == 1);
    CHECK(p12[2] == -1);
    CHECK(p12[4] == 1);
    CHECK(cyclotomic_polynomial(15).size() == 9);
    CHECK(euler_phi(720) == 192);
}

TEST_CASE("property: roots of unity have their exact order") {
    auto g = rng_for("root-order");
    for (int trial = 0; trial < 300; ++trial) {
        const RootOfUnity z = kuga::testing::random_root(g, 60);
        const long n = z.order();
        CHECK(z.pow(n).is_one());
        for (long k = 1; k < n; ++k) REQUIRE_FALSE(z.pow(k).is_one());
        // Same statement inside the cyclotomic field.
        CHECK(Cyclotomic::from_root(z).pow(n) == Cyclotomic(1));
    }
}

TEST_CASE("property: exact zero test agrees with the complex embedding") {
    auto g = rng_for("cyclo-embed");
    int zeros = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        // Even trials rebuild x term by term (difference zero); odd trials draw y freshly,
        // which is usually nonzero but occasionally cancels.
        const int m = std::vector<int>{3, 4, 5, 6, 8, 12}[kuga::testing::uniform_int(g, 0, 5)];
        Cyclotomic x(0), y(0);
        const int terms = kuga::testing::uniform_int(g, 1, 4);
        for (int t = 0; t < terms; ++t) {
            const int c = kuga::testing::uniform_int(g, -2, 2);
            const long k = kuga::testing::uniform_int(g, 0, m - 1);
            x += Cyclotomic(c) * Cyclotomic::zeta(m, k);
            if (trial % 2 == 0) {
                y += Cyclotomic(c) * Cyclotomic::zeta(m, k);
            } else {
                y += Cyclotomic(kuga::testing::uniform_int(g, -2, 2)) *
                     Cyclotomic::zeta(m, kuga::testing::uniform_int(g, 0, m - 1));
            }
        }
        const bool exact = cyclotomic_is_zero(x - y);
        const bool numeric = std::abs(x.to_complex() - y.to_complex()) < 1e-10;
        zeros += exact ? 1 : 0;
        REQUIRE(exact == numeric);
    }
    CHECK(zeros >= 500);
}

TEST_CASE("property: cyclotomic identities under promotion") {
    auto g = rng_for("cyclo-promote");
    for (int trial = 0; trial < 100; ++trial) {
        const int m = kuga::testing::uniform_int(g, 1, 30);
        const long k = kuga::testing::uniform_int(g, 0, 2 * m);
        const Cyclotomic a = Cyclotomic::zeta(m, k);
        const int mult = kuga::testing::uniform_int(g, 1, 6);
        CHECK(a.promoted(m * mult) == a);
        CHECK(a * a.inverse() == Cyclotomic(1));
        CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-12);
        // sum of all m-th roots vanishes for m > 1
        if (m > 1) {
            Cyclotomic s(0);
            for (long j = 0; j < m; ++j) s += Cyclotomic::zeta(m, j);
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("property: gaussian rationals form a field") {
    auto g = rng_for("gaussian-field");
    for (int trial = 0; trial < 300; ++trial) {
        const GaussianRational a = kuga::testing::small_gaussian(g);
        const GaussianRational b = kuga::testing::small_gaussian(g);
        const GaussianRational c = kuga::testing::small_gaussian(g);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == GaussianRational(0));
        if (!a.is_zero()) {
            CHECK(a * (GaussianRational(1) / a) == GaussianRational(1));
            CHECK((b / a) * a == b);
        } else {
            CHECK_THROWS_AS(b / a, std::domain_error);
        }
        CHECK((a * a.conj()).im() == 0);
        CHECK((a * a.conj()).re() == a.norm());
    }
}

}  // TEST_SUITE
