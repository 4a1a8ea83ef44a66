#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kuga/fourier_jacobi.hpp"
#include "kuga/siegel.hpp"
#include "support.hpp"

using namespace kuga;
using kuga::testing::rng_for;
using kuga::testing::uniform_real;
using cd = std::complex<double>;

namespace {

RootOfUnity root(long k, long n) { return RootOfUnity::from_fraction(k, n); }

// Rank-one blocks with a comfortably reduced Z and a small coupling z.
RankOneBlocks random_blocks(std::mt19937_64& g, double im_t) {
    RankOneBlocks b;
    b.t = cd(uniform_real(g, -0.5, 0.5), im_t);
    b.Z = random_siegel_point(2, g);
    b.Z.diagonal() += cd(0, 1.0) * CVector::Ones(2);
    b.z = kuga::testing::random_vector(g, 2, 0.3);
    b.x = cd(uniform_real(g, -0.5, 0.5), uniform_real(g, -0.1, 0.1));
    b.b = kuga::testing::random_vector(g, 2, 0.2);
    return b;
}

}  // namespace

TEST_SUITE("fourier_jacobi") {

TEST_CASE("input counts") {
    CHECK(lot_input_count("1+1+1") == 3);
    CHECK(lot_input_count("K3+1") == 2);
    CHECK(lot_input_count("C4") == 2);
    CHECK(lot_input_count("K4-1") == 1);
    CHECK(lot_input_count("K4") == 0);
    CHECK_THROWS_AS(lot_input_count("1+1"), std::invalid_argument);
    CHECK_THROWS_AS(lot_coefficient("K3+1", {cd(1)}), std::invalid_argument);
}

TEST_CASE("closed form oracles") {
    CHECK(cyclotomic_is_zero(lot_coefficient_exact("K4-1", {root(0, 1)})));
    CHECK(lot_coefficient_exact("K4", {}) == Cyclotomic(1));
    CHECK(cyclotomic_is_zero(lot_coefficient_exact("1+1+1", {root(0, 1), root(1, 5), root(2, 7)})));
    CHECK(cyclotomic_is_zero(lot_coefficient_exact("C4", {root(1, 6), root(5, 6)})));
    CHECK_FALSE(cyclotomic_is_zero(lot_coefficient_exact("C4", {root(1, 5), root(2, 7)})));

    // K4-1 at S1 = -1 is (-2)^2.
    CHECK(std::abs(lot_coefficient("K4-1", {cd(-1)}) - cd(4)) < 1e-15);
    // K3+1 at S1 = S2 = -1: (1)(4)(4)(0) since S1 S2 = 1.
    CHECK(std::abs(lot_coefficient("K3+1", {cd(-1), cd(-1)})) < 1e-15);
    // C4 at (i, i): (1-2i)(-1)(-1)(1+2i) = 5.
    CHECK(std::abs(lot_coefficient("C4", {cd(0, 1), cd(0, 1)}) - cd(5)) < 1e-14);

    CHECK_THROWS_AS(lot_coefficient("1+1+1", {cd(0), cd(1), cd(1)}), std::domain_error);
    CHECK_THROWS_AS(lot_coefficient("K3+1", {cd(0), cd(1)}), std::domain_error);
    CHECK_NOTHROW(lot_coefficient("C4", {cd(0), cd(0)}));
}

TEST_CASE("secondary coefficient oracles") {
    CHECK(cyclotomic_is_zero(lot_secondary_q12_exact(root(0, 1), root(1, 3))));
    CHECK(cyclotomic_is_zero(lot_secondary_q12_exact(root(2, 5), root(0, 1))));
    // (-2)^6 (-2)^6 / ((-1)(-1))^3 = 4096
    CHECK(lot_secondary_q12_exact(root(1, 2), root(1, 2)) == Cyclotomic(4096));
    CHECK(std::abs(lot_secondary_q12(cd(-1), cd(-1)) - cd(4096)) < 1e-9);
    CHECK_THROWS_AS(lot_secondary_q12(cd(0), cd(1)), std::domain_error);
}

TEST_CASE("rank-one truncation at order 0") {
    auto g = rng_for("fj-order0");
    const RankOneBlocks b = random_blocks(g, 1.5);
    // eps1 = 0: only N = 0 survives, which is theta[rest](Z, b).
    const Characteristic c = parse_characteristic("010;101");
    const Characteristic rest = parse_characteristic("10;01");
    CHECK(std::abs(fj_truncate_rank1(c, b, 0) - theta(rest, b.Z, b.b).value) < 1e-14);
    CHECK(fj_rank1_next_exponent(0, 0) == Rational(1, 2));
    CHECK(fj_rank1_next_exponent(0, 2) == Rational(9, 2));
    CHECK(fj_rank1_next_exponent(1, 0) == Rational(9, 8));
    CHECK(fj_rank1_next_exponent(1, 1) == Rational(25, 8));
    CHECK_THROWS_AS(fj_truncate_rank1(c, b, 3), std::invalid_argument);
}

TEST_CASE("rank-two odd series reproduces the theta constant") {
    auto g = rng_for("fj-rank2");
    for (int trial = 0; trial < 10; ++trial) {
        CMatrix tau = random_siegel_point(3, g);
        tau.diagonal() += cd(0, 0.5) * CVector::Ones(3);
        Characteristic c = kuga::testing::random_characteristic(g, 3);
        c.eps[0] = c.eps[1] = 1;
        const cd direct = theta_constant(c, tau, 1e-14).value;
        const cd series = fj_rank2_11_series(c, tau, 15, 1e-14);
        CHECK(std::abs(series - direct) < 1e-11);
    }
    CHECK_THROWS_AS(fj_rank2_11_series(parse_characteristic("011;000"), CMatrix(cd(0, 1) * CMatrix::Identity(3, 3)), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(fj_rank2_11_series(parse_characteristic("110;000"), CMatrix(cd(0, 1) * CMatrix::Identity(3, 3)), 4),
                    std::invalid_argument);
}

TEST_CASE("numeric leading-term oracles") {
    LotAnchor generic;
    generic.bounded = {root(1, 5), root(2, 7), root(1, 3)};
    const LotReport r = lot_numeric_verify("1+1+1", generic);
    CHECK(r.pass);
    CHECK(r.monotone);
    CHECK(r.samples.back().deviation < 1e-3);

    LotAnchor degenerate;
    degenerate.bounded = {root(0, 1), root(1, 5), root(2, 7)};
    CHECK_THROWS_AS(lot_numeric_verify("1+1+1", degenerate), std::domain_error);
    LotAnchor secondary;
    secondary.bounded = {root(1, 5), root(2, 7)};
    CHECK(lot_secondary_verify(secondary).pass);

    CHECK(lot_numeric_verify("K4", LotAnchor{}).pass);
    LotAnchor k41;
    k41.bounded = {root(1, 4)};
    CHECK(lot_numeric_verify("K4-1", k41).pass);
    k41.bounded = {root(0, 1)};
    CHECK_THROWS_AS(lot_numeric_verify("K4-1", k41), std::domain_error);
}

TEST_CASE("property: numeric and exact coefficients agree at roots of unity") {
    auto g = rng_for("fj-exact-numeric");
    const std::vector<std::string> cones{"1+1+1", "K3+1", "C4", "K4-1", "K4"};
    for (int trial = 0; trial < 200; ++trial) {
        const std::string& name = cones[kuga::testing::uniform_int(g, 0, 4)];
        std::vector<RootOfUnity> roots;
        std::vector<cd> values;
        for (int i = 0; i < lot_input_count(name); ++i) {
            roots.push_back(kuga::testing::random_root(g, 12));
            values.push_back(root_to_complex(roots.back()));
        }
        const cd exact = lot_coefficient_exact(name, roots).to_complex();
        const cd numeric = lot_coefficient(name, values);
        CAPTURE(name);
        CHECK(std::abs(exact - numeric) <= 1e-10 * (1 + std::abs(exact)));
        CHECK(cyclotomic_is_zero(lot_coefficient_exact(name, roots)) == (std::abs(numeric) < 1e-9));
    }
}

TEST_CASE("property: the standard-cone coefficient is symmetric in its three inputs") {
    auto g = rng_for("fj-symmetric");
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RootOfUnity> v{kuga::testing::random_root(g, 10), kuga::testing::random_root(g, 10),
                                   kuga::testing::random_root(g, 10)};
        const Cyclotomic base = lot_coefficient_exact("1+1+1", v);
        std::sort(v.begin(), v.end(), [](const RootOfUnity& a, const RootOfUnity& b) {
            return a.exponent() < b.exponent();
        });
        do {
            CHECK(lot_coefficient_exact("1+1+1", v) == base);
        } while (std::next_permutation(v.begin(), v.end(), [](const RootOfUnity& a, const RootOfUnity& b) {
            return a.exponent() < b.exponent();
        }));
    }
}

TEST_CASE("property: rank-one truncation error decays with the next exponent") {
    auto g = rng_for("fj-truncation");
    for (int trial = 0; trial < 12; ++trial) {
        Characteristic c = kuga::testing::random_characteristic(g, 3);
        const int order = c.eps[0] == 0 ? kuga::testing::uniform_int(g, 0, 1) : 0;
        const double e = to_double(fj_rank1_next_exponent(c.eps[0], order));
        RankOneBlocks b = random_blocks(g, 1.0);
        std::vector<double> log_q, log_err;
        for (double s : {1.0, 1.5, 2.0}) {
            b.t = cd(b.t.real(), s);
            const cd direct = theta(c, b.tau(), b.argument(), 1e-15).value;
            const double err = std::abs(fj_truncate_rank1(c, b, order, 1e-15) - direct);
            const double q = std::exp(-2 * std::numbers::pi * s);
            CAPTURE(c.str());
            CAPTURE(s);
            CHECK(err <= 10 * std::pow(q, e) + 1e-13);
            log_q.push_back(std::log(q));
            log_err.push_back(std::log(err));
        }
        // Slope of log error against log |q11| matches the next exponent when the error
        // is well above roundoff.
        if (std::exp(log_err.back()) > 1e-12) {
            const double slope = (log_err.back() - log_err.front()) / (log_q.back() - log_q.front());
            CHECK(slope == doctest::Approx(e).epsilon(0.05));
        }
    }
}

}  // TEST_SUITE
