#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "kuga/shimura.hpp"
#include "kuga/siegel.hpp"
#include "kuga/z2z4.hpp"
#include "support.hpp"

using namespace kuga;
using kuga::testing::max_abs;
using kuga::testing::rng_for;
using cd = std::complex<double>;

namespace {

const GaussianRational kHalfPlusHalfI(Rational(1, 2), Rational(1, 2));

QMatrix qdiag(std::initializer_list<long> v) {
    QMatrix m = QMatrix::Zero(v.size(), v.size());
    int i = 0;
    for (long x : v) {
        m(i, i) = Rational(x);
        ++i;
    }
    return m;
}

}  // namespace

TEST_SUITE("siegel") {

TEST_CASE("is_siegel_point oracles") {
    CHECK(is_siegel_point(CMatrix(cd(0, 1) * CMatrix::Identity(3, 3))));
    CMatrix ns = cd(0, 1) * CMatrix::Identity(2, 2);
    ns(0, 1) = 0.5;
    CHECK_FALSE(is_siegel_point(ns));
    CHECK(is_siegel_point(evaluate_family(pi_u(kHalfPlusHalfI), cd(0, 2))));
    CMatrix neg = cd(0, -1) * CMatrix::Identity(2, 2);
    CHECK_FALSE(is_siegel_point(neg));
}

TEST_CASE("is_symplectic oracles") {
    CHECK(is_symplectic(symplectic_form(3)));
    CHECK(is_symplectic(z2z4::M()));
    CHECK_FALSE(is_symplectic(qdiag({2, 1, 1, 1, 1, 1})));
    // diag(2, 1/2) in genus 1 is symplectic over Q (det 1) but not integral.
    QMatrix half = qdiag({2, 1});
    half(1, 1) = Rational(1, 2);
    CHECK(is_symplectic(half));
    CHECK_FALSE(is_integral(half));
    CHECK_FALSE(is_symplectic(qdiag({2, 1})));
    QMatrix scaled = symplectic_form(2) * Rational(2);
    CHECK(similitude_factor(scaled) == 4);
    CHECK(similitude_factor(qdiag({2, 1, 1, 1, 1, 1})) == 0);
}

TEST_CASE("siegel_action oracles") {
    auto g = rng_for("action-oracle");
    const CMatrix tau = random_siegel_point(3, g);
    CHECK(max_abs(siegel_action(QMatrix::Identity(6, 6), tau) - tau) < 1e-14);
    CMatrix i1(1, 1);
    i1(0, 0) = cd(0, 1);
    CHECK(std::abs(siegel_action(symplectic_form(1), i1)(0, 0) - cd(0, 1)) < 1e-15);
    CHECK_THROWS_AS(siegel_action(qdiag({2, 1, 1, 1, 1, 1}), tau), std::invalid_argument);
    // Similitudes are allowed through the unchecked action.
    const CMatrix t2 = fractional_action(qdiag({2, 2, 2, 1, 1, 1}), tau);
    CHECK(max_abs(t2 - 2.0 * tau) < 1e-14);
}

TEST_CASE("evaluate_family oracles") {
    const AffinePeriodFamily f = pi_u(kHalfPlusHalfI);
    const CMatrix tau = evaluate_family(f, cd(0, 2));
    CMatrix expected(3, 3);
    expected << cd(-0.5, 2), cd(0, 0.25), cd(-0.5, 0.5),
                cd(0, 0.25), cd(0, 2), cd(0.5, 0.5),
                cd(-0.5, 0.5), cd(0.5, 0.5), cd(0, 1);
    CHECK(max_abs(tau - expected) < 1e-15);

    AffinePeriodFamily constant;
    constant.genus = 3;
    constant.slope = QMatrix::Zero(3, 3);
    constant.offset = to_gaussian(QMatrix::Identity(3, 3)) * GaussianRational::i();
    constant.domain_bound = family_domain_bound(constant.slope, imag_part(constant.offset));
    CHECK(constant.domain_bound == 0.0);
    CHECK(max_abs(evaluate_family(constant, cd(0.3, 0.01)) - cd(0, 1) * CMatrix::Identity(3, 3)) == 0.0);

    CHECK_THROWS_AS(evaluate_family(f, cd(0, -1)), std::domain_error);
}

TEST_CASE("domain bound of pi_u((1+i)/2) is the exact positivity threshold") {
    // Im tau(t) = [[s, 1/4, 1/2], [1/4, s, 1/2], [1/2, 1/2, 1]] for t = i s. Its leading
    // 2x2 minor s^2 - 1/16 is positive only for s > 1/4, so max(Re u^2, 0) = 0 is not a
    // valid bound; the computed one is 1/4.
    const AffinePeriodFamily f = pi_u(kHalfPlusHalfI);
    CHECK(f.domain_bound == doctest::Approx(0.25).epsilon(1e-12));
    const GMatrix at_small = f.offset + to_gaussian(f.slope) * GaussianRational(Rational(0), Rational(1, 5));
    CHECK_FALSE(is_siegel_point(at_small));
    const GMatrix above = f.offset + to_gaussian(f.slope) * GaussianRational(Rational(0), Rational(26, 100));
    CHECK(is_siegel_point(above));
}

TEST_CASE("build_varphi oracles") {
    GMatrix empty(0, 0);
    const AffinePeriodFamily full = build_varphi(QMatrix::Identity(3, 3), QMatrix::Identity(3, 3), empty,
                                                 QMatrix::Zero(3, 3));
    CHECK(exact_equal<Rational>(full.slope, QMatrix::Identity(3, 3)));
    CHECK(exact_is_zero<GaussianRational>(full.offset));

    GMatrix zi(1, 1);
    zi(0, 0) = GaussianRational::i();
    const AffinePeriodFamily two = build_varphi(QMatrix::Identity(2, 2), QMatrix::Identity(3, 3), zi,
                                                QMatrix::Zero(3, 3));
    const CMatrix tau = evaluate_family(two, cd(0.1, 3));
    CMatrix expected = CMatrix::Zero(3, 3);
    expected(0, 0) = expected(1, 1) = cd(0.1, 3);
    expected(2, 2) = cd(0, 1);
    CHECK(max_abs(tau - expected) == 0.0);

    CHECK_THROWS_AS(build_varphi(qdiag({1, 0}), QMatrix::Zero(3, 3), zi, QMatrix::Zero(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("build_varphi reproduces the rank-one example family") {
    // With A = I + a E13 + b E23 the image of e3 is (a, b, 1), so A e3 e3^T A^T = K.
    const Rational a(1, 2), b(1, 2);
    const QMatrix k = rank_one_K(a, b);
    QMatrix expected_k(3, 3);
    expected_k << Rational(1, 4), Rational(1, 4), Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(1, 2),
        Rational(1, 2), Rational(1, 2), Rational(1);
    CHECK(exact_equal<Rational>(k, expected_k));
    CHECK(exact_equal<Rational>(rank_one_K(0, 0), QMatrix(qdiag({0, 0, 1}))));

    QMatrix amat = QMatrix::Identity(3, 3);
    amat(0, 2) = a;
    amat(1, 2) = b;
    GMatrix z = GMatrix::Zero(2, 2);
    z(0, 0) = z(1, 1) = GaussianRational::i();
    const AffinePeriodFamily f = build_varphi(qdiag({1}), amat, z, QMatrix::Zero(3, 3));
    QMatrix lower = qdiag({0, 1, 1});
    QMatrix direct = exact_product<Rational>(exact_product<Rational>(amat, lower), QMatrix(amat.transpose()));
    CHECK(exact_equal<GaussianRational>(f.offset, GMatrix(to_gaussian(direct) * GaussianRational::i())));
    // The e3 e3^T part of the offset is exactly i K.
    QMatrix e33 = qdiag({0, 0, 1});
    QMatrix k_part = exact_product<Rational>(exact_product<Rational>(amat, e33), QMatrix(amat.transpose()));
    CHECK(exact_equal<Rational>(k_part, k));
}

TEST_CASE("property: group law of the action") {
    auto g = rng_for("group-law");
    for (int trial = 0; trial < 50; ++trial) {
        const int genus = kuga::testing::uniform_int(g, 1, 3);
        const QMatrix g1 = random_symplectic_word(genus, 3, g);
        const QMatrix g2 = random_symplectic_word(genus, 3, g);
        CHECK(is_symplectic(g1));
        CHECK(is_integral(g1));
        const CMatrix tau = random_siegel_point(genus, g);
        const CMatrix lhs = siegel_action(exact_product<Rational>(g1, g2), tau);
        const CMatrix rhs = siegel_action(g1, siegel_action(g2, tau));
        CHECK(max_abs(lhs - rhs) <= 1e-10 * (1 + max_abs(lhs)));
    }
}

TEST_CASE("property: the action preserves the Siegel space") {
    auto g = rng_for("preserve");
    for (int trial = 0; trial < 100; ++trial) {
        const int genus = kuga::testing::uniform_int(g, 1, 3);
        const QMatrix gamma = random_symplectic_word(genus, 4, g);
        const CMatrix tau = random_siegel_point(genus, g, 0.5);
        CHECK(is_siegel_point(siegel_action(gamma, tau)));
    }
}

TEST_CASE("property: block-diagonal elements act by congruence") {
    auto g = rng_for("congruence");
    for (int trial = 0; trial < 100; ++trial) {
        QMatrix a = QMatrix::Identity(3, 3);
        for (int k = 0; k < 4; ++k) {
            const int i = kuga::testing::uniform_int(g, 0, 2);
            const int j = (i + kuga::testing::uniform_int(g, 1, 2)) % 3;
            a.row(i) += Rational(kuga::testing::uniform_int(g, -2, 2)) * a.row(j);
        }
        const CMatrix tau = random_siegel_point(3, g);
        const CMatrix ad = to_double(a).cast<cd>();
        const CMatrix expect = ad * tau * ad.transpose();
        CHECK(max_abs(siegel_action(block_diagonal_symplectic(a), tau) - expect) <= 1e-12 * (1 + max_abs(expect)));
    }
}

TEST_CASE("property: family values are exactly symmetric") {
    auto g = rng_for("family-sym");
    for (int trial = 0; trial < 60; ++trial) {
        GaussianRational u = kuga::testing::small_gaussian(g);
        if (u.is_gaussian_integer()) continue;
        const AffinePeriodFamily f = pi_u(u);
        const double s = f.domain_bound + kuga::testing::uniform_real(g, 0.01, 3);
        const CMatrix tau = evaluate_family(f, cd(kuga::testing::uniform_real(g, -1, 1), s));
        CHECK((tau - tau.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(is_siegel_point(tau));
        const Rational s_exact(static_cast<long>(std::ceil(s * 1000)) + 1, 1000);
        const GMatrix exact = evaluate_family_exact(f, GaussianRational(Rational(1, 3), s_exact));
        CHECK(exact_equal<GaussianRational>(exact, GMatrix(exact.transpose())));
    }
}

TEST_CASE("property: domain bound is the positivity threshold") {
    auto g = rng_for("domain");
    for (int trial = 0; trial < 60; ++trial) {
        GaussianRational u = kuga::testing::small_gaussian(g);
        if (u.is_gaussian_integer()) continue;
        const AffinePeriodFamily f = pi_u(u);
        const double b = f.domain_bound;
        CHECK(is_siegel_point(evaluate_family(f, cd(0, b + 1e-6 + 1e-9 * b))));
        if (b > 1e-3) {
            // Just below the bound the imaginary part must fail to be positive definite.
            const CMatrix below = to_complex(f.offset) + cd(0, b - 1e-6) * to_double(f.slope).cast<cd>();
            CHECK_FALSE(is_siegel_point(below));
        }
    }
}

}  // TEST_SUITE
