#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "kuga/shimura.hpp"
#include "kuga/siegel.hpp"
#include "kuga/theta.hpp"
#include "support.hpp"

using namespace kuga;
using kuga::testing::rng_for;
using kuga::testing::uniform_int;
using kuga::testing::uniform_real;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix scalar_i(int g, double s = 1.0) { return cd(0, s) * CMatrix::Identity(g, g); }

// theta_00(tau, 0) from the Jacobi triple product, q = e^{pi i tau}.
cd triple_product(cd tau) {
    const cd q = std::exp(cd(0, kPi) * tau);
    cd p = 1;
    cd q2n = 1;
    for (int n = 1; n < 200; ++n) {
        const cd q2nm1 = q2n * q;
        q2n = q2nm1 * q;
        p *= (1.0 - q2n) * (1.0 + q2nm1) * (1.0 + q2nm1);
    }
    return p;
}

}  // namespace

TEST_SUITE("theta") {

TEST_CASE("characteristic parsing and parity") {
    CHECK(parse_characteristic("110;110") == make_characteristic("110", "110"));
    CHECK(parse_characteristic("1,1,0,1,1,0") == parse_characteristic("110;110"));
    CHECK(parse_characteristic("0,0").genus() == 1);
    CHECK(parse_characteristic("110;110").str() == "110;110");
    CHECK_THROWS_AS(parse_characteristic("12;00"), std::invalid_argument);
    CHECK_THROWS_AS(parse_characteristic("1;00"), std::invalid_argument);

    CHECK(parity(parse_characteristic("000;000")) == Parity::Even);
    CHECK(parity(parse_characteristic("110;110")) == Parity::Even);
    CHECK(parity(parse_characteristic("100;100")) == Parity::Odd);
}

TEST_CASE("counts of even and odd characteristics") {
    CHECK(even_characteristics(1).size() == 3);
    CHECK(even_characteristics(2).size() == 10);
    CHECK(even_characteristics(3).size() == 36);
    CHECK(odd_characteristics(1).size() == 1);
    CHECK(odd_characteristics(2).size() == 6);
    CHECK(odd_characteristics(3).size() == 28);
}

TEST_CASE("theta oracles in genus one") {
    // theta_00(i) = pi^{1/4} / Gamma(3/4)
    const double expected = std::pow(kPi, 0.25) / std::tgamma(0.75);
    const ThetaValue v = theta(parse_characteristic("0;0"), scalar_i(1), CVector::Zero(1), 1e-15);
    CHECK(std::abs(v.value - expected) < 1e-14);
    CHECK(v.tail_bound < 1e-15);
    CHECK(std::abs(v.value - cd(1.0864348112, 0)) < 1e-10);

    CMatrix t(1, 1);
    t(0, 0) = cd(1, 2);
    const ThetaValue odd = theta(parse_characteristic("1;1"), t, CVector::Zero(1), 1e-12);
    CHECK(std::abs(odd.value) <= odd.tail_bound + odd.rounding_bound);
    CHECK(std::abs(odd.value) < 1e-12);
}

TEST_CASE("radius-50 box sum agrees with the adaptive evaluation") {
    const Characteristic c = parse_characteristic("0;0");
    const ThetaValue ref = theta_at_radius(c, scalar_i(1), CVector::Zero(1), 50);
    const ThetaValue v = theta(c, scalar_i(1), CVector::Zero(1), 1e-15);
    CHECK(std::abs(ref.value - v.value) < 1e-15);
}

TEST_CASE("theta constant oracles") {
    const ThetaValue z = theta_constant(parse_characteristic("111;110"), scalar_i(3));
    CHECK(std::abs(z.value) < 1e-10);
    const ThetaValue nz = theta_constant(parse_characteristic("000;000"), scalar_i(3));
    CHECK(std::abs(nz.value) > 0.5);
    const double t00 = std::pow(kPi, 0.25) / std::tgamma(0.75);
    CHECK(std::abs(nz.value - std::pow(t00, 3)) < 1e-12);
    for (const auto& c : odd_characteristics(2)) {
        auto g = rng_for("odd-" + c.str());
        const ThetaValue v = theta_constant(c, random_siegel_point(2, g));
        CHECK(std::abs(v.value) <= v.tail_bound + v.rounding_bound);
    }
}

TEST_CASE("theta-null oracles") {
    CHECK(std::abs(theta_null(scalar_i(3)).value) < 1e-10);
    const CMatrix tau = evaluate_family(pi_u(GaussianRational(Rational(1, 2), Rational(1, 2))), cd(0, 2));
    CHECK(std::abs(theta_null(tau).value) < 1e-10);
    CHECK(std::abs(theta_constant(parse_characteristic("110;110"), tau).value) < 1e-10);

    CMatrix pert = scalar_i(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) pert(i, j) = cd(0, 0.1);
    const ThetaValue v = theta_null(pert);
    CHECK(std::abs(v.value) > 1e3 * v.tail_bound);
    double smallest = 1e300;
    for (const auto& c : even_characteristics(3))
        smallest = std::min(smallest, std::abs(theta_constant(c, pert).value));
    CHECK(smallest > 1e-3);
}

TEST_CASE("factorization on decomposable points") {
    CMatrix a(1, 1), b(1, 1);
    a(0, 0) = cd(0, 1);
    b(0, 0) = cd(0, 2);
    const CVector z1 = CVector::Zero(1);
    const DecomposableCheck odd = factor_on_decomposable(parse_characteristic("11;11"), a, b, z1, z1);
    CHECK(std::abs(odd.full.value) < 1e-10);
    CHECK(std::abs(odd.product) < 1e-10);

    const DecomposableCheck even = factor_on_decomposable(parse_characteristic("00;00"), a, a, z1, z1);
    const double t00 = std::pow(kPi, 0.25) / std::tgamma(0.75);
    CHECK(even.difference <= 1e-12);
    CHECK(std::abs(even.full.value - t00 * t00) < 1e-12);

    // [110;110] on diag(i, Z) splits as [1;1] times [10;10], so it vanishes through the
    // odd genus-one factor. On diag(Z, i) it splits as [11;11] times [0;0], both even.
    auto g = rng_for("decomp");
    const CMatrix z2 = random_siegel_point(2, g);
    const DecomposableCheck split = factor_on_decomposable(parse_characteristic("110;110"), a, z2, z1,
                                                           CVector::Zero(2));
    CHECK(std::abs(split.first.value) < 1e-10);
    CHECK(std::abs(split.full.value) < 1e-10);
    CHECK(split.difference <= split.bound + 1e-15);
    const DecomposableCheck other = factor_on_decomposable(parse_characteristic("110;110"), z2, a,
                                                           CVector::Zero(2), z1);
    CHECK(other.difference <= other.bound + 1e-15);
    CHECK(std::abs(other.full.value) > 1e-3);
}

TEST_CASE("unreachable precision is an error") {
    CMatrix t(1, 1);
    t(0, 0) = cd(0, 1e-4);
    CHECK_THROWS_AS(theta(parse_characteristic("0;0"), t, CVector::Zero(1), 1e-15), std::runtime_error);
    CHECK_THROWS_AS(theta(parse_characteristic("0;0"), scalar_i(2), CVector::Zero(1)), std::invalid_argument);
}

TEST_CASE("property: Jacobi triple product") {
    auto g = rng_for("triple");
    for (int trial = 0; trial < 50; ++trial) {
        const cd tau(uniform_real(g, -1, 1), uniform_real(g, 0.4, 3));
        const cd v = theta1(0, 0, tau, 0, 1e-14);
        CHECK(std::abs(v - triple_product(tau)) < 1e-12 * std::max(1.0, std::abs(v)));
    }
}

TEST_CASE("property: parity in z") {
    auto g = rng_for("parity");
    for (int trial = 0; trial < 60; ++trial) {
        const int genus = uniform_int(g, 1, 3);
        const Characteristic c = kuga::testing::random_characteristic(g, genus);
        const CMatrix tau = random_siegel_point(genus, g);
        const CVector z = kuga::testing::random_vector(g, genus);
        const cd plus = theta(c, tau, z).value;
        const cd minus = theta(c, tau, CVector(-z)).value;
        const double sign = parity(c) == Parity::Odd ? -1.0 : 1.0;
        CHECK(std::abs(minus - sign * plus) < 1e-10);
    }
}

TEST_CASE("property: quasi-periodicity in z") {
    auto g = rng_for("quasi");
    for (int trial = 0; trial < 60; ++trial) {
        const int genus = uniform_int(g, 1, 3);
        const Characteristic c = kuga::testing::random_characteristic(g, genus);
        const CMatrix tau = random_siegel_point(genus, g);
        const CVector z = kuga::testing::random_vector(g, genus, 0.3);
        CVector m(genus), n(genus);
        for (int i = 0; i < genus; ++i) {
            m(i) = uniform_int(g, -1, 1);
            n(i) = uniform_int(g, -1, 1);
        }
        const CVector shifted = z + tau * m + n;
        const cd lhs = theta(c, tau, shifted, 1e-12).value;
        const cd rhs = theta(c, tau, z, 1e-12).value;
        const cd mtm = (m.transpose() * tau * m)(0, 0);
        const cd mz = (m.transpose() * z)(0, 0);
        const double factor = std::abs(std::exp(cd(0, -kPi) * (mtm + 2.0 * mz)));
        CHECK(std::abs(std::abs(lhs) - factor * std::abs(rhs)) < 1e-9 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("property: modularity of theta-null in absolute value") {
    // |theta_null(gamma tau)| = |det(C tau + D)|^18 |theta_null(tau)|, compared through
    // logarithms because both sides can be tiny.
    auto g = rng_for("modularity");
    for (int trial = 0; trial < 20; ++trial) {
        const QMatrix gamma = random_symplectic_word(3, uniform_int(g, 1, 4), g);
        const CMatrix tau = random_siegel_point(3, g);
        const CMatrix image = siegel_action(gamma, tau);
        const Eigen::MatrixXd gd = to_double(gamma);
        const CMatrix c = gd.block(3, 0, 3, 3).cast<cd>();
        const CMatrix d = gd.block(3, 3, 3, 3).cast<cd>();
        const double log_det = std::log(std::abs((c * tau + d).determinant()));
        const double lhs = log_theta_null(image, 1e-14).real();
        const double rhs = 18 * log_det + log_theta_null(tau, 1e-14).real();
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("property: certified tail bound covers the next shell") {
    auto g = rng_for("certified");
    for (int trial = 0; trial < 40; ++trial) {
        const int genus = uniform_int(g, 1, 3);
        const Characteristic c = kuga::testing::random_characteristic(g, genus);
        const CMatrix tau = random_siegel_point(genus, g, 0.6);
        const CVector z = kuga::testing::random_vector(g, genus, 0.3);
        const ThetaValue v = theta(c, tau, z, 1e-8);
        const ThetaValue w = theta_at_radius(c, tau, z, v.radius_used + 4);
        CHECK(std::abs(w.value - v.value) <= v.tail_bound + v.rounding_bound + w.rounding_bound);
    }
}

TEST_CASE("property: integer translation shifts the characteristic") {
    auto g = rng_for("translate");
    for (int trial = 0; trial < 40; ++trial) {
        const int genus = uniform_int(g, 1, 3);
        const Characteristic c = kuga::testing::random_characteristic(g, genus);
        Eigen::MatrixXi b(genus, genus);
        for (int i = 0; i < genus; ++i)
            for (int j = i; j < genus; ++j) b(i, j) = b(j, i) = uniform_int(g, -2, 2);
        const Characteristic moved = translate_characteristic(c, b);
        CHECK(parity(moved) == parity(c));
        const CMatrix tau = random_siegel_point(genus, g);
        const CMatrix shifted = tau + b.cast<double>().cast<cd>();
        const double lhs = std::abs(theta_constant(moved, shifted, 1e-13).value);
        const double rhs = std::abs(theta_constant(c, tau, 1e-13).value);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

}  // TEST_SUITE
