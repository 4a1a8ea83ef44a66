#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kuga/cones.hpp"
#include "kuga/siegel.hpp"
#include "support.hpp"

using namespace kuga;
using kuga::testing::rng_for;
using cd = std::complex<double>;

namespace {

const std::vector<std::string> kRank3{"1+1+1", "K3+1", "C4", "K4-1", "K4"};

// Log-coordinates x = P (tau entries), so that T_i = e^{2 pi i x_i}.
std::vector<cd> log_coords(const Cone& cone, const CMatrix& tau) {
    const Eigen::MatrixXi p = cone.coordinate_map();
    std::vector<cd> x(cone.entries.size(), 0);
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < cone.entries.size(); ++j) {
            const auto [r, c] = kQEntries[cone.entries[j]];
            x[i] += static_cast<double>(p(i, static_cast<Eigen::Index>(j))) * tau(r, c);
        }
    return x;
}

}  // namespace

TEST_SUITE("cones") {

TEST_CASE("catalog shape") {
    const auto& cat = cone_catalog();
    REQUIRE(cat.size() == 8);
    const std::vector<std::pair<std::string, int>> expected{{"1", 1},    {"1+1", 2},  {"K3", 2},   {"1+1+1", 3},
                                                            {"K3+1", 3}, {"C4", 3},   {"K4-1", 3}, {"K4", 3}};
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(cat[i].name == expected[i].first);
        CHECK(cat[i].rank == expected[i].second);
        CHECK(generic_rank(cat[i]) == cat[i].rank);
        CHECK(cat[i].unbounded.rows() == cat[i].dimension);
        CHECK(cat[i].unbounded.rows() + cat[i].bounded.rows() == static_cast<Eigen::Index>(cat[i].entries.size()));
    }
    CHECK(cone_by_name("sigma_{K3+1}").name == "K3+1");
    CHECK(cone_by_name("k4-1").name == "K4-1");
    CHECK_THROWS_AS(cone_by_name("K5"), std::invalid_argument);
}

TEST_CASE("boundary coordinate oracles") {
    const CMatrix tau = cd(0, 10) * CMatrix::Identity(3, 3);
    const BoundaryCoords bc = boundary_coords(cone_by_name("1+1+1"), tau);
    REQUIRE(bc.T.size() == 3);
    REQUIRE(bc.S.size() == 3);
    for (const auto& t : bc.T) CHECK(std::abs(t - std::exp(-20 * std::numbers::pi)) < 1e-40);
    for (const auto& s : bc.S) CHECK(std::abs(s - cd(1, 0)) < 1e-15);

    CMatrix t2 = cd(0, 2) * CMatrix::Identity(3, 3);
    t2(0, 1) = t2(1, 0) = 0.5;
    const BoundaryCoords k31 = boundary_coords(cone_by_name("K3+1"), t2);
    REQUIRE(k31.T.size() == 4);
    CHECK(std::abs(k31.T[3] - cd(-1, 0)) < 1e-15);

    const BoundaryCoords one = boundary_coords(cone_by_name("1"), t2);
    CHECK(one.T.size() == 1);
    CHECK(one.moduli.size() == 5);
}

TEST_CASE("monomial exponent oracles") {
    const MonomialExponents z = monomial_exponents(parse_characteristic("000;000"), {0, 0, 0});
    for (int i = 0; i < 3; ++i) {
        CHECK(z.a[i] == 0);
        CHECK(z.b[i] == 0);
    }
    const MonomialExponents e = monomial_exponents(parse_characteristic("110;000"), {0, 0, 0});
    CHECK(e.a == std::array<Rational, 3>{Rational(1, 8), Rational(1, 8), Rational(0)});
    CHECK(e.b == std::array<Rational, 3>{Rational(0), Rational(0), Rational(1, 4)});
    const MonomialExponents f = monomial_exponents(parse_characteristic("111;000"), {0, 0, 0});
    CHECK(f.a == std::array<Rational, 3>{Rational(1, 8), Rational(1, 8), Rational(1, 8)});
    CHECK(f.b == std::array<Rational, 3>{Rational(1, 4), Rational(1, 4), Rational(1, 4)});
}

TEST_CASE("T4 minimum on K3+1 depends on eps1 == eps2") {
    const Cone& cone = cone_by_name("K3+1");
    for (const auto& c : even_characteristics(3)) {
        const MinimalValuation mv = minimal_valuations(cone, c, 3);
        const Rational expected = c.eps[0] == c.eps[1] ? Rational(0) : Rational(1, 8);
        CHECK(mv.minimum[3] == expected);
    }
}

TEST_CASE("T4 minimum on C4 depends on the parity of eps1 + eps2 + eps3") {
    const Cone& cone = cone_by_name("C4");
    for (const auto& c : even_characteristics(3)) {
        const MinimalValuation mv = minimal_valuations(cone, c, 3);
        const Rational expected = (c.eps[0] + c.eps[1] + c.eps[2]) % 2 == 1 ? Rational(1, 8) : Rational(0);
        CHECK(mv.minimum[3] == expected);
    }
}

TEST_CASE("rank-one cone has a constant term when eps1 = 0") {
    const Cone& cone = cone_by_name("1");
    for (const auto& c : even_characteristics(3)) {
        if (c.eps[0] != 0) continue;
        CHECK(minimal_valuations(cone, c, 3).minimum[0] == 0);
    }
    CHECK(minimal_valuations(cone, parse_characteristic("100;000"), 3).minimum[0] == Rational(1, 8));
}

TEST_CASE("aggregated theta-null exponents are all 2 with a unique lowest term") {
    for (const auto& name : kRank3) {
        CAPTURE(name);
        const ThetaNullLot lot = theta_null_lowest_exponents(cone_by_name(name), 3);
        CHECK(lot.unique);
        CHECK(lot.exponents.size() == static_cast<std::size_t>(cone_by_name(name).dimension));
        for (const auto& e : lot.exponents) CHECK(e == 2);
    }
}

TEST_CASE("property: minima stabilize between box 3 and box 5") {
    for (const auto& name : kRank3) {
        const Cone& cone = cone_by_name(name);
        for (const auto& c : even_characteristics(3)) {
            CAPTURE(name);
            CAPTURE(c.str());
            const MinimalValuation b3 = minimal_valuations(cone, c, 3);
            const MinimalValuation b5 = minimal_valuations(cone, c, 5);
            CHECK(b3.minimum == b5.minimum);
            CHECK(b3.argmin == b5.argmin);
        }
    }
}

TEST_CASE("property: coordinates round-trip through the inverse integer map") {
    auto g = rng_for("roundtrip");
    for (const auto& cone : cone_catalog()) {
        const QMatrix pinv = inverse_coordinate_map(cone);
        const QMatrix p = to_rational(Eigen::MatrixXi(cone.coordinate_map()));
        CHECK(exact_equal<Rational>(exact_product<Rational>(pinv, p), QMatrix::Identity(p.rows(), p.cols())));
        // Unimodular: the q-monomials are Laurent monomials in (T, S) and vice versa.
        CHECK(is_integral(pinv));
        for (int trial = 0; trial < 20; ++trial) {
            const CMatrix tau = random_siegel_point(3, g);
            const auto x = log_coords(cone, tau);
            const BoundaryCoords bc = boundary_coords(cone, tau);
            for (std::size_t i = 0; i < bc.T.size(); ++i) {
                const cd direct = std::exp(cd(0, 2 * std::numbers::pi) * x[i]);
                CHECK(std::abs(bc.T[i] - direct) <= 1e-12 * std::abs(direct));
            }
            const CMatrix back = tau_from_log_coords(cone, x, bc.moduli);
            CHECK(kuga::testing::max_abs(back - tau) < 1e-12);
        }
    }
}

TEST_CASE("property: valuations are exact eighths") {
    auto g = rng_for("eighths");
    for (int trial = 0; trial < 200; ++trial) {
        const Characteristic c = kuga::testing::random_characteristic(g, 3);
        const std::array<int, 3> n{kuga::testing::uniform_int(g, -4, 4), kuga::testing::uniform_int(g, -4, 4),
                                   kuga::testing::uniform_int(g, -4, 4)};
        for (const auto& cone : cone_catalog())
            for (const auto& v : cone_valuation(cone, c, n)) CHECK(is_integer(v * 8));
    }
}

}  // TEST_SUITE
