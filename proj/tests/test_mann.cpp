#include <doctest.h>

#include <set>

#include "kuga/mann.hpp"
#include "support.hpp"

using namespace kuga;
using kuga::testing::rng_for;
using kuga::testing::uniform_int;

namespace {

Relation rel(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Relation(v);
}

std::complex<double> numeric_sum(const Relation& r, const std::vector<RootOfUnity>& roots) {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) s += to_double(r.coefficients[i]) * root_to_complex(roots[i]);
    return s;
}

}  // namespace

TEST_SUITE("mann") {

TEST_CASE("candidate orders are divisors of the primorial") {
    CHECK(mann_candidate_orders(2) == std::vector<long>{1, 2});
    CHECK(mann_candidate_orders(4) == std::vector<long>{1, 2, 3, 6});
    CHECK(mann_candidate_orders(6) == std::vector<long>{1, 2, 3, 5, 6, 10, 15, 30});
    CHECK(mann_candidate_orders(8).back() == 210);
}

TEST_CASE("brute force oracles") {
    const SolutionSet two = brute_force_vanishing(rel({1, 1}), 4);
    REQUIRE(two.size() == 1);
    CHECK(two.solutions[0].roots[1] == RootOfUnity(Rational(1, 2)));

    // 1 + zeta + zeta' = 0 forces the two primitive cube roots, in either order.
    const SolutionSet three = brute_force_vanishing(rel({1, 1, 1}), 6);
    CHECK(three.size() == 2);
    for (const auto& s : three.solutions) {
        CHECK(s.irreducible);
        CHECK(s.roots[1].order() == 3);
    }

    CHECK(brute_force_vanishing(rel({2, 1}), 12).size() == 0);
    CHECK_THROWS_AS(brute_force_vanishing(rel({1, 1}), 61), std::invalid_argument);
}

TEST_CASE("solver oracles") {
    const MannSolution three = solve_vanishing_sum(rel({1, 1, 1}));
    CHECK(three.irreducible().size() == 2);
    // 1 - zeta = 0 only for zeta = 1.
    const MannSolution diff = solve_vanishing_sum(rel({1, -1}));
    REQUIRE(diff.irreducible().size() == 1);
    CHECK(diff.irreducible().solutions[0].roots[1].is_one());
    CHECK(solve_vanishing_sum(rel({3, 1})).irreducible().size() == 0);

    // Four unit terms: only the reducible pairing families, no irreducible solution.
    const MannSolution four = solve_vanishing_sum(rel({1, 1, 1, 1}));
    CHECK(four.irreducible().size() == 0);
    CHECK(four.enumerate(4).size() > 0);

    CHECK_THROWS_WITH_AS(solve_vanishing_sum(rel({1, 1, 1, 1, 1, 1, 1, 1, 1})), "relation too long",
                         std::invalid_argument);
    CHECK_THROWS_AS(Relation({Rational(1), Rational(0)}), std::invalid_argument);
}

TEST_CASE("every factor of the standard-cone coefficient forces a trivial q") {
    const auto reports = analyze_L_factors();
    CHECK(reports.size() == standard_cone_factors().size());
    CHECK(reports.size() == 4);
    for (const auto& r : reports) {
        CAPTURE(r.factor.str());
        CHECK(r.forces_q_equal_one);
        CHECK(r.every_zero_has_two_unit_squares);
        CHECK(r.mu12_solutions > 0);
        for (const auto& p : r.pairings) CHECK(p.verified);
    }
}

TEST_CASE("C4 factor zeros are sixth roots with S1 S2 = 1") {
    const auto reports = analyze_C4_factors();
    CHECK(reports.size() == 4);
    for (const auto& r : reports) {
        CHECK_FALSE(r.zeros.empty());
        CHECK(r.all_sixth_roots);
        CHECK(r.product_of_squares_is_one);
        CHECK(r.squares_are_cube_roots);
        for (const auto& [a, b] : r.zeros) {
            CHECK(std::abs(to_double(Rational(r.s1)) * root_to_complex(a) + to_double(Rational(r.s2)) * root_to_complex(b) +
                           1.0) < 1e-12);
        }
    }
}

TEST_CASE("property: solver agrees with brute force at order 12") {
    auto g = rng_for("mann-vs-brute");
    const std::vector<long> coeffs{-2, -1, 1, 2};
    for (int trial = 0; trial < 40; ++trial) {
        const int k = uniform_int(g, 2, 4);
        std::vector<Rational> c;
        for (int i = 0; i < k; ++i) c.emplace_back(coeffs[uniform_int(g, 0, 3)]);
        const Relation r(c);
        const MannSolution solved = solve_vanishing_sum(r);
        const SolutionSet brute = brute_force_vanishing(r, 12);
        const SolutionSet expanded = solved.enumerate(12);
        CAPTURE(k);
        CHECK(expanded.exponent_vectors() == brute.exponent_vectors());
        std::size_t irreducible_brute = 0;
        for (const auto& s : brute.solutions) irreducible_brute += s.irreducible ? 1 : 0;
        // Irreducible solutions all live at Mann orders, which divide 12 only for k <= 3.
        if (k <= 3) CHECK(solved.irreducible().size() == irreducible_brute);
    }
}

TEST_CASE("property: every reported solution vanishes exactly and numerically") {
    auto g = rng_for("mann-verify");
    for (int trial = 0; trial < 30; ++trial) {
        const int k = uniform_int(g, 2, 5);
        std::vector<Rational> c;
        for (int i = 0; i < k; ++i) c.emplace_back(uniform_int(g, 1, 2) * (uniform_int(g, 0, 1) == 0 ? 1 : -1));
        const Relation r(c);
        const MannSolution solved = solve_vanishing_sum(r);
        for (const auto& s : solved.irreducible().solutions) {
            CHECK(relation_vanishes(r, s.roots));
            CHECK(is_irreducible_solution(r, s.roots));
            CHECK(std::abs(numeric_sum(r, s.roots)) < 1e-10);
            // Mann: the order of each root divides the product of the primes <= k.
            const auto orders = mann_candidate_orders(k);
            for (const auto& z : s.roots) CHECK(orders.back() % z.order() == 0);
        }
        for (const auto& s : solved.enumerate(12).solutions) {
            CHECK(relation_vanishes(r, s.roots));
            CHECK(s.roots[0].is_one());
            // Partition blocks vanish on their own and cover every index once.
            std::set<int> seen;
            for (const auto& block : s.partition) {
                Cyclotomic sub(0);
                for (int i : block) {
                    sub += Cyclotomic(r.coefficients[i]) * Cyclotomic::from_root(s.roots[i]);
                    CHECK(seen.insert(i).second);
                }
                CHECK(cyclotomic_is_zero(sub));
            }
            CHECK(seen.size() == r.size());
        }
    }
}

}  // TEST_SUITE
