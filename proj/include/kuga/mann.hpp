#pragma once

#include <string>
#include <vector>

#include "kuga/cyclotomic.hpp"

namespace kuga {

/// Divisors of the product of the primes <= k, ascending.
std::vector<long> mann_candidate_orders(int k);

/// sum_i c_i zeta_i = 0 with nonzero rational c_i.
struct Relation {
    std::vector<Rational> coefficients;

    explicit Relation(std::vector<Rational> c);
    std::size_t size() const { return coefficients.size(); }
};

/// Exact test of sum c_i zeta_i = 0.
bool relation_vanishes(const Relation& r, const std::vector<RootOfUnity>& roots);
/// True when no proper nonempty sub-sum vanishes.
bool is_irreducible_solution(const Relation& r, const std::vector<RootOfUnity>& roots);

struct Solution {
    std::vector<RootOfUnity> roots;            // roots[0] == 1
    bool irreducible = false;
    std::vector<std::vector<int>> partition;   // blocks whose sub-sums vanish separately
};

struct SolutionSet {
    std::vector<Solution> solutions;  // sorted by exponent vector

    std::size_t size() const { return solutions.size(); }
    /// Exponent vectors only, for comparisons.
    std::vector<std::vector<Rational>> exponent_vectors() const;
};

/// All solutions of a relation up to a common rotation. Reducible solutions come in
/// families: every block of the partition carries its own free rotation, so the family
/// is described by the irreducible block solutions and expanded on demand.
struct MannSolution {
    struct Block {
        std::vector<int> indices;                              // ascending; indices[0] pinned to 1
        std::vector<std::vector<RootOfUnity>> irreducible;     // solutions of the sub-relation
    };
    struct Family {
        std::vector<Block> blocks;  // blocks[0] contains index 0
    };

    Relation relation;
    std::vector<Family> families;

    /// Solutions in the family with the partition into a single block.
    SolutionSet irreducible() const;
    /// Every normalized solution all of whose roots have order dividing max_order.
    SolutionSet enumerate(long max_order) const;
};

inline constexpr std::size_t kMaxRelationLength = 8;

/// Mann-bounded exact solver. Throws std::invalid_argument("relation too long") for k > 8.
MannSolution solve_vanishing_sum(const Relation& r);

inline constexpr long kMaxBruteForceOrder = 60;
inline constexpr double kBruteForceCap = 5e7;

/// Exhaustive search over roots of order dividing max_order with roots[0] = 1.
SolutionSet brute_force_vanishing(const Relation& r, long max_order);

/// One 4-term factor of the standard-cone coefficient,
/// q~12 q~13 q~23 + s1 q~12 + s2 q~13 + s3 q~23.
struct LFactor {
    int s1, s2, s3;
    std::string str() const;
};

struct LFactorReport {
    LFactor factor;
    std::size_t mu12_solutions = 0;          // zeros with all q~ in mu_12
    std::size_t mu12_irreducible = 0;
    std::size_t solver_irreducible = 0;      // irreducible zeros found through the Mann solver
    bool every_zero_has_two_unit_squares = false;  // two of q = q~^2 equal 1
    /// For each pairing of the four monomials: the two variables whose squares are forced,
    /// and the forced value of those squares (+1 or -1).
    struct Pairing {
        int partner;                   // monomial paired with the cubic one (1, 2 or 3)
        std::vector<int> forced;       // variable indices 0 = q~12, 1 = q~13, 2 = q~23
        int forced_square;
        bool verified;                 // exact check over mu_12 for the free variable
    };
    std::vector<Pairing> pairings;
    bool forces_q_equal_one = false;
};

std::vector<LFactor> standard_cone_factors();
LFactorReport analyze_L_factor(const LFactor& f);
std::vector<LFactorReport> analyze_L_factors();

struct C4FactorReport {
    int s1, s2;                                  // s1 S~1 + s2 S~2 + 1 up to sign
    std::vector<std::pair<RootOfUnity, RootOfUnity>> zeros;  // (S~1, S~2)
    bool all_sixth_roots = false;
    bool product_of_squares_is_one = false;      // S1 S2 = 1
    bool squares_are_cube_roots = false;
};

std::vector<C4FactorReport> analyze_C4_factors();

}  // namespace kuga
