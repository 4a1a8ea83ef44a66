#pragma once

#include <complex>
#include <vector>

#include "kuga/lattice.hpp"
#include "kuga/siegel.hpp"
#include "kuga/theta.hpp"

namespace kuga {

/// tau(t) = (t + i u^2, u^2/2, i u; u^2/2, t, u; i u, u, i). Throws for u in Z + iZ.
AffinePeriodFamily pi_u(const GaussianRational& u);

/// tau(t) = (t + a^2 i, (a^2-b^2)/2 + abi, -b + ai; ., t + 2ab + b^2 i, a + bi; ., ., i).
AffinePeriodFamily example_family(const Rational& a, const Rational& b);

struct FamilyComparison {
    GMatrix difference;      // example_family offset minus pi_u offset
    GaussianRational shift;  // 2ab + b^2 i
    bool is_parameter_shift = false;  // difference == shift * slope, exactly
};

FamilyComparison compare_families(const Rational& a, const Rational& b);

/// The characteristic [110;110].
Characteristic vanishing_characteristic();

struct VanishingSample {
    std::complex<double> t;
    double vanishing_abs = 0;       // |theta[110;110]|
    double vanishing_bound = 0;     // certified error of that value
    double other_min_abs = 0;       // min over the other 35 even characteristics
    std::string other_argmin;
};

struct VanishingReport {
    GaussianRational u;
    std::vector<VanishingSample> samples;
    bool pass = false;  // all vanishing values < tol
};

VanishingReport verify_vanishing(const GaussianRational& u, const std::vector<std::complex<double>>& t_samples,
                                 double tol);

struct RelationsReport {
    Rational a, b;
    bool tau12_is_half_tau23_squared = false;    // q~12^2 = exp(pi i tau23^2 / 2)
    bool gamma_exponent_matches = false;         // tau22 - tau11 = -i tau23^2
    bool tau13_squared_is_minus_tau23_squared = false;
    Rational r12;                                // Re tau12 mod 1
    Rational r22;                                // Re(tau22 - t) mod 1
    Rational expected_r12, expected_r22;         // (a^2-b^2)/2 and 2ab, mod 1
    double numeric_residual = 0;                 // |q~12^2 - exp(pi i tau23^2/2)|
    bool pass = false;
};

RelationsReport relations_check(const Rational& a, const Rational& b);

struct GroupResidual {
    int n1 = 0, n2 = 0;
    std::vector<std::pair<int, int>> members;
    std::complex<double> sum;
    double scale = 0;      // sum of absolute values of the terms
    double residual = 0;   // |sum| / scale
};

/// The term group of the (eps1, eps2) = (1, 1) double series indexed by odd n1 >= n2 > 0.
GroupResidual fj_group_vanishing(const GaussianRational& u, int n1, int n2, double tol = 1e-14);

struct FixedPartReport {
    GaussianRational u;
    ZMatrix basis;        // 6 x 2, columns are coefficient vectors of the columns of (tau | I)
    Integer degree;       // |m1^T J m2|
    int constant_rank = 0;      // rank of the t-independent sublattice
    int axis_rank = 0;          // rank of the lattice vectors lying on the third coordinate axis
    std::vector<bool> reference_generators_in_lattice;
    std::vector<bool> reference_generators_t_independent;
};

/// Lattice vectors of (tau | I) that stay in a fixed complex line for all t, and the degree
/// of the polarization restricted to it. Throws std::runtime_error("unexpected fixed-part rank")
/// when that lattice does not have rank 2.
FixedPartReport fixed_part_lattice(const GaussianRational& u);

/// n^2 c1 + n^2 c2 - (2n^2-1) c3 - n^2 (2n^2-1) c4 + n^2 c5 and c6.
std::vector<ZVector> reference_fixed_generators(long n);

}  // namespace kuga
