#pragma once

#include <complex>
#include <string>
#include <vector>

#include "kuga/cones.hpp"
#include "kuga/cyclotomic.hpp"
#include "kuga/theta.hpp"

namespace kuga {

/// Closed-form lowest-order coefficient of theta_null for a rank-3 cone, in the
/// displayed normalization (leading constant dropped). Inputs per cone:
///   "1+1+1": (q~12, q~13, q~23) with q~ = q^{1/2}
///   "K3+1":  (S1, S2)          "C4": (S~1, S~2) with S~ = S^{1/2}
///   "K4-1":  (S1)              "K4": ()
std::complex<double> lot_coefficient(const std::string& cone, const std::vector<std::complex<double>>& bounded);
/// Same polynomial evaluated exactly at roots of unity.
Cyclotomic lot_coefficient_exact(const std::string& cone, const std::vector<RootOfUnity>& bounded);

/// Constant multiplying lot_coefficient in the actual expansion of theta_null.
double lot_leading_scale(const std::string& cone);

/// (q13-1)^6 (q23-1)^6 q13^{-3} q23^{-3}.
std::complex<double> lot_secondary_q12(std::complex<double> q13, std::complex<double> q23);
Cyclotomic lot_secondary_q12_exact(const RootOfUnity& q13, const RootOfUnity& q23);
double lot_secondary_scale();

/// Number of bounded inputs lot_coefficient expects.
int lot_input_count(const std::string& cone);

/// tau = (t z^T; z Z) and argument (x, b) for the rank-one expansion.
struct RankOneBlocks {
    std::complex<double> t;
    CVector z;
    CMatrix Z;
    std::complex<double> x = 0;
    CVector b;

    CMatrix tau() const;
    CVector argument() const;
};

/// Partial sums of the expansion in q11 = e^{2 pi i t}. order k keeps |N| <= k
/// when eps_1 = 0 and |2N+1| <= 2k+1 when eps_1 = 1.
std::complex<double> fj_truncate_rank1(const Characteristic& c, const RankOneBlocks& blocks, int order,
                                       double tol = kDefaultThetaTolerance);
/// q11-exponent of the first omitted term.
Rational fj_rank1_next_exponent(int eps1, int order);

/// Double sum over odd |n1|, |n2| <= maxN of
/// q~11^{n1^2} q~22^{n2^2} q~12^{n1 n2} i^{n1 d1 + n2 d2} theta[e3;d3](tau33, (n1 tau13 + n2 tau23)/2).
std::complex<double> fj_rank2_11_series(const Characteristic& c, const CMatrix& tau, int max_n,
                                        double tol = kDefaultThetaTolerance);

struct LotAnchor {
    std::vector<RootOfUnity> bounded;              // in lot_coefficient's input convention
    std::vector<int> growth;                       // f_i, default all 1
    std::vector<std::complex<double>> xi;          // T_i = xi_i q^{f_i}, default all 1
    std::vector<double> im_t{4.0, 6.0, 8.0};
};

struct LotSample {
    double im_t = 0;
    std::complex<double> ratio;
    double deviation = 0;
};

struct LotReport {
    std::string cone;
    std::vector<Rational> monomial;   // predicted T-exponents
    std::complex<double> predicted;   // scale * coefficient
    std::vector<LotSample> samples;
    bool monotone = false;
    bool pass = false;
};

inline constexpr double kLotThetaTolerance = 1e-300;
/// Deviations this small are at double-precision roundoff and count as converged.
inline constexpr double kLotNoiseFloor = 1e-12;

/// Walks the ray T_i = xi_i q^{f_i}, q = e^{2 pi i t}, t = i s, and compares theta_null
/// with the predicted lowest-order term. Throws std::domain_error when the predicted
/// coefficient vanishes exactly.
LotReport lot_numeric_verify(const std::string& cone, const LotAnchor& anchor, double tol = kLotThetaTolerance);

/// The q12 = 1 slice of the standard cone: compares against T1^2 T2^2 T3^3 times the
/// secondary coefficient. anchor.bounded = (q13, q23).
LotReport lot_secondary_verify(const LotAnchor& anchor, double tol = kLotThetaTolerance);

}  // namespace kuga
