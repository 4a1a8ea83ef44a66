#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "kuga/linalg.hpp"
#include "kuga/siegel.hpp"

namespace kuga {

/// A named pass/fail verdict with a short human-readable explanation.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Literal matrices of the Z2 x Z4 family (homology actions, base changes, periods).
namespace z2z4 {

QMatrix M();        // action of T (order 12) on homology
QMatrix M1();       // action of T1 (order 4)
KMatrix L();        // diag(z, z^3, z^5), z = e^{2 pi i / 12}
KMatrix Pi_half();  // full 3 x 6 period matrix of the special fiber
KMatrix B_D();
QMatrix B_H();
KMatrix Pi_B();     // block form after the base changes, as printed
GMatrix Pi_2();     // 2 x 4 genus-two block after a further base change
QMatrix S();        // 4 x 4, as printed
QMatrix S_corrected();  // S with the (1,3) entry set to 0; this one is symplectic
GMatrix Z_2();
QMatrix D();        // diag(1,1,1,2,1,1)
QMatrix C1();
QMatrix X();        // C2 = X C1
QMatrix C2();
QMatrix P_displayed();  // the integer matrix printed as the value of C1 B_H^{-1} S3^{-1}

/// Upper-left block inclusion Sp4 -> Sp6 (indices 1,2,4,5 of 1..6).
QMatrix embed_sp4(const QMatrix& s4);

/// Z_S = (S 1/2; 1/2 S) in block with i, as an affine function of S.
struct AffineMatrix {
    GMatrix slope;
    GMatrix offset;
    GMatrix at(const GaussianRational& s) const;
};
AffineMatrix diag_ZS_i();
AffineMatrix first_period_matrix();   // in t
AffineMatrix second_period_matrix();  // in t

}  // namespace z2z4

struct MatrixRelationsReport {
    std::vector<Check> checks;
    bool pass = false;  // every relation the family needs: M, M1, C1, C2 symplectic, M1^2 = M^6, M^12 = I
};

MatrixRelationsReport verify_matrix_relations();

struct EigenRow {
    int eigen_exponent = 0;          // L entry is z^eigen_exponent
    int dimension = 0;               // dimension of {v : v M = z^k v}
    bool period_row_in_space = false;
    bool period_row_equation = false; // z^k row == row M, exactly
    KMatrix basis;                   // 1 x 6 when dimension is 1
};

struct EigenRowReport {
    std::vector<EigenRow> rows;
    bool L_Pi_equals_Pi_M = false;
    bool pass = false;
};

EigenRowReport solve_LPiM();

struct DiagonalizationReport {
    std::vector<std::pair<int, int>> homology_matches;          // (a,b) with B_H X B_H^{-1} = diag(1,1,-1,1,1,-1)
    std::vector<std::pair<int, int>> homology_inverse_matches;  // same with B_H^{-1} X B_H
    bool unique = false;
    bool involution = false;      // X^2 = I
    int plus_one_rank = 0;        // rank of the +1 eigenspace of X
    std::vector<std::pair<int, int>> form_matches;          // B_D^{-1} Y B_D = diag(1,1,-1)
    std::vector<std::pair<int, int>> form_inverse_matches;  // B_D Y B_D^{-1} = diag(1,1,-1)
    std::string form_conjugate_of_identified;               // B_D Y B_D^{-1} for the identified X
    bool Pi_B_matches = false;    // B_D Pi B_H^{-1} equals the printed block form
    bool Pi_B_block_form = false; // B_D Pi B_H^{-1} splits into a 2 x 4 and a 1 x 2 block (columns 1,2,4,5 | 3,6)
    bool pass = false;
};

/// Y with Y Pi = Pi X, read off the left 3 x 3 blocks; throws if no such Y exists.
KMatrix form_action(const QMatrix& homology_action);
DiagonalizationReport verify_diagonalizations();

/// Result of pushing an affine source family through a rational 6 x 6 matrix and
/// comparing with an affine target family.
struct PathCheck {
    std::string name;
    QMatrix product;
    Rational similitude;               // gamma^T J gamma = c J, or 0
    bool affine = false;               // (C Z + D) independent of S
    z2z4::AffineMatrix result;         // valid when affine
    GaussianRational t_slope, t_offset;  // target parameter = t_slope s + t_offset, from the (2,2) entries
    bool matches = false;
    bool lands_in_siegel_space = false;  // checked at s = 3i/2 and 1 + 2i
    std::vector<std::string> mismatches;
};

PathCheck push_forward(const std::string& name, const QMatrix& gamma, const z2z4::AffineMatrix& source,
                       const z2z4::AffineMatrix& target);

struct FinalPeriodReport {
    PathCheck literal_first;     // C1 B_H^{-1} S3^{-1}
    PathCheck literal_second;    // C2 B_H^{-1} S3^{-1}
    bool literal_product_is_displayed = false;
    PathCheck corrected_first;   // C1 B_H^T D S'3^{-1}
    PathCheck corrected_second;  // C2 B_H^T D S'3^{-1}
    bool corrected_product_is_displayed = false;
    bool second_matches_pi_u = false;  // under t -> t/2 + i/4 + 1/4, modulo integers
    GMatrix pi_u_offset_difference;
    bool Z_S_special_is_Z2 = false;
    std::vector<Check> pi2_conventions;  // informational: Pi_2 under S, S^T, S^{-1}, S^{-T}
    bool pass = false;                   // the printed identity and the pi_u match
};

FinalPeriodReport verify_final_period_matrix();

struct CrosscheckSample {
    std::complex<double> t;                // parameter of the second matrix
    std::string characteristic;            // [110;110] carried through the integer translation
    double vanishing_abs = 0;              // that characteristic at the second matrix
    double literal_char_abs = 0;           // [110;110] itself at the second matrix
    double pi_u_abs = 0;                   // [110;110] at pi_u((1+i)/2) at t/2 + (1+i)/4
    double other_min_abs = 0;              // other even characteristics at the second matrix
    bool first_is_siegel = false;
    bool second_is_siegel = false;
    double sp_relation_error = 0;  // max |X(first) - second| at matched parameters
};

struct CrosscheckReport {
    std::vector<CrosscheckSample> samples;
    bool pass = false;
};

CrosscheckReport numeric_crosscheck(const std::vector<std::complex<double>>& t_samples, double tol);

}  // namespace kuga
