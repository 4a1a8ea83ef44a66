#pragma once

#include <complex>
#include <random>

#include "kuga/linalg.hpp"

namespace kuga {

inline constexpr double kSymmetryTolerance = 1e-12;

/// Symmetric within kSymmetryTolerance (absolute) and Im part positive definite.
bool is_siegel_point(const CMatrix& m, double sym_tol = kSymmetryTolerance);
/// Exact version for Gaussian-rational matrices.
bool is_siegel_point(const GMatrix& m);

QMatrix symplectic_form(int g);
/// gamma^T J gamma == J exactly.
bool is_symplectic(const QMatrix& gamma);
/// gamma^T J gamma == c J for some nonzero rational c; returns c or 0.
Rational similitude_factor(const QMatrix& gamma);

/// (A tau + B)(C tau + D)^{-1}. Requires gamma symplectic and tau in the Siegel space.
CMatrix siegel_action(const QMatrix& gamma, const CMatrix& tau);
/// Same formula without any precondition on gamma (used for similitudes).
CMatrix fractional_action(const QMatrix& gamma, const CMatrix& tau);
GMatrix fractional_action(const QMatrix& gamma, const GMatrix& tau);

/// Block-diagonal (A 0; 0 A^{-T}).
QMatrix block_diagonal_symplectic(const QMatrix& a);

/// Product of `length` elementary generators of Sp(2g, Z): translations (I B; 0 I) with
/// B = +-E_ii or +-(E_ij + E_ji), transvections (A 0; 0 A^{-T}) with A = I +- E_ij, and J.
QMatrix random_symplectic_word(int g, int length, std::mt19937_64& rng);

/// Random point with Re entries in [-1/2, 1/2] and Im = im_floor I + W W^T / 4,
/// W entries uniform in [-1, 1]; so Im >= im_floor I.
CMatrix random_siegel_point(int g, std::mt19937_64& rng, double im_floor = 1.0);

/// tau(t) = t * slope + offset, valid for Im t > domain_bound.
struct AffinePeriodFamily {
    int genus = 0;
    QMatrix slope;   // integer symmetric
    GMatrix offset;  // symmetric
    double domain_bound = 0.0;
};

/// Smallest beta >= 0 with Im(offset) + s * slope positive definite for every s > beta.
double family_domain_bound(const QMatrix& slope, const QMatrix& im_offset);

CMatrix evaluate_family(const AffinePeriodFamily& f, std::complex<double> t);
GMatrix evaluate_family_exact(const AffinePeriodFamily& f, const GaussianRational& t);

/// phi(t) = (E t 0; 0 0) + A (0 0; 0 Z) A^T + R, with E r x r and Z (g-r) x (g-r).
AffinePeriodFamily build_varphi(const QMatrix& e, const QMatrix& a, const GMatrix& z, const QMatrix& r);

/// ((a^2, ab, a), (ab, b^2, b), (a, b, 1)).
QMatrix rank_one_K(const Rational& a, const Rational& b);

}  // namespace kuga
