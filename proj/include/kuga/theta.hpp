#pragma once

#include <complex>
#include <string>
#include <vector>

#include "kuga/linalg.hpp"

namespace kuga {

struct Characteristic {
    std::vector<int> eps;
    std::vector<int> delta;

    int genus() const { return static_cast<int>(eps.size()); }
    /// "110;110"
    std::string str() const;
    friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

/// Accepts "110;110", "1,1,0,1,1,0" (eps then delta) or "1,1,0;1,1,0".
Characteristic parse_characteristic(const std::string& text);
Characteristic make_characteristic(const std::string& eps, const std::string& delta);

enum class Parity { Even, Odd };
Parity parity(const Characteristic& c);

/// Characteristic c' with theta[c'](tau + B) a constant multiple of theta[c](tau), for an
/// integer symmetric B: delta' = delta + B eps + diag(B) mod 2.
Characteristic translate_characteristic(const Characteristic& c, const Eigen::MatrixXi& b);

/// All even characteristics of genus g in lexicographic order of (eps, delta).
std::vector<Characteristic> even_characteristics(int g);
std::vector<Characteristic> odd_characteristics(int g);

struct ThetaValue {
    std::complex<double> value;
    double tail_bound = 0.0;  // |true - value| <= tail_bound
    int radius_used = 0;
    double rounding_bound = 0.0;  // floating-point error estimate of the box sum
};

inline constexpr double kDefaultThetaTolerance = 1e-10;
inline constexpr int kMaxThetaRadius = 64;

/// sum_{N in Z^g} exp(pi i m^T tau m + 2 pi i m^T (z + delta/2)),  m = N + eps/2.
/// The radius is doubled from 4 until the certified tail bound drops below tol.
ThetaValue theta(const Characteristic& c, const CMatrix& tau, const CVector& z,
                 double tol = kDefaultThetaTolerance);
/// Box sum over ||N||_inf <= radius with its certified tail bound (possibly infinite).
ThetaValue theta_at_radius(const Characteristic& c, const CMatrix& tau, const CVector& z, int radius);

/// Upper bound on the sum of |terms| outside the box of the given radius.
double theta_tail_bound(const Characteristic& c, const CMatrix& tau, const CVector& z, int radius);

ThetaValue theta_constant(const Characteristic& c, const CMatrix& tau, double tol = kDefaultThetaTolerance);

/// Product of the 36 even theta constants (genus 3); tail_bound is the propagated error.
ThetaValue theta_null(const CMatrix& tau, double tol = kDefaultThetaTolerance);

/// Sum of principal logarithms of the 36 even theta constants. Equal to
/// log(theta_null) modulo 2 pi i, and free of underflow.
std::complex<double> log_theta_null(const CMatrix& tau, double tol);

struct DecomposableCheck {
    ThetaValue full;                      // theta on diag(tau1, tau2)
    ThetaValue first, second;             // split factors
    std::complex<double> product;
    double difference = 0.0;              // |full - product|
    double bound = 0.0;                   // combined certified error
};

DecomposableCheck factor_on_decomposable(const Characteristic& c, const CMatrix& tau1, const CMatrix& tau2,
                                         const CVector& z1, const CVector& z2,
                                         double tol = kDefaultThetaTolerance);

/// Genus-1 shorthand: theta[e;d](tau, z).
std::complex<double> theta1(int e, int d, std::complex<double> tau, std::complex<double> z,
                            double tol = kDefaultThetaTolerance);

}  // namespace kuga
