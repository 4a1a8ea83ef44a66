#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "kuga/exact.hpp"

namespace kuga {

int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Element of Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1}, z = e^{2 pi i / M}.
/// Binary operations promote both operands to the lcm conductor.
class Cyclotomic {
public:
    static constexpr int kMaxConductor = 720;

    Cyclotomic() : coeffs_(1, Rational(0)) {}
    Cyclotomic(int v) : coeffs_(1, Rational(v)) {}
    Cyclotomic(const Rational& v) : coeffs_(1, v) {}
    Cyclotomic(int conductor, std::vector<Rational> coeffs);

    /// zeta_M^k.
    static Cyclotomic zeta(int conductor, long k = 1);
    static Cyclotomic from_root(const RootOfUnity& z);
    static Cyclotomic from_gaussian(const GaussianRational& g);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Same element written over Q(zeta_target); target must be a multiple of conductor().
    Cyclotomic promoted(int target) const;

    bool is_zero() const;
    Cyclotomic inverse() const;
    Cyclotomic conj() const;
    std::complex<double> to_complex() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic pow(long k) const;

private:
    int conductor_ = 1;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
bool cyclotomic_is_zero(const Cyclotomic& x);
std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace kuga

namespace Eigen {
template <>
struct NumTraits<kuga::Cyclotomic> : GenericNumTraits<kuga::Cyclotomic> {
    using Real = kuga::Cyclotomic;
    using NonInteger = kuga::Cyclotomic;
    using Nested = kuga::Cyclotomic;
    using Literal = kuga::Cyclotomic;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 100,
        MulCost = 400
    };
};
}  // namespace Eigen
