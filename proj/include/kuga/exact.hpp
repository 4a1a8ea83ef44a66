#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace kuga {

// Expression templates are switched off so that auto and Eigen's internal
// temporaries always hold values rather than dangling expression nodes.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x == 0; }

Integer floor_of(const Rational& x);
/// Representative of x modulo 1 in [0, 1).
Rational frac_part(const Rational& x);
bool is_integer(const Rational& x);
double to_double(const Rational& x);

/// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int re) : re_(re) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_gaussian_integer() const;
    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// Parses "p/q+r/si" style text: "1/2+1/2i", "-i", "3/2i", "2", "1/3-2i".
GaussianRational parse_gaussian(std::string_view text);
std::string to_string(const GaussianRational& x);

/// Parses a complex float "a+bi" ("2i", "1e-3-0.5i", "-1").
std::complex<double> parse_complex(std::string_view text);

/// e^{2 pi i exponent}, exponent kept reduced into [0, 1).
class RootOfUnity {
public:
    RootOfUnity() = default;
    explicit RootOfUnity(const Rational& exponent) : e_(frac_part(exponent)) {}
    static RootOfUnity from_fraction(long p, long q) { return RootOfUnity(Rational(p) / Rational(q)); }

    const Rational& exponent() const { return e_; }
    long order() const;

    RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(e_ + o.e_); }
    RootOfUnity inverse() const { return RootOfUnity(-e_); }
    RootOfUnity pow(long k) const { return RootOfUnity(e_ * k); }
    bool is_one() const { return e_ == 0; }

    std::complex<double> to_complex() const;

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.e_ == b.e_; }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) { return a.e_ < b.e_; }

private:
    Rational e_{0};
};

std::complex<double> root_to_complex(const RootOfUnity& z);

}  // namespace kuga

namespace Eigen {
template <>
struct NumTraits<kuga::GaussianRational> : GenericNumTraits<kuga::GaussianRational> {
    using Real = kuga::GaussianRational;
    using NonInteger = kuga::GaussianRational;
    using Nested = kuga::GaussianRational;
    using Literal = kuga::GaussianRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 120
    };
};
}  // namespace Eigen
