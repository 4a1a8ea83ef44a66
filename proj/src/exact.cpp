#include "kuga/exact.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kuga {

Integer floor_of(const Rational& x) {
    Integer n = numerator(x);
    Integer d = denominator(x);
    Integer q = n / d;  // truncates toward zero
    if (q * d != n && n < 0) q -= 1;
    return q;
}

Rational frac_part(const Rational& x) { return x - Rational(floor_of(x)); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Index of the sign that starts the second term of "x+yi", or npos.
std::size_t split_point(std::string_view s) {
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            char prev = s[k - 1];
            if (prev == 'e' || prev == 'E') continue;
            return k;
        }
    }
    return std::string_view::npos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Rational r(n, d);
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

bool GaussianRational::is_gaussian_integer() const { return is_integer(re_) && is_integer(im_); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussianRational& x) {
    if (x.im() == 0) return to_string(x.re());
    std::string im = to_string(abs(x.im()));
    if (im == "1") im.clear();
    if (x.re() == 0) return (x.im() < 0 ? "-" : "") + im + "i";
    return to_string(x.re()) + (x.im() < 0 ? "-" : "+") + im + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << to_string(x); }

namespace {

// Shared shape of the two complex parsers: an optional real term followed by
// an optional imaginary term ending in 'i'.
template <class T, class ParseReal>
std::pair<T, T> parse_complex_parts(std::string_view text, ParseReal parse_real) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty complex number");
    if (s.back() != 'i' && s.back() != 'I') return {parse_real(s), T(0)};
    s.remove_suffix(1);
    std::size_t cut = split_point(s);
    std::string_view re_part = cut == std::string_view::npos ? std::string_view() : s.substr(0, cut);
    std::string_view im_part = cut == std::string_view::npos ? s : s.substr(cut);
    // A bare sign means a unit imaginary coefficient.
    T im;
    if (im_part.empty() || im_part == "+")
        im = T(1);
    else if (im_part == "-")
        im = T(-1);
    else
        im = parse_real(im_part);
    T re = re_part.empty() ? T(0) : parse_real(re_part);
    return {re, im};
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
    try {
        auto [re, im] = parse_complex_parts<Rational>(text, [](std::string_view s) { return parse_rational(s); });
        return {re, im};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed Gaussian rational '" + std::string(text) + "'");
    }
}

std::complex<double> parse_complex(std::string_view text) {
    auto parse_real = [text](std::string_view s) {
        std::string buf(trim(s));
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(buf, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != buf.size())
            throw std::invalid_argument("malformed complex number '" + std::string(text) + "'");
        return v;
    };
    auto [re, im] = parse_complex_parts<double>(text, parse_real);
    return {re, im};
}

long RootOfUnity::order() const { return denominator(e_).convert_to<long>(); }

std::complex<double> RootOfUnity::to_complex() const {
    // Split off whole quarter turns so that i^k is applied exactly and the
    // remaining angle lies in [0, pi/2).
    Rational quarters = e_ * 4;
    Integer k = floor_of(quarters);
    double r = to_double(quarters - Rational(k));
    double a = r * std::numbers::pi / 2;
    std::complex<double> base = r == 0 ? std::complex<double>(1.0, 0.0)
                                       : std::complex<double>(std::cos(a), std::sin(a));
    switch (k.convert_to<int>() % 4) {
        case 1: return {-base.imag(), base.real()};
        case 2: return -base;
        case 3: return {base.imag(), -base.real()};
        default: return base;
    }
}

std::complex<double> root_to_complex(const RootOfUnity& z) { return z.to_complex(); }

}  // namespace kuga
