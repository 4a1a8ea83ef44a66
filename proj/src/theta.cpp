#include "kuga/theta.hpp"

#include "kuga/siegel.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace kuga {

using cd = std::complex<double>;

std::string Characteristic::str() const {
    std::string s;
    for (int e : eps) s += static_cast<char>('0' + e);
    s += ';';
    for (int d : delta) s += static_cast<char>('0' + d);
    return s;
}

namespace {

std::vector<int> parse_bits(const std::string& text) {
    std::vector<int> bits;
    for (char ch : text) {
        if (ch == '0' || ch == '1')
            bits.push_back(ch - '0');
        else if (ch != ',' && ch != ' ')
            throw std::invalid_argument("malformed characteristic '" + text + "'");
    }
    return bits;
}

}  // namespace

Characteristic make_characteristic(const std::string& eps, const std::string& delta) {
    Characteristic c{parse_bits(eps), parse_bits(delta)};
    if (c.eps.size() != c.delta.size() || c.eps.empty())
        throw std::invalid_argument("characteristic halves must have equal nonzero length");
    return c;
}

Characteristic parse_characteristic(const std::string& text) {
    auto semi = text.find(';');
    if (semi != std::string::npos) return make_characteristic(text.substr(0, semi), text.substr(semi + 1));
    std::vector<int> bits = parse_bits(text);
    if (bits.empty() || bits.size() % 2 != 0)
        throw std::invalid_argument("characteristic needs 2g binary entries: '" + text + "'");
    std::size_t g = bits.size() / 2;
    return Characteristic{std::vector<int>(bits.begin(), bits.begin() + g),
                          std::vector<int>(bits.begin() + g, bits.end())};
}

Parity parity(const Characteristic& c) {
    int s = 0;
    for (int i = 0; i < c.genus(); ++i) s += c.eps[i] * c.delta[i];
    return s % 2 == 0 ? Parity::Even : Parity::Odd;
}

Characteristic translate_characteristic(const Characteristic& c, const Eigen::MatrixXi& b) {
    const int g = c.genus();
    if (b.rows() != g || b.cols() != g) throw std::invalid_argument("translation size does not match genus");
    if (b != b.transpose()) throw std::invalid_argument("translation must be symmetric");
    Characteristic out = c;
    for (int i = 0; i < g; ++i) {
        long s = c.delta[i] + b(i, i);
        for (int j = 0; j < g; ++j) s += static_cast<long>(b(i, j)) * c.eps[j];
        out.delta[i] = static_cast<int>(((s % 2) + 2) % 2);
    }
    return out;
}

namespace {

std::vector<Characteristic> characteristics_with_parity(int g, Parity want) {
    if (g < 1 || g > 3) throw std::invalid_argument("genus must be between 1 and 3");
    std::vector<Characteristic> out;
    const int n = 2 * g;
    for (int code = 0; code < (1 << n); ++code) {
        Characteristic c{std::vector<int>(g), std::vector<int>(g)};
        // Most significant bit is eps_1, so increasing code is lexicographic in (eps, delta).
        for (int k = 0; k < n; ++k) {
            int bit = (code >> (n - 1 - k)) & 1;
            (k < g ? c.eps[k] : c.delta[k - g]) = bit;
        }
        if (parity(c) == want) out.push_back(std::move(c));
    }
    return out;
}

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

void check_inputs(const Characteristic& c, const CMatrix& tau, const CVector& z) {
    const Eigen::Index g = tau.rows();
    if (tau.cols() != g || g < 1 || g > 3) throw std::invalid_argument("theta supports genus 1 to 3");
    if (c.genus() != g) throw std::invalid_argument("characteristic genus does not match the period matrix");
    if (z.size() != g) throw std::invalid_argument("argument vector has the wrong dimension");
    if (!is_siegel_point(tau)) throw std::invalid_argument("not a point of the Siegel upper half-space");
}

double log_add(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

// Natural log of the tail bound; +inf when the box is too small for the bound to apply.
double log_tail_bound(const Characteristic& c, const CMatrix& tau, const CVector& z, int radius) {
    const int g = static_cast<int>(tau.rows());
    Eigen::MatrixXd y = tau.imag();
    y = (y + y.transpose()) / 2;
    double lambda = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(y, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    lambda *= 1 - 1e-12;  // guard against eigenvalue rounding
    double ynorm = z.imag().norm();
    double e_inf = 0;
    for (int e : c.eps) e_inf = std::max(e_inf, e / 2.0);
    if (radius + 1 - e_inf < ynorm / lambda) return std::numeric_limits<double>::infinity();

    auto log_term = [&](long k) {
        double count = std::pow(2.0 * k + 1, g) - std::pow(2.0 * k - 1, g);
        double r = k - e_inf;
        return std::log(count) - std::numbers::pi * lambda * r * r + 2 * std::numbers::pi * ynorm * r;
    };
    // Both factors of the term ratio decrease in k, so once the ratio is below 1/2
    // the remainder is dominated by a geometric series.
    double acc = -std::numeric_limits<double>::infinity();
    for (long k = radius + 1;; ++k) {
        double lk = log_term(k);
        double lnext = log_term(k + 1);
        acc = log_add(acc, lk);
        if (lnext - lk < -std::log(2.0) && lnext < acc - 60) {
            acc = log_add(acc, lnext + std::log(2.0));
            break;
        }
        if (k > radius + 100000) return std::numeric_limits<double>::infinity();
    }
    return acc;
}

struct BoxSum {
    cd value;
    double rounding;
};

BoxSum box_sum(const Characteristic& c, const CMatrix& tau, const CVector& z, int radius) {
    const int g = static_cast<int>(tau.rows());
    std::array<double, 3> half_eps{};
    std::array<cd, 3> w{};
    for (int i = 0; i < g; ++i) {
        half_eps[i] = c.eps[i] / 2.0;
        w[i] = z(i) + c.delta[i] / 2.0;
    }
    const cd ipi(0, std::numbers::pi);
    // Neumaier compensated summation in a fixed lexicographic order.
    cd sum = 0, comp = 0;
    double abs_sum = 0;
    std::array<int, 3> n{};
    for (int i = 0; i < g; ++i) n[i] = -radius;
    while (true) {
        std::array<double, 3> m{};
        for (int i = 0; i < g; ++i) m[i] = n[i] + half_eps[i];
        cd quad = 0, lin = 0;
        for (int i = 0; i < g; ++i) {
            quad += tau(i, i) * (m[i] * m[i]);
            for (int j = i + 1; j < g; ++j) quad += 2.0 * tau(i, j) * (m[i] * m[j]);
            lin += m[i] * w[i];
        }
        cd expo = ipi * (quad + 2.0 * lin);
        cd term = std::exp(expo);
        double at = std::abs(term);
        abs_sum += at * (8 + 4 * std::abs(expo));
        cd t = sum + term;
        for (int part = 0; part < 2; ++part) {
            double s = part == 0 ? sum.real() : sum.imag();
            double x = part == 0 ? term.real() : term.imag();
            double tt = part == 0 ? t.real() : t.imag();
            double corr = std::abs(s) >= std::abs(x) ? (s - tt) + x : (x - tt) + s;
            comp += part == 0 ? cd(corr, 0) : cd(0, corr);
        }
        sum = t;
        int k = g - 1;
        while (k >= 0 && n[k] == radius) n[k--] = -radius;
        if (k < 0) break;
        ++n[k];
    }
    return {sum + comp, kUnitRoundoff * abs_sum};
}

}  // namespace

std::vector<Characteristic> even_characteristics(int g) { return characteristics_with_parity(g, Parity::Even); }
std::vector<Characteristic> odd_characteristics(int g) { return characteristics_with_parity(g, Parity::Odd); }

double theta_tail_bound(const Characteristic& c, const CMatrix& tau, const CVector& z, int radius) {
    check_inputs(c, tau, z);
    return std::exp(log_tail_bound(c, tau, z, radius));
}

ThetaValue theta_at_radius(const Characteristic& c, const CMatrix& tau, const CVector& z, int radius) {
    check_inputs(c, tau, z);
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    BoxSum s = box_sum(c, tau, z, radius);
    return {s.value, std::exp(log_tail_bound(c, tau, z, radius)), radius, s.rounding};
}

ThetaValue theta(const Characteristic& c, const CMatrix& tau, const CVector& z, double tol) {
    check_inputs(c, tau, z);
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const double log_tol = std::log(tol);
    for (int radius = 4; radius <= kMaxThetaRadius; radius *= 2) {
        double lb = log_tail_bound(c, tau, z, radius);
        if (lb <= log_tol) {
            BoxSum s = box_sum(c, tau, z, radius);
            return {s.value, std::exp(lb), radius, s.rounding};
        }
    }
    throw std::runtime_error("precision unreachable");
}

ThetaValue theta_constant(const Characteristic& c, const CMatrix& tau, double tol) {
    return theta(c, tau, CVector::Zero(tau.rows()), tol);
}

ThetaValue theta_null(const CMatrix& tau, double tol) {
    if (tau.rows() != 3) throw std::invalid_argument("theta-null is defined here for genus 3");
    cd prod = 1;
    double prod_abs = 1, prod_upper = 1;
    int radius = 0;
    for (const auto& c : even_characteristics(3)) {
        ThetaValue v = theta_constant(c, tau, tol);
        prod *= v.value;
        prod_abs *= std::abs(v.value);
        prod_upper *= std::abs(v.value) + v.tail_bound + v.rounding_bound;
        radius = std::max(radius, v.radius_used);
    }
    ThetaValue out;
    out.value = prod;
    out.tail_bound = prod_upper - prod_abs;
    out.radius_used = radius;
    out.rounding_bound = 36 * kUnitRoundoff * prod_abs;
    return out;
}

std::complex<double> log_theta_null(const CMatrix& tau, double tol) {
    if (tau.rows() != 3) throw std::invalid_argument("theta-null is defined here for genus 3");
    cd acc = 0;
    for (const auto& c : even_characteristics(3)) acc += std::log(theta_constant(c, tau, tol).value);
    return acc;
}

DecomposableCheck factor_on_decomposable(const Characteristic& c, const CMatrix& tau1, const CMatrix& tau2,
                                         const CVector& z1, const CVector& z2, double tol) {
    const Eigen::Index g1 = tau1.rows(), g2 = tau2.rows();
    if (c.genus() != g1 + g2 || z1.size() != g1 || z2.size() != g2)
        throw std::invalid_argument("incompatible dimensions for a product decomposition");
    Characteristic c1{std::vector<int>(c.eps.begin(), c.eps.begin() + g1),
                      std::vector<int>(c.delta.begin(), c.delta.begin() + g1)};
    Characteristic c2{std::vector<int>(c.eps.begin() + g1, c.eps.end()),
                      std::vector<int>(c.delta.begin() + g1, c.delta.end())};
    CMatrix tau = CMatrix::Zero(g1 + g2, g1 + g2);
    tau.topLeftCorner(g1, g1) = tau1;
    tau.bottomRightCorner(g2, g2) = tau2;
    CVector z(g1 + g2);
    z << z1, z2;
    DecomposableCheck out;
    out.full = theta(c, tau, z, tol);
    out.first = theta(c1, tau1, z1, tol);
    out.second = theta(c2, tau2, z2, tol);
    out.product = out.first.value * out.second.value;
    out.difference = std::abs(out.full.value - out.product);
    double e1 = out.first.tail_bound + out.first.rounding_bound;
    double e2 = out.second.tail_bound + out.second.rounding_bound;
    out.bound = out.full.tail_bound + out.full.rounding_bound + std::abs(out.first.value) * e2 +
                std::abs(out.second.value) * e1 + e1 * e2;
    return out;
}

std::complex<double> theta1(int e, int d, std::complex<double> tau, std::complex<double> z, double tol) {
    CMatrix t(1, 1);
    t(0, 0) = tau;
    CVector zz(1);
    zz(0) = z;
    return theta(Characteristic{{e}, {d}}, t, zz, tol).value;
}

}  // namespace kuga
