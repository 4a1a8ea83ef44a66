#include "kuga/fourier_jacobi.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace kuga {

using cd = std::complex<double>;

namespace {

// Generic over the coefficient ring so the numeric and the exact closed forms
// cannot drift apart. R must support +, -, * and an inverse.
template <class R>
struct Lot {
    R one;
    std::function<R(const R&)> inv;

    R sq(const R& x) const { return x * x; }

    R standard(const R& a, const R& b, const R& c) const {  // a = q~12, b = q~13, c = q~23
        R abc = a * b * c;
        R front = sq(sq(c) - one) * sq(sq(b) - one) * sq(sq(a) - one);
        R negpow = sq(sq(inv(a * b * c)));
        return front * negpow * (abc - a - b + c) * (abc - a + b - c) * (abc + a - b - c) * (abc + a + b + c);
    }
    R k3_plus_1(const R& s1, const R& s2) const {
        return sq(inv(s1 * s2)) * sq(s2 - one) * sq(s1 - one) * sq(s1 * s2 - one);
    }
    R c4(const R& s1, const R& s2) const {
        return (one - s1 - s2) * (s2 - s1 - one) * (s1 - s2 - one) * (s1 + s2 + one);
    }
    R k4_minus_1(const R& s1) const { return sq(s1 - one); }

    R evaluate(const std::string& name, const std::vector<R>& v) const {
        if (name == "1+1+1") return standard(v[0], v[1], v[2]);
        if (name == "K3+1") return k3_plus_1(v[0], v[1]);
        if (name == "C4") return c4(v[0], v[1]);
        if (name == "K4-1") return k4_minus_1(v[0]);
        return one;
    }
};

const std::string& rank3_name(const std::string& cone) {
    const Cone& c = cone_by_name(cone);
    if (c.rank != 3) throw std::invalid_argument("lowest-order coefficients are tabulated for rank-3 cones only");
    return c.name;
}

// Cones whose closed form has negative powers of its inputs.
bool has_negative_powers(const std::string& name) { return name == "1+1+1" || name == "K3+1"; }

template <class T>
void check_count(const std::string& name, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != lot_input_count(name))
        throw std::invalid_argument("cone " + name + " takes " + std::to_string(lot_input_count(name)) +
                                    " bounded values");
}

}  // namespace

int lot_input_count(const std::string& cone) {
    const std::string& name = rank3_name(cone);
    if (name == "1+1+1") return 3;
    if (name == "K3+1" || name == "C4") return 2;
    if (name == "K4-1") return 1;
    return 0;
}

cd lot_coefficient(const std::string& cone, const std::vector<cd>& bounded) {
    const std::string& name = rank3_name(cone);
    check_count(name, bounded);
    if (has_negative_powers(name))
        for (const cd& v : bounded)
            if (v == cd(0)) throw std::domain_error("bounded variable must be nonzero");
    Lot<cd> lot{cd(1), [](const cd& x) { return cd(1) / x; }};
    return lot.evaluate(name, bounded);
}

Cyclotomic lot_coefficient_exact(const std::string& cone, const std::vector<RootOfUnity>& bounded) {
    const std::string& name = rank3_name(cone);
    check_count(name, bounded);
    std::vector<Cyclotomic> v;
    for (const auto& z : bounded) v.push_back(Cyclotomic::from_root(z));
    Lot<Cyclotomic> lot{Cyclotomic(1), [](const Cyclotomic& x) { return x.inverse(); }};
    return lot.evaluate(name, v);
}

double lot_leading_scale(const std::string& cone) {
    rank3_name(cone);
    return -std::ldexp(1.0, 28);
}

cd lot_secondary_q12(cd q13, cd q23) {
    if (q13 == cd(0) || q23 == cd(0)) throw std::domain_error("bounded variable must be nonzero");
    return std::pow(q13 - 1.0, 6) * std::pow(q23 - 1.0, 6) / std::pow(q13 * q23, 3);
}

Cyclotomic lot_secondary_q12_exact(const RootOfUnity& q13, const RootOfUnity& q23) {
    Cyclotomic a = Cyclotomic::from_root(q13), b = Cyclotomic::from_root(q23);
    return (a - 1).pow(6) * (b - 1).pow(6) * Cyclotomic::from_root((q13 * q23).pow(-3));
}

double lot_secondary_scale() { return std::ldexp(1.0, 30); }

CMatrix RankOneBlocks::tau() const {
    const Eigen::Index h = Z.rows();
    if (Z.cols() != h || z.size() != h) throw std::invalid_argument("inconsistent rank-one blocks");
    CMatrix out(h + 1, h + 1);
    out(0, 0) = t;
    out.block(1, 0, h, 1) = z;
    out.block(0, 1, 1, h) = z.transpose();
    out.bottomRightCorner(h, h) = Z;
    return out;
}

CVector RankOneBlocks::argument() const {
    if (b.size() != Z.rows()) throw std::invalid_argument("inconsistent rank-one blocks");
    CVector out(b.size() + 1);
    out << x, b;
    return out;
}

cd fj_truncate_rank1(const Characteristic& c, const RankOneBlocks& blocks, int order, double tol) {
    if (order < 0 || order > 2) throw std::invalid_argument("truncation order must be 0, 1 or 2");
    const Eigen::Index h = blocks.Z.rows();
    if (c.genus() != h + 1 || h < 1) throw std::invalid_argument("rank-one expansion needs genus at least 2");
    Characteristic rest{std::vector<int>(c.eps.begin() + 1, c.eps.end()),
                        std::vector<int>(c.delta.begin() + 1, c.delta.end())};
    const cd ipi(0, std::numbers::pi);
    // With m = n/2 (n of the parity of eps_1) the exponent of a term is
    // pi i (m^2 t + 2 m (x + delta_1/2)) and the rest is theta(Z, b + m z).
    const int n_max = c.eps[0] == 0 ? 2 * order : 2 * order + 1;
    cd sum = 0;
    for (int n = -n_max; n <= n_max; n += 2) {
        const double m = n / 2.0;
        cd factor = std::exp(ipi * (m * m * blocks.t + 2.0 * m * (blocks.x + c.delta[0] / 2.0)));
        CVector arg = blocks.b + m * blocks.z;
        sum += factor * theta(rest, blocks.Z, arg, tol).value;
    }
    return sum;
}

Rational fj_rank1_next_exponent(int eps1, int order) {
    if (eps1 == 0) return Rational((order + 1) * (order + 1), 2);
    const int n = 2 * order + 3;
    return Rational(n * n, 8);
}

cd fj_rank2_11_series(const Characteristic& c, const CMatrix& tau, int max_n, double tol) {
    if (c.genus() != 3 || tau.rows() != 3) throw std::invalid_argument("series needs genus 3");
    if (c.eps[0] != 1 || c.eps[1] != 1) throw std::invalid_argument("series needs eps_1 = eps_2 = 1");
    if (max_n < 1 || max_n % 2 == 0) throw std::invalid_argument("maxN must be a positive odd integer");
    const cd ipi(0, std::numbers::pi);
    CMatrix t33(1, 1);
    t33(0, 0) = tau(2, 2);
    Characteristic last{{c.eps[2]}, {c.delta[2]}};
    cd sum = 0;
    for (int n1 = -max_n; n1 <= max_n; n1 += 2)
        for (int n2 = -max_n; n2 <= max_n; n2 += 2) {
            // q~11 = q11^{1/8}, q~12 = q12^{1/4}, i^{n d} = e^{pi i n d / 2}
            cd expo = ipi * (tau(0, 0) * (n1 * n1 / 4.0) + tau(1, 1) * (n2 * n2 / 4.0) +
                             tau(0, 1) * (n1 * n2 / 2.0) + (n1 * c.delta[0] + n2 * c.delta[1]) / 2.0);
            CVector arg(1);
            arg(0) = (static_cast<double>(n1) * tau(0, 2) + static_cast<double>(n2) * tau(1, 2)) / 2.0;
            sum += std::exp(expo) * theta(last, t33, arg, tol).value;
        }
    return sum;
}

namespace {

struct Ray {
    std::vector<int> growth;
    std::vector<cd> xi;
};

Ray make_ray(const Cone& cone, const LotAnchor& anchor) {
    const std::size_t k = static_cast<std::size_t>(cone.unbounded.rows());
    Ray r{anchor.growth, anchor.xi};
    if (r.growth.empty()) r.growth.assign(k, 1);
    if (r.xi.empty()) r.xi.assign(k, cd(1));
    if (r.growth.size() != k || r.xi.size() != k)
        throw std::invalid_argument("ray needs one growth rate and one xi per unbounded variable");
    for (int f : r.growth)
        if (f <= 0) throw std::invalid_argument("growth rates must be positive");
    for (const cd& x : r.xi)
        if (x == cd(0)) throw std::invalid_argument("xi must be nonzero");
    return r;
}

void check_samples(const std::vector<double>& im_t) {
    if (im_t.empty()) throw std::invalid_argument("no sample points");
    for (double s : im_t)
        if (!(s > 0)) throw std::invalid_argument("sample points need Im t > 0");
}

// Compares theta_null with scale * coefficient * prod T_i^{e_i} at each sample point.
// x_S are the log-coordinates of the bounded variables, fixed along the ray.
template <class CoefficientAt>
LotReport walk_ray(const Cone& cone, const std::vector<Rational>& exponents, const Ray& ray,
                   const std::vector<cd>& x_s, const std::vector<double>& im_t, double scale,
                   CoefficientAt coefficient_at, double tol) {
    const cd two_pi_i(0, 2 * std::numbers::pi);
    LotReport rep;
    rep.cone = cone.name;
    rep.monomial = exponents;
    for (double s : im_t) {
        const cd t(0, s);
        std::vector<cd> logs;
        cd log_monomial = 0;
        for (std::size_t i = 0; i < ray.growth.size(); ++i) {
            cd x = static_cast<double>(ray.growth[i]) * t + std::log(ray.xi[i]) / two_pi_i;
            logs.push_back(x);
            log_monomial += two_pi_i * to_double(exponents[i]) * x;
        }
        for (const cd& x : x_s) logs.push_back(x);
        CMatrix tau = tau_from_log_coords(cone, logs);
        cd predicted = scale * coefficient_at(tau);
        rep.predicted = predicted;
        cd ratio = std::exp(log_theta_null(tau, tol) - log_monomial - std::log(predicted));
        rep.samples.push_back({s, ratio, std::abs(ratio - 1.0)});
    }
    rep.monotone = true;
    for (std::size_t i = 1; i < rep.samples.size(); ++i)
        rep.monotone = rep.monotone && (rep.samples[i].deviation < rep.samples[i - 1].deviation ||
                                        rep.samples[i].deviation < kLotNoiseFloor);
    rep.pass = rep.monotone && rep.samples.back().deviation < 1e-3;
    return rep;
}

}  // namespace

LotReport lot_numeric_verify(const std::string& cone_name, const LotAnchor& anchor, double tol) {
    const Cone& cone = cone_by_name(cone_name);
    const std::string& name = rank3_name(cone.name);
    check_count(name, anchor.bounded);
    check_samples(anchor.im_t);
    Ray ray = make_ray(cone, anchor);
    if (cyclotomic_is_zero(lot_coefficient_exact(name, anchor.bounded)))
        throw std::domain_error("leading term vanishes; use secondary term");

    // The inputs of the closed form are half-powers for these two cones.
    const bool half = name == "1+1+1" || name == "C4";
    std::vector<cd> x_s;
    for (const auto& z : anchor.bounded) x_s.emplace_back(to_double(z.exponent()) * (half ? 2.0 : 1.0), 0.0);

    // Recompute the inputs from tau itself so the comparison also checks the coordinates.
    const Eigen::MatrixXi& rows = cone.bounded;
    auto coefficient_at = [&](const CMatrix& tau) {
        std::vector<cd> inputs;
        for (Eigen::Index j = 0; j < rows.rows(); ++j) {
            cd x = 0;
            for (std::size_t e = 0; e < cone.entries.size(); ++e) {
                auto [r, c] = kQEntries[cone.entries[e]];
                x += static_cast<double>(rows(j, static_cast<Eigen::Index>(e))) * tau(r, c);
            }
            inputs.push_back(std::exp(cd(0, (half ? 1.0 : 2.0) * std::numbers::pi) * x));
        }
        return lot_coefficient(name, inputs);
    };
    auto lot = theta_null_lowest_exponents(cone, 3);
    return walk_ray(cone, lot.exponents, ray, x_s, anchor.im_t, lot_leading_scale(name), coefficient_at, tol);
}

LotReport lot_secondary_verify(const LotAnchor& anchor, double tol) {
    const Cone& cone = cone_by_name("1+1+1");
    if (anchor.bounded.size() != 2) throw std::invalid_argument("secondary term takes (q13, q23)");
    check_samples(anchor.im_t);
    Ray ray = make_ray(cone, anchor);
    if (cyclotomic_is_zero(lot_secondary_q12_exact(anchor.bounded[0], anchor.bounded[1])))
        throw std::domain_error("secondary term vanishes");
    std::vector<cd> x_s{cd(0), cd(to_double(anchor.bounded[0].exponent())), cd(to_double(anchor.bounded[1].exponent()))};
    auto coefficient_at = [](const CMatrix& tau) {
        const cd two_pi_i(0, 2 * std::numbers::pi);
        return lot_secondary_q12(std::exp(two_pi_i * tau(0, 2)), std::exp(two_pi_i * tau(1, 2)));
    };
    std::vector<Rational> exponents{Rational(2), Rational(2), Rational(3)};
    return walk_ray(cone, exponents, ray, x_s, anchor.im_t, lot_secondary_scale(), coefficient_at, tol);
}

}  // namespace kuga
