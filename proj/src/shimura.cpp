#include "kuga/shimura.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

namespace kuga {

using cd = std::complex<double>;

namespace {

const GaussianRational kI(Rational(0), Rational(1));

QMatrix slope_11_0() {
    QMatrix s = QMatrix::Zero(3, 3);
    s(0, 0) = 1;
    s(1, 1) = 1;
    return s;
}

AffinePeriodFamily finish(GMatrix offset) {
    AffinePeriodFamily f;
    f.genus = 3;
    f.slope = slope_11_0();
    f.offset = std::move(offset);
    f.domain_bound = family_domain_bound(f.slope, imag_part(f.offset));
    return f;
}

GMatrix symmetric3(const GaussianRational& a11, const GaussianRational& a12, const GaussianRational& a13,
                   const GaussianRational& a22, const GaussianRational& a23, const GaussianRational& a33) {
    GMatrix m(3, 3);
    m << a11, a12, a13, a12, a22, a23, a13, a23, a33;
    return m;
}

cd i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 1: return {0, 1};
        case 2: return {-1, 0};
        case 3: return {0, -1};
        default: return {1, 0};
    }
}

}  // namespace

AffinePeriodFamily pi_u(const GaussianRational& u) {
    if (u.is_gaussian_integer()) throw std::invalid_argument("degenerate parameter");
    const GaussianRational u2 = u * u;
    return finish(symmetric3(kI * u2, u2 / GaussianRational(2), kI * u, GaussianRational(0), u, kI));
}

AffinePeriodFamily example_family(const Rational& a, const Rational& b) {
    if (is_integer(a) && is_integer(b)) throw std::invalid_argument("degenerate parameter");
    return finish(symmetric3(GaussianRational(0, a * a), GaussianRational((a * a - b * b) / 2, a * b),
                             GaussianRational(-b, a), GaussianRational(2 * a * b, b * b), GaussianRational(a, b),
                             kI));
}

FamilyComparison compare_families(const Rational& a, const Rational& b) {
    FamilyComparison out;
    const auto ex = example_family(a, b);
    const auto pu = pi_u(GaussianRational(a, b));
    out.difference = ex.offset - pu.offset;
    out.shift = GaussianRational(2 * a * b, b * b);
    GMatrix expected = to_gaussian(ex.slope) * out.shift;
    out.is_parameter_shift = exact_equal<GaussianRational>(out.difference, expected) &&
                             exact_equal<Rational>(ex.slope, pu.slope);
    return out;
}

Characteristic vanishing_characteristic() { return make_characteristic("110", "110"); }

VanishingReport verify_vanishing(const GaussianRational& u, const std::vector<cd>& t_samples, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const auto fam = pi_u(u);
    const Characteristic target = vanishing_characteristic();
    VanishingReport rep;
    rep.u = u;
    rep.pass = !t_samples.empty();
    const double theta_tol = std::min(tol * 1e-3, 1e-12);
    for (const cd& t : t_samples) {
        CMatrix tau = evaluate_family(fam, t);
        VanishingSample s;
        s.t = t;
        s.other_min_abs = std::numeric_limits<double>::infinity();
        for (const auto& c : even_characteristics(3)) {
            ThetaValue v = theta_constant(c, tau, theta_tol);
            if (c == target) {
                s.vanishing_abs = std::abs(v.value);
                s.vanishing_bound = v.tail_bound + v.rounding_bound;
            } else if (std::abs(v.value) < s.other_min_abs) {
                s.other_min_abs = std::abs(v.value);
                s.other_argmin = c.str();
            }
        }
        rep.pass = rep.pass && s.vanishing_abs < tol;
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

RelationsReport relations_check(const Rational& a, const Rational& b) {
    RelationsReport rep;
    rep.a = a;
    rep.b = b;
    const auto fam = example_family(a, b);
    const GMatrix& o = fam.offset;
    const GaussianRational tau12 = o(0, 1), tau13 = o(0, 2), tau23 = o(1, 2);
    rep.tau12_is_half_tau23_squared = tau12 == tau23 * tau23 / GaussianRational(2);
    // t enters tau11 and tau22 with the same coefficient, so the offsets suffice.
    rep.gamma_exponent_matches = o(1, 1) - o(0, 0) == GaussianRational(0, -1) * tau23 * tau23;
    rep.tau13_squared_is_minus_tau23_squared = tau13 * tau13 == -(tau23 * tau23);
    rep.r12 = frac_part(tau12.re());
    rep.r22 = frac_part(o(1, 1).re());
    rep.expected_r12 = frac_part((a * a - b * b) / 2);
    rep.expected_r22 = frac_part(2 * a * b);
    const cd ipi(0, std::numbers::pi);
    const cd q12_tilde = std::exp(ipi * tau12.to_complex() / 2.0);
    const cd t23 = tau23.to_complex();
    rep.numeric_residual = std::abs(q12_tilde * q12_tilde - std::exp(ipi * t23 * t23 / 2.0));
    rep.pass = rep.tau12_is_half_tau23_squared && rep.gamma_exponent_matches &&
               rep.tau13_squared_is_minus_tau23_squared && rep.r12 == rep.expected_r12 &&
               rep.r22 == rep.expected_r22 && rep.numeric_residual < 1e-12;
    return rep;
}

GroupResidual fj_group_vanishing(const GaussianRational& u, int n1, int n2, double tol) {
    if (n1 % 2 == 0 || n2 % 2 == 0) throw std::invalid_argument("group indices must be odd");
    if (!(n1 >= n2 && n2 > 0)) throw std::invalid_argument("group indices need n1 >= n2 > 0");
    const auto fam = example_family(u.re(), u.im());
    const CMatrix o = to_complex(fam.offset);
    const cd ipi(0, std::numbers::pi);
    const cd gamma_log = ipi * (o(1, 1) - o(0, 0)) / 4.0;   // log of gamma
    const cd q12_log = ipi * o(0, 1) / 2.0;                 // log of q~12
    const cd tau33 = o(2, 2);

    GroupResidual out;
    out.n1 = n1;
    out.n2 = n2;
    std::set<std::pair<int, int>> members{{n1, n2}, {n1, -n2}, {n2, n1}, {n2, -n1}};
    out.members.assign(members.begin(), members.end());
    for (auto [v1, v2] : out.members) {
        cd z = (static_cast<double>(v1) * o(0, 2) + static_cast<double>(v2) * o(1, 2)) / 2.0;
        cd term = std::exp(gamma_log * static_cast<double>(v2 * v2) + q12_log * static_cast<double>(v1 * v2)) *
                  i_power(v1 + v2) * theta1(0, 0, tau33, z, tol);
        out.sum += term;
        out.scale += std::abs(term);
    }
    out.residual = out.scale > 0 ? std::abs(out.sum) / out.scale : 0.0;
    return out;
}

std::vector<ZVector> reference_fixed_generators(long n) {
    const Integer n2 = Integer(n) * n;
    ZVector g1(6), g2(6);
    g1 << n2, n2, -(2 * n2 - 1), -n2 * (2 * n2 - 1), n2, 0;
    g2 << 0, 0, 0, 0, 0, 1;
    return {g1, g2};
}

namespace {

// Real embedding of a complex 3-vector family: rows (Re x1, Im x1, Re x2, ...).
QMatrix real_rows(const GMatrix& v) {
    QMatrix out(2 * v.rows(), v.cols());
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            out(2 * i, j) = v(i, j).re();
            out(2 * i + 1, j) = v(i, j).im();
        }
    return out;
}

QMatrix kernel_rows_or_zero(const QMatrix& a, Eigen::Index cols) {
    if (a.rows() == 0) return QMatrix::Zero(1, cols);
    return a;
}

}  // namespace

FixedPartReport fixed_part_lattice(const GaussianRational& u) {
    const auto fam = pi_u(u);
    FixedPartReport rep;
    rep.u = u;

    // Lattice vector m gives t * slope * m_top + offset * m_top + m_bot.
    QMatrix t_rows = QMatrix::Zero(3, 6);
    t_rows.leftCols(3) = fam.slope;
    GMatrix const_part(3, 6);
    const_part.leftCols(3) = fam.offset;
    const_part.rightCols(3) = to_gaussian(QMatrix(QMatrix::Identity(3, 3)));

    // t-independent sublattice
    ZMatrix l0 = integer_kernel(t_rows);
    rep.constant_rank = static_cast<int>(l0.cols());
    QMatrix l0q = to_rational(l0);
    GMatrix values = exact_product<GaussianRational>(const_part, to_gaussian(l0q));   // 3 x r0, constant vectors

    // Largest complex subspace W of their real span U: pairs (a, b) with V a = i V b.
    const Eigen::Index r0 = l0.cols();
    GMatrix iv = GMatrix::Constant(3, r0, kI).cwiseProduct(values);
    QMatrix pair(6, 2 * r0);
    pair.leftCols(r0) = real_rows(values);
    pair.rightCols(r0) = -real_rows(iv);
    QMatrix k = exact_kernel<Rational>(pair);
    QMatrix w_coords = k.topRows(r0);                       // spans W in L0-coordinates
    QMatrix eqs = exact_kernel<Rational>(QMatrix(w_coords.transpose())).transpose();
    ZMatrix lambda_coords = integer_kernel(kernel_rows_or_zero(eqs, r0));
    ZMatrix lambda = exact_product<Integer>(l0, lambda_coords);

    // The literal reading: vectors with identically vanishing first two coordinates.
    QMatrix axis(7, 6);
    axis.topRows(3) = t_rows;
    axis.bottomRows(4) = real_rows(GMatrix(const_part.topRows(2)));
    rep.axis_rank = static_cast<int>(integer_kernel(axis).cols());

    Integer den = denominator(u.re()) * denominator(u.im()) / gcd(denominator(u.re()), denominator(u.im()));
    const long n = den.convert_to<long>();
    const auto span_rank = exact_rank<Rational>(to_rational(lambda));
    for (const ZVector& g : reference_fixed_generators(n)) {
        ZMatrix aug(6, lambda.cols() + 1);
        aug << lambda, g;
        rep.reference_generators_in_lattice.push_back(exact_rank<Rational>(to_rational(aug)) == span_rank);
        QMatrix tg = exact_product<Rational>(t_rows, to_rational(ZMatrix(g)));
        rep.reference_generators_t_independent.push_back(exact_is_zero<Rational>(tg));
    }

    rep.basis = lambda;
    if (lambda.cols() != 2) throw std::runtime_error("unexpected fixed-part rank");
    ZVector m1 = lambda.col(0), m2 = lambda.col(1);
    rep.degree = abs(symplectic_pairing(m1, m2));
    return rep;
}

}  // namespace kuga
