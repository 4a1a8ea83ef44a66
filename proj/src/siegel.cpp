#include "kuga/siegel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace kuga {

namespace {

double min_eigenvalue(const Eigen::MatrixXd& y) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Positive definiteness by exact symmetric elimination: all pivots must be positive.
bool exact_positive_definite(QMatrix y) {
    const Eigen::Index n = y.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (y(k, k) <= 0) return false;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            Rational f = y(i, k) / y(k, k);
            for (Eigen::Index j = k; j < n; ++j) y(i, j) -= f * y(k, j);
        }
    }
    return true;
}

template <class M>
bool exactly_symmetric(const M& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

}  // namespace

bool is_siegel_point(const CMatrix& m, double sym_tol) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > sym_tol) return false;
    Eigen::MatrixXd y = m.imag();
    y = (y + y.transpose()) / 2;
    return min_eigenvalue(y) > 0;
}

bool is_siegel_point(const GMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    if (!exactly_symmetric(m)) return false;
    return exact_positive_definite(imag_part(m));
}

QMatrix symplectic_form(int g) {
    QMatrix j = QMatrix::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

Rational similitude_factor(const QMatrix& gamma) {
    if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0 || gamma.rows() == 0) return 0;
    const int g = static_cast<int>(gamma.rows() / 2);
    QMatrix j = symplectic_form(g);
    QMatrix lhs = exact_product<Rational>(exact_product<Rational>(gamma.transpose(), j), gamma);
    Rational c = lhs(0, g);
    if (c == 0) return 0;
    return exact_equal<Rational>(lhs, QMatrix(j * c)) ? c : Rational(0);
}

bool is_symplectic(const QMatrix& gamma) { return similitude_factor(gamma) == 1; }

CMatrix fractional_action(const QMatrix& gamma, const CMatrix& tau) {
    const Eigen::Index g = tau.rows();
    if (gamma.rows() != 2 * g || gamma.cols() != 2 * g)
        throw std::invalid_argument("matrix and period matrix sizes do not match");
    CMatrix gd = to_double(gamma).cast<std::complex<double>>();
    CMatrix num = gd.topLeftCorner(g, g) * tau + gd.topRightCorner(g, g);
    CMatrix den = gd.bottomLeftCorner(g, g) * tau + gd.bottomRightCorner(g, g);
    Eigen::FullPivLU<CMatrix> lu(den);
    // A relative threshold: the pivots must not be negligible against the entries.
    lu.setThreshold(1e-13);
    if (!lu.isInvertible()) throw std::runtime_error("non-invertible denominator");
    // X = num * den^{-1}  <=>  den^T X^T = num^T
    CMatrix x = den.transpose().fullPivLu().solve(num.transpose()).transpose();
    return x;
}

GMatrix fractional_action(const QMatrix& gamma, const GMatrix& tau) {
    const Eigen::Index g = tau.rows();
    if (gamma.rows() != 2 * g || gamma.cols() != 2 * g)
        throw std::invalid_argument("matrix and period matrix sizes do not match");
    GMatrix gg = to_gaussian(gamma);
    GMatrix num = exact_product<GaussianRational>(gg.topLeftCorner(g, g), tau) + GMatrix(gg.topRightCorner(g, g));
    GMatrix den = exact_product<GaussianRational>(gg.bottomLeftCorner(g, g), tau) + GMatrix(gg.bottomRightCorner(g, g));
    GMatrix inv;
    try {
        inv = exact_inverse<GaussianRational>(den);
    } catch (const std::domain_error&) {
        throw std::runtime_error("non-invertible denominator");
    }
    return exact_product<GaussianRational>(num, inv);
}

CMatrix siegel_action(const QMatrix& gamma, const CMatrix& tau) {
    if (!is_symplectic(gamma)) throw std::invalid_argument("matrix is not symplectic");
    if (!is_siegel_point(tau)) throw std::invalid_argument("not a point of the Siegel upper half-space");
    CMatrix x = fractional_action(gamma, tau);
    return (x + x.transpose()) / 2.0;
}

QMatrix block_diagonal_symplectic(const QMatrix& a) {
    const Eigen::Index g = a.rows();
    QMatrix m = QMatrix::Zero(2 * g, 2 * g);
    m.topLeftCorner(g, g) = a;
    m.bottomRightCorner(g, g) = exact_inverse<Rational>(a).transpose();
    return m;
}

double family_domain_bound(const QMatrix& slope, const QMatrix& im_offset) {
    Eigen::MatrixXd e = to_double(slope);
    Eigen::MatrixXd y = to_double(im_offset);
    auto f = [&](double s) { return min_eigenvalue(y + s * e); };
    if (e.isZero(0.0)) {
        if (f(0.0) > 0) return 0.0;
        throw std::invalid_argument("constant family is not in the Siegel space");
    }
    if (f(0.0) > 0) return 0.0;
    double hi = 1.0;
    while (f(hi) <= 0) {
        hi *= 2;
        if (hi > 1e12) throw std::invalid_argument("family never enters the Siegel space");
    }
    // lambda_min(Y + sE) is concave and nondecreasing in s, so its positive set is a ray.
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        double mid = (lo + hi) / 2;
        (f(mid) > 0 ? hi : lo) = mid;
    }
    return hi;
}

CMatrix evaluate_family(const AffinePeriodFamily& f, std::complex<double> t) {
    if (!(t.imag() > f.domain_bound)) throw std::domain_error("outside family domain");
    CMatrix tau = to_complex(f.offset);
    tau += t * to_double(f.slope).cast<std::complex<double>>();
    return tau;
}

GMatrix evaluate_family_exact(const AffinePeriodFamily& f, const GaussianRational& t) {
    if (!(to_double(t.im()) > f.domain_bound)) throw std::domain_error("outside family domain");
    GMatrix tau = f.offset;
    for (Eigen::Index i = 0; i < tau.rows(); ++i)
        for (Eigen::Index j = 0; j < tau.cols(); ++j)
            if (f.slope(i, j) != 0) tau(i, j) += t * GaussianRational(f.slope(i, j));
    return tau;
}

AffinePeriodFamily build_varphi(const QMatrix& e, const QMatrix& a, const GMatrix& z, const QMatrix& r) {
    const Eigen::Index rr = e.rows();
    const Eigen::Index g = a.rows();
    if (e.cols() != rr || a.cols() != g || r.rows() != g || r.cols() != g || z.rows() != g - rr ||
        z.cols() != g - rr)
        throw std::invalid_argument("inconsistent block sizes");
    if (!is_integral(e) || !exactly_symmetric(e)) throw std::invalid_argument("E must be integer symmetric");
    if (exact_is_zero<Rational>(e)) throw std::invalid_argument("E must be nonzero");
    if (min_eigenvalue(to_double(e)) < -1e-12) throw std::invalid_argument("E must be positive semidefinite");
    if (exact_rank<Rational>(a) < g) throw std::invalid_argument("A is singular");
    if (!exactly_symmetric(r)) throw std::invalid_argument("R is not symmetric");
    if (z.rows() > 0 && !is_siegel_point(z)) throw std::invalid_argument("Z is not a Siegel point");

    AffinePeriodFamily f;
    f.genus = static_cast<int>(g);
    f.slope = QMatrix::Zero(g, g);
    f.slope.topLeftCorner(rr, rr) = e;
    GMatrix zz = GMatrix::Zero(g, g);
    if (z.rows() > 0) zz.bottomRightCorner(g - rr, g - rr) = z;
    GMatrix ag = to_gaussian(a);
    f.offset = exact_product<GaussianRational>(exact_product<GaussianRational>(ag, zz), GMatrix(ag.transpose())) +
               to_gaussian(r);
    f.domain_bound = family_domain_bound(f.slope, imag_part(f.offset));
    return f;
}

QMatrix rank_one_K(const Rational& a, const Rational& b) {
    QMatrix k(3, 3);
    k << a * a, a * b, a, a * b, b * b, b, a, b, Rational(1);
    return k;
}

QMatrix random_symplectic_word(int g, int length, std::mt19937_64& rng) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    std::uniform_int_distribution<int> kind(0, 2), index(0, g - 1), sign(0, 1);
    QMatrix word = QMatrix::Identity(2 * g, 2 * g);
    for (int step = 0; step < length; ++step) {
        QMatrix gen = QMatrix::Identity(2 * g, 2 * g);
        const int k = kind(rng);
        const int i = index(rng), j = index(rng);
        const Rational s = sign(rng) ? 1 : -1;
        if (k == 0) {
            gen(i, g + j) += s;
            if (i != j) gen(j, g + i) += s;
        } else if (k == 1 && i != j) {
            QMatrix a = QMatrix::Identity(g, g);
            a(i, j) = s;
            gen = block_diagonal_symplectic(a);
        } else {
            gen = symplectic_form(g);
        }
        word = exact_product<Rational>(word, gen);
    }
    return word;
}

CMatrix random_siegel_point(int g, std::mt19937_64& rng, double im_floor) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::MatrixXd w(g, g), re(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) w(i, j) = unit(rng);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) re(i, j) = re(j, i) = unit(rng) / 2;
    Eigen::MatrixXd im = im_floor * Eigen::MatrixXd::Identity(g, g) + w * w.transpose() / 4;
    CMatrix tau(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) tau(i, j) = {re(i, j), (im(i, j) + im(j, i)) / 2};
    return tau;
}

}  // namespace kuga
