#include "kuga/lattice.hpp"

#include <stdexcept>

namespace kuga {

QMatrix to_rational(const Eigen::MatrixXi& a) {
    QMatrix q(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) q(i, j) = Rational(a(i, j));
    return q;
}

QMatrix to_rational(const ZMatrix& a) {
    QMatrix q(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) q(i, j) = Rational(a(i, j));
    return q;
}

GMatrix to_gaussian(const QMatrix& a) {
    GMatrix g(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) g(i, j) = GaussianRational(a(i, j));
    return g;
}

KMatrix to_cyclotomic(const QMatrix& a) {
    KMatrix k(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) k(i, j) = Cyclotomic(a(i, j));
    return k;
}

KMatrix to_cyclotomic(const GMatrix& a) {
    KMatrix k(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) k(i, j) = Cyclotomic::from_gaussian(a(i, j));
    return k;
}

Eigen::MatrixXd to_double(const QMatrix& a) {
    Eigen::MatrixXd d(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) d(i, j) = to_double(a(i, j));
    return d;
}

CMatrix to_complex(const GMatrix& a) {
    CMatrix c(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).to_complex();
    return c;
}

CMatrix to_complex(const KMatrix& a) {
    CMatrix c(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).to_complex();
    return c;
}

QMatrix real_part(const GMatrix& a) {
    QMatrix q(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) q(i, j) = a(i, j).re();
    return q;
}

QMatrix imag_part(const GMatrix& a) {
    QMatrix q(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) q(i, j) = a(i, j).im();
    return q;
}

bool is_integral(const QMatrix& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_integer(a(i, j))) return false;
    return true;
}

ZMatrix clear_denominators(const QMatrix& a) {
    ZMatrix z(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (Eigen::Index j = 0; j < a.cols(); ++j) l = lcm(l, denominator(a(i, j)));
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            Rational v = a(i, j) * Rational(l);
            z(i, j) = numerator(v);
        }
    }
    return z;
}

namespace {

// Unimodular row reduction of the first `ncols` columns of `a`, carrying the
// remaining columns along. Returns the number of nonzero rows in the reduced block.
Eigen::Index integer_echelon(ZMatrix& a, Eigen::Index ncols) {
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < ncols && row < a.rows(); ++col) {
        // Euclid on the column: bring the gcd of rows >= row to position (row, col).
        while (true) {
            Eigen::Index best = -1;
            for (Eigen::Index r = row; r < a.rows(); ++r)
                if (a(r, col) != 0 && (best < 0 || abs(a(r, col)) < abs(a(best, col)))) best = r;
            if (best < 0) break;
            if (best != row) a.row(best).swap(a.row(row));
            bool done = true;
            for (Eigen::Index r = row + 1; r < a.rows(); ++r) {
                if (a(r, col) == 0) continue;
                Integer q = a(r, col) / a(row, col);
                for (Eigen::Index k = 0; k < a.cols(); ++k) a(r, k) -= q * a(row, k);
                if (a(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0)
            for (Eigen::Index k = 0; k < a.cols(); ++k) a(row, k) = -a(row, k);
        // Reduce the entries above the pivot.
        for (Eigen::Index r = 0; r < row; ++r) {
            Integer q = a(r, col) / a(row, col);
            if (a(r, col) - q * a(row, col) < 0) q -= 1;
            if (q != 0)
                for (Eigen::Index k = 0; k < a.cols(); ++k) a(r, k) -= q * a(row, k);
        }
        ++row;
    }
    return row;
}

}  // namespace

ZMatrix hermite_normal_form(ZMatrix a) {
    Eigen::Index rank = integer_echelon(a, a.cols());
    return a.topRows(rank);
}

ZMatrix integer_kernel(const QMatrix& a) {
    ZMatrix b = clear_denominators(a);
    const Eigen::Index n = b.cols();
    ZMatrix aug(n, b.rows() + n);
    aug.leftCols(b.rows()) = b.transpose();
    aug.rightCols(n) = ZMatrix::Identity(n, n);
    Eigen::Index rank = integer_echelon(aug, b.rows());
    ZMatrix basis = aug.bottomRows(n - rank).rightCols(n);
    if (basis.rows() == 0) return ZMatrix(n, 0);
    return hermite_normal_form(basis).transpose();
}

ZMatrix symplectic_form_z(int g) {
    ZMatrix j = ZMatrix::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

Integer symplectic_pairing(const ZVector& m1, const ZVector& m2) {
    if (m1.size() != m2.size() || m1.size() % 2 != 0)
        throw std::invalid_argument("pairing needs two vectors of equal even length");
    const Eigen::Index g = m1.size() / 2;
    Integer s = 0;
    for (Eigen::Index i = 0; i < g; ++i) s += m1(i) * m2(g + i) - m1(g + i) * m2(i);
    return s;
}

Integer determinant_bareiss(ZMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Eigen::Index n = a.rows();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.row(p).swap(a.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace kuga
