#pragma once

// Exact dense linear algebra over the field scalars used in this library
// (Rational, GaussianRational, Cyclotomic). Pivoting is on exact nonzero
// tests, never on magnitude.

#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "kuga/cyclotomic.hpp"
#include "kuga/exact.hpp"

namespace kuga {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using QMatrix = Mat<Rational>;
using QVector = Vec<Rational>;
using ZMatrix = Mat<Integer>;
using ZVector = Vec<Integer>;
using GMatrix = Mat<GaussianRational>;
using KMatrix = Mat<Cyclotomic>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<Eigen::Index> rref_in_place(Mat<T>& a) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && is_zero(a(p, col))) ++p;
        if (p == a.rows()) continue;
        if (p != row) a.row(p).swap(a.row(row));
        T inv = T(1) / a(row, col);
        for (Eigen::Index k = col; k < a.cols(); ++k) a(row, k) = a(row, k) * inv;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || is_zero(a(r, col))) continue;
            T f = a(r, col);
            for (Eigen::Index k = col; k < a.cols(); ++k) a(r, k) -= f * a(row, k);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
Eigen::Index exact_rank(Mat<T> a) {
    return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Basis of the right null space, one vector per column.
template <class T>
Mat<T> exact_kernel(Mat<T> a) {
    auto pivots = rref_in_place(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Eigen::Index nfree = a.cols() - static_cast<Eigen::Index>(pivots.size());
    Mat<T> k = Mat<T>::Zero(a.cols(), nfree);
    Eigen::Index j = 0;
    for (Eigen::Index f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        k(f, j) = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], j) = -a(static_cast<Eigen::Index>(r), f);
        ++j;
    }
    return k;
}

template <class T>
Mat<T> exact_inverse(const Mat<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const Eigen::Index n = a.rows();
    Mat<T> aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = Mat<T>::Identity(n, n);
    auto pivots = rref_in_place(aug);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n)
        throw std::domain_error("matrix is singular");
    return aug.rightCols(n);
}

template <class T>
bool exact_is_zero(const Mat<T>& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <class T>
bool exact_equal(const Mat<T>& a, const Mat<T>& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && exact_is_zero<T>(a - b);
}

/// Plain triple-loop product; used where operand scalar types are heavy and the
/// sizes are tiny, so blocking buys nothing.
template <class T>
Mat<T> exact_product(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("product dimension mismatch");
    Mat<T> c = Mat<T>::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Mat<T> exact_power(const Mat<T>& a, int k) {
    Mat<T> result = Mat<T>::Identity(a.rows(), a.cols());
    Mat<T> base = a;
    while (k > 0) {
        if (k & 1) result = exact_product(result, base);
        base = exact_product(base, base);
        k >>= 1;
    }
    return result;
}

QMatrix to_rational(const Eigen::MatrixXi& a);
GMatrix to_gaussian(const QMatrix& a);
KMatrix to_cyclotomic(const QMatrix& a);
KMatrix to_cyclotomic(const GMatrix& a);
Eigen::MatrixXd to_double(const QMatrix& a);
CMatrix to_complex(const GMatrix& a);
CMatrix to_complex(const KMatrix& a);
QMatrix real_part(const GMatrix& a);
QMatrix imag_part(const GMatrix& a);
bool is_integral(const QMatrix& a);

}  // namespace kuga
