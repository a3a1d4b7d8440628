#ifndef LOOPCOH_LINALG_HPP
#define LOOPCOH_LINALG_HPP

#include <vector>

#include <Eigen/Dense>

#include "loopcoh/fp.hpp"

namespace loopcoh {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using PrimeFieldMatrix = DenseMatrix<Fp>;
using PrimeFieldVector = DenseVector<Fp>;
using RationalMatrix = DenseMatrix<Rational>;

/// Result of a row reduction: the reduced matrix, its rank and pivot columns.
template <typename Scalar>
struct Echelon
{
    DenseMatrix<Scalar> reduced;
    Eigen::Index rank = 0;
    std::vector<Eigen::Index> pivot_cols;
};

/**
 * Reduced row-echelon form by Gauss-Jordan elimination with exact scalar
 * arithmetic.  Pivots are chosen as the first nonzero entry in column order,
 * so the result is deterministic.
 */
template <typename Scalar>
Echelon<Scalar> rref(DenseMatrix<Scalar> m)
{
    Echelon<Scalar> out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (!scalar_is_zero(m(i, col))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != row)
            m.row(pivot).swap(m.row(row));
        Scalar inv = Scalar(1) / m(row, col);
        for (Eigen::Index j = col; j < cols; ++j)
            m(row, j) = m(row, j) * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || scalar_is_zero(m(i, col)))
                continue;
            Scalar factor = m(i, col);
            for (Eigen::Index j = col; j < cols; ++j)
                m(i, j) = m(i, j) - factor * m(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index matrix_rank(const DenseMatrix<Scalar>& m)
{
    return rref(m).rank;
}

/**
 * Basis of the right kernel {v : Mv = 0}, one vector per free column,
 * ordered by free column index.  Size is cols - rank.
 */
template <typename Scalar>
std::vector<DenseVector<Scalar>> kernel_basis(const DenseMatrix<Scalar>& m)
{
    Echelon<Scalar> e = rref(m);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (Eigen::Index c : e.pivot_cols)
        is_pivot[c] = true;

    std::vector<DenseVector<Scalar>> basis;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        DenseVector<Scalar> v = DenseVector<Scalar>::Constant(cols, Scalar(0));
        v(free_col) = Scalar(1);
        for (Eigen::Index i = 0; i < e.rank; ++i)
            v(e.pivot_cols[i]) = -e.reduced(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reduce a row vector against the echelon's pivot rows.
template <typename Scalar>
DenseVector<Scalar> reduce_against(const Echelon<Scalar>& e, DenseVector<Scalar> v)
{
    for (Eigen::Index i = 0; i < e.rank; ++i) {
        const Scalar& c = v(e.pivot_cols[i]);
        if (scalar_is_zero(c))
            continue;
        Scalar factor = c;
        for (Eigen::Index j = 0; j < v.size(); ++j)
            v(j) = v(j) - factor * e.reduced(i, j);
    }
    return v;
}

template <typename Scalar>
bool in_row_space(const Echelon<Scalar>& e, const DenseVector<Scalar>& v)
{
    DenseVector<Scalar> red = reduce_against(e, v);
    for (Eigen::Index j = 0; j < red.size(); ++j)
        if (!scalar_is_zero(red(j)))
            return false;
    return true;
}

/// Exact matrix-vector product via explicit loops.  Eigen's expression
/// operator* is not usable for every exact scalar on this toolchain (the
/// boost rational backend's converting constructor is not SFINAE-safe), so
/// products of exact matrices go through these helpers.
template <typename Scalar>
DenseVector<Scalar> mat_vec(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& v)
{
    DenseVector<Scalar> out = DenseVector<Scalar>::Constant(a.rows(), Scalar(0));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Scalar acc = Scalar(0);
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            acc = acc + a(i, j) * v(j);
        out(i) = acc;
    }
    return out;
}

template <typename Scalar>
DenseMatrix<Scalar> mat_mul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b)
{
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (scalar_is_zero(a(i, k)))
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
        }
    return out;
}

template <typename Scalar>
bool is_zero_vector(const DenseVector<Scalar>& v)
{
    for (Eigen::Index j = 0; j < v.size(); ++j)
        if (!scalar_is_zero(v(j)))
            return false;
    return true;
}

template <typename Scalar>
bool matrices_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

/// Columns of `m` packed as an echelon of its transpose; handy for testing
/// membership of vectors in a column span.
template <typename Scalar>
Echelon<Scalar> column_space(const DenseMatrix<Scalar>& m)
{
    DenseMatrix<Scalar> t = m.transpose();
    return rref(std::move(t));
}

/**
 * Solve A x = b exactly.  Returns false when b is not in the column space.
 */
template <typename Scalar>
bool solve_exact(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& b,
                 DenseVector<Scalar>& x)
{
    DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    Echelon<Scalar> e = rref(std::move(aug));
    x = DenseVector<Scalar>::Constant(a.cols(), Scalar(0));
    for (Eigen::Index i = 0; i < e.rank; ++i) {
        if (e.pivot_cols[i] == a.cols())
            return false;  // inconsistent row 0 ... 0 | 1
        x(e.pivot_cols[i]) = e.reduced(i, a.cols());
    }
    return true;
}

}  // namespace loopcoh

#endif
