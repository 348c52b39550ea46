#ifndef L1BAR_LINALG_HPP
#define L1BAR_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "l1bar/rational.hpp"

namespace l1bar {

/**
 * Exact dense linear algebra over the integers and rationals. Everything here
 * is templated on the scalar so the same kernels serve `Integer` boundary
 * matrices and `Rational` coordinate systems.
 */

class SingularMatrixError : public std::runtime_error
{
    public:
        explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Bareiss fraction-free elimination in place. Returns the rank; `pivots`
/// (optional) receives the pivot column of each eliminated row. Integer
/// inputs stay integral throughout (all divisions are exact).
template <class Scalar>
Eigen::Index bareiss_eliminate(MatrixX<Scalar>& m, std::vector<Eigen::Index>* pivots = nullptr)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    Scalar prev = 1;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col)
    {
        Eigen::Index p = rank;
        while (p < rows && m(p, col) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank)
            m.row(p).swap(m.row(rank));
        const Scalar pivot = m(rank, col);
        for (Eigen::Index i = rank + 1; i < rows; ++i)
        {
            const Scalar lead = m(i, col);
            for (Eigen::Index j = col + 1; j < cols; ++j)
            {
                Scalar v = pivot * m(i, j) - lead * m(rank, j);
                m(i, j) = v / prev;
            }
            m(i, col) = 0;
        }
        if (pivots)
            pivots->push_back(col);
        prev = pivot;
        ++rank;
    }
    return rank;
}

/// Rank of an integer matrix by fraction-free elimination.
inline Eigen::Index rank_fraction_free(MatrixX<Integer> m)
{
    if (m.rows() > m.cols())
        m.transposeInPlace();
    return bareiss_eliminate(m);
}

/// Clears denominators row by row; the row space (hence rank) is unchanged.
inline MatrixX<Integer> clear_denominators(const MatrixXr& m)
{
    MatrixX<Integer> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        Integer l = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(m(i, j))));
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = Integer(boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j))));
    }
    return out;
}

inline Eigen::Index rank_exact(const MatrixXr& m)
{
    return rank_fraction_free(clear_denominators(m));
}

/// True when `b` lies in the column span of `a`.
inline bool in_column_span(const MatrixXr& a, const VectorXr& b)
{
    MatrixXr aug(a.rows(), a.cols() + 1);
    aug << a, b;
    return rank_exact(aug) == rank_exact(a);
}

/// Indices of a maximal linearly independent set of columns (leftmost first).
inline std::vector<Eigen::Index> independent_columns(const MatrixXr& a)
{
    MatrixX<Integer> m = clear_denominators(a);
    std::vector<Eigen::Index> pivots;
    bareiss_eliminate(m, &pivots);
    return pivots;
}

/// Gauss-Jordan solve of a square nonsingular system over the rationals.
template <class Scalar>
VectorX<Scalar> solve_square(MatrixX<Scalar> a, VectorX<Scalar> b)
{
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_square: dimension mismatch");
    for (Eigen::Index col = 0; col < n; ++col)
    {
        Eigen::Index p = col;
        while (p < n && a(p, col) == 0)
            ++p;
        if (p == n)
            throw SingularMatrixError("solve_square: singular matrix");
        if (p != col)
        {
            a.row(p).swap(a.row(col));
            std::swap(b(p), b(col));
        }
        const Scalar pivot = a(col, col);
        a.row(col) /= pivot;
        b(col) /= pivot;
        for (Eigen::Index i = 0; i < n; ++i)
        {
            if (i == col || a(i, col) == 0)
                continue;
            const Scalar f = a(i, col);
            a.row(i) -= f * a.row(col);
            b(i) -= f * b(col);
        }
    }
    return b;
}

template <class Scalar>
MatrixX<Scalar> inverse_exact(const MatrixX<Scalar>& a)
{
    const Eigen::Index n = a.rows();
    MatrixX<Scalar> inv(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
    {
        VectorX<Scalar> e = VectorX<Scalar>::Zero(n);
        e(j) = 1;
        inv.col(j) = solve_square<Scalar>(a, e);
    }
    return inv;
}

}   // namespace l1bar

#endif
