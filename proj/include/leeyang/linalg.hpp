#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leeyang/types.hpp"

// Exact linear algebra over a field scalar (Rational in practice). Everything
// here is Gauss-Jordan elimination; sizes are tiny so no pivoting strategy
// beyond "first nonzero" is needed.

namespace leeyang {

template <typename Scalar>
struct RowEchelon {
    Matrix<Scalar> reduced;
    std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <typename Scalar>
RowEchelon<Scalar> rref(Matrix<Scalar> m)
{
    RowEchelon<Scalar> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = row;
        while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const Scalar inv = Scalar(1) / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == Scalar(0)) continue;
            const Scalar f = m(r, col);
            m.row(r) -= f * m.row(row);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m)
{
    return static_cast<Eigen::Index>(rref<Scalar>(m).pivots.size());
}

/// Basis of {x : m x = 0}, one vector per column (one per free variable).
template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m)
{
    const auto e = rref<Scalar>(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

    Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        const auto f = free[k];
        const auto col = static_cast<Eigen::Index>(k);
        basis(f, col) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], col) = -e.reduced(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

/**
 * A solution X of a * X = b, or nullopt when the system is inconsistent.
 * When a has dependent columns the free variables are set to zero.
 */
template <typename Scalar>
std::optional<Matrix<Scalar>> solve(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    const auto e = rref<Scalar>(aug);
    for (auto p : e.pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix<Scalar> x = Matrix<Scalar>::Zero(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x.row(e.pivots[r]) = e.reduced.row(static_cast<Eigen::Index>(r)).tail(b.cols());
    return x;
}

// ---------------------------------------------------------------------------
// Integer vectors

/// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive(const RationalVector& v);
IntVector primitive(const Vector<Integer>& v);
/// Same line, first nonzero entry positive.
IntVector canonical_line(const IntVector& v);

RationalVector to_rational(const IntVector& v);
RationalMatrix to_rational(const IntMatrix& m);
std::int64_t checked_int64(const Integer& z);

/// Sorts integer vectors lexicographically decreasing and removes duplicates.
void sort_descending(std::vector<IntVector>& v);

/// Columns of an integer matrix as a list of vectors, and back.
std::vector<IntVector> columns(const IntMatrix& m);
IntMatrix from_rows(const std::vector<IntVector>& rows, Eigen::Index cols);

}  // namespace leeyang
