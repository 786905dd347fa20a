#pragma once

// Exact dense linear algebra over a field. Every routine is deterministic:
// columns are processed left to right and the pivot is always the first
// remaining row with a non-zero entry, so results never depend on
// magnitudes or scheduling.

#include <utility>
#include <vector>

#include "sgb/types.hpp"

namespace sgb {

namespace detail {

template <typename Scalar>
bool scalar_is_zero(const Scalar& x) {
    if constexpr (requires { x.is_zero(); })
        return x.is_zero();
    else
        return x == Scalar(0);
}

} // namespace detail

template <typename Scalar>
struct EchelonForm {
    /// Reduced row echelon form with zero rows removed.
    DenseMatrix<Scalar> matrix;
    /// pivots[i] is the column of the leading 1 in row i; strictly increasing.
    std::vector<Index> pivots;
    /// source_rows[i] is the input row that was chosen as pivot for row i.
    std::vector<Index> source_rows;

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Scalar>
EchelonForm<Scalar> row_echelon(DenseMatrix<Scalar> m) {
    const Index rows = m.rows();
    const Index cols = m.cols();
    std::vector<Index> order(static_cast<std::size_t>(rows));
    for (Index i = 0; i < rows; ++i) order[static_cast<std::size_t>(i)] = i;

    EchelonForm<Scalar> out;
    Index next = 0;
    for (Index c = 0; c < cols && next < rows; ++c) {
        Index p = next;
        while (p < rows && detail::scalar_is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != next) {
            m.row(p).swap(m.row(next));
            std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(next)]);
        }

        const Scalar inv = Scalar(1) / m(next, c);
        m(next, c) = Scalar(1);
        for (Index j = c + 1; j < cols; ++j)
            if (!detail::scalar_is_zero(m(next, j))) m(next, j) *= inv;

        for (Index i = 0; i < rows; ++i) {
            if (i == next || detail::scalar_is_zero(m(i, c))) continue;
            const Scalar factor = m(i, c);
            m(i, c) = Scalar(0);
            for (Index j = c + 1; j < cols; ++j)
                if (!detail::scalar_is_zero(m(next, j))) m(i, j) -= factor * m(next, j);
        }
        out.pivots.push_back(c);
        out.source_rows.push_back(order[static_cast<std::size_t>(next)]);
        ++next;
    }
    out.matrix = m.topRows(next);
    return out;
}

template <typename Scalar>
Index rank(const DenseMatrix<Scalar>& m) {
    return row_echelon(m).rank();
}

/// Exact X with A X = B. Throws SingularMatrixError carrying the first
/// column of A without a pivot.
template <typename Scalar>
DenseMatrix<Scalar> solve_block(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != a.cols())
        throw DimensionError("solve_block: left-hand side is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected square");
    if (b.rows() != a.rows())
        throw DimensionError("solve_block: right-hand side has " + std::to_string(b.rows()) +
                             " rows, expected " + std::to_string(a.rows()));
    const Index n = a.rows();
    DenseMatrix<Scalar> aug(n, n + b.cols());
    aug << a, b;
    EchelonForm<Scalar> e = row_echelon(std::move(aug));
    for (Index i = 0; i < n; ++i) {
        if (i >= e.rank() || e.pivots[static_cast<std::size_t>(i)] != i)
            throw SingularMatrixError("solve_block: singular matrix (column " + std::to_string(i) +
                                          " is dependent)",
                                      i);
    }
    return e.matrix.rightCols(b.cols());
}

template <typename Scalar>
DenseMatrix<Scalar> inverse(const DenseMatrix<Scalar>& a) {
    return solve_block<Scalar>(a, DenseMatrix<Scalar>::Identity(a.rows(), a.cols()));
}

/// M22 - M21 M11^{-1} M12.
template <typename Scalar>
DenseMatrix<Scalar> schur_complement(const DenseMatrix<Scalar>& m11, const DenseMatrix<Scalar>& m12,
                                     const DenseMatrix<Scalar>& m21, const DenseMatrix<Scalar>& m22) {
    if (m12.rows() != m11.rows() || m21.cols() != m11.cols() || m22.rows() != m21.rows() ||
        m22.cols() != m12.cols())
        throw DimensionError("schur_complement: inconsistent block sizes");
    const DenseMatrix<Scalar> x = solve_block<Scalar>(m11, m12);
    return m22 - m21 * x;
}

} // namespace sgb
