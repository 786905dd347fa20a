#pragma once

#include <vector>

#include "sgb/exactla.hpp"
#include "sgb/ring.hpp"

namespace sgb {

/// Provenance of a Macaulay row.
struct RowLabel {
    enum class Kind { Product, Reduced };
    Kind kind = Kind::Product;
    /// Index of the generator F_i the row came from.
    Index poly = 0;
    /// Exponent α of the multiplier x^(α, d - d_i).
    LatticePoint multiplier;
};

/// Coefficient matrix of homogeneous polynomials of one degree. Columns are
/// the monomials of that degree in decreasing order, so the first non-zero
/// entry of a row sits in the column of the row's leading monomial.
class MacaulayMatrix {
public:
    MacaulayMatrix() = default;
    MacaulayMatrix(MultiDegree degree, std::vector<Monomial> columns, HomogeneousPolynomial::OrderPtr order);

    /// Appends the coefficient vector of f; f's support must lie in the columns.
    void add_row(const HomogeneousPolynomial& f, RowLabel label);
    /// Appends every row of an echelon matrix over the same columns.
    void add_rows(const MacaulayMatrix& other);

    const MultiDegree& degree() const { return degree_; }
    const std::vector<Monomial>& columns() const { return columns_; }
    const std::vector<RowLabel>& labels() const { return labels_; }
    const RationalMatrix& matrix() const { return matrix_; }
    bool is_echelon() const { return echelon_; }
    /// Pivot columns; only meaningful for echelon matrices.
    const std::vector<Index>& pivots() const { return pivots_; }
    const HomogeneousPolynomial::OrderPtr& order() const { return order_; }

    Index row_count() const { return matrix_.rows(); }
    Index column_count() const { return matrix_.cols(); }
    Index column_of(const LatticePoint& alpha) const;

    HomogeneousPolynomial row_polynomial(Index i) const;
    std::vector<HomogeneousPolynomial> rows() const;
    /// Column monomial of the first non-zero entry of every non-zero row.
    std::vector<Monomial> leading_monomials() const;

    friend MacaulayMatrix row_echelon(const MacaulayMatrix& m);

private:
    MultiDegree degree_;
    std::vector<Monomial> columns_;
    std::map<LatticePoint, Index, LexLess> column_index_;
    std::vector<RowLabel> labels_;
    RationalMatrix matrix_;
    std::vector<Index> pivots_;
    bool echelon_ = false;
    HomogeneousPolynomial::OrderPtr order_;
};

/// Reduced row echelon form; zero rows dropped, row space preserved. Each
/// surviving row keeps the label of the input row that supplied its pivot.
MacaulayMatrix row_echelon(const MacaulayMatrix& m);

Index rank(const MacaulayMatrix& m);

} // namespace sgb
