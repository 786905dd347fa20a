#include "sgb/macaulay.hpp"

namespace sgb {

MacaulayMatrix::MacaulayMatrix(MultiDegree degree, std::vector<Monomial> columns,
                               HomogeneousPolynomial::OrderPtr order)
    : degree_(std::move(degree)), columns_(std::move(columns)), order_(std::move(order)) {
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].degree != degree_)
            throw DimensionError("column " + to_string(columns_[j]) + " has the wrong degree");
        column_index_.emplace(columns_[j].alpha, static_cast<Index>(j));
    }
    matrix_.resize(0, static_cast<Index>(columns_.size()));
}

Index MacaulayMatrix::column_of(const LatticePoint& alpha) const {
    auto it = column_index_.find(alpha);
    if (it == column_index_.end())
        throw DimensionError("monomial " + to_string(alpha) + " is not a column of the degree-" +
                             to_string(degree_) + " Macaulay matrix");
    return it->second;
}

void MacaulayMatrix::add_row(const HomogeneousPolynomial& f, RowLabel label) {
    if (f.degree() != degree_) throw DimensionError("row polynomial has the wrong degree");
    const Index r = matrix_.rows();
    matrix_.conservativeResize(r + 1, Eigen::NoChange);
    matrix_.row(r).setZero();
    for (const auto& t : f.terms()) matrix_(r, column_of(t.monomial.alpha)) = t.coeff;
    labels_.push_back(std::move(label));
    echelon_ = false;
}

void MacaulayMatrix::add_rows(const MacaulayMatrix& other) {
    if (other.degree_ != degree_ || other.columns_.size() != columns_.size())
        throw DimensionError("stacking Macaulay matrices of different degrees");
    const Index r = matrix_.rows();
    matrix_.conservativeResize(r + other.row_count(), Eigen::NoChange);
    matrix_.bottomRows(other.row_count()) = other.matrix_;
    labels_.insert(labels_.end(), other.labels_.begin(), other.labels_.end());
    echelon_ = false;
}

HomogeneousPolynomial MacaulayMatrix::row_polynomial(Index i) const {
    std::vector<Term> terms;
    for (Index j = 0; j < matrix_.cols(); ++j)
        if (!matrix_(i, j).is_zero()) terms.push_back({columns_[static_cast<std::size_t>(j)], matrix_(i, j)});
    return HomogeneousPolynomial(degree_, std::move(terms), order_);
}

std::vector<HomogeneousPolynomial> MacaulayMatrix::rows() const {
    std::vector<HomogeneousPolynomial> out;
    for (Index i = 0; i < matrix_.rows(); ++i) {
        auto f = row_polynomial(i);
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

std::vector<Monomial> MacaulayMatrix::leading_monomials() const {
    std::vector<Monomial> out;
    for (Index i = 0; i < matrix_.rows(); ++i)
        for (Index j = 0; j < matrix_.cols(); ++j)
            if (!matrix_(i, j).is_zero()) {
                out.push_back(columns_[static_cast<std::size_t>(j)]);
                break;
            }
    return out;
}

MacaulayMatrix row_echelon(const MacaulayMatrix& m) {
    EchelonForm<Rational> e = row_echelon<Rational>(m.matrix_);
    MacaulayMatrix out;
    out.degree_ = m.degree_;
    out.columns_ = m.columns_;
    out.column_index_ = m.column_index_;
    out.order_ = m.order_;
    out.matrix_ = std::move(e.matrix);
    out.pivots_ = std::move(e.pivots);
    for (Index src : e.source_rows) {
        RowLabel label = m.labels_[static_cast<std::size_t>(src)];
        label.kind = RowLabel::Kind::Reduced;
        out.labels_.push_back(std::move(label));
    }
    out.echelon_ = true;
    return out;
}

Index rank(const MacaulayMatrix& m) { return m.is_echelon() ? m.row_count() : rank<Rational>(m.matrix()); }

} // namespace sgb
