#pragma once

#include <map>
#include <memory>
#include <vector>

#include "sgb/monomial.hpp"
#include "sgb/order.hpp"
#include "sgb/polytope.hpp"

namespace sgb {

/// Element of K[Z^n] (and of its subalgebras K[S_Δ]); no zero coefficients.
class LaurentPolynomial {
public:
    using Map = std::map<LatticePoint, Rational, LexLess>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Index dim) : dim_(dim) {}
    LaurentPolynomial(Index dim, Map coeffs);

    static LaurentPolynomial monomial(const LatticePoint& alpha, Rational coeff = Rational(1));

    Index dim() const { return dim_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    const Map& terms() const { return coeffs_; }
    Rational coefficient(const LatticePoint& alpha) const;
    std::vector<LatticePoint> support() const;

    void add_term(const LatticePoint& alpha, const Rational& c);

    /// Largest exponent under the order on K[S_Δ] induced by `order`.
    LatticePoint leading_exponent(const MonomialOrder& order) const;
    Rational leading_coefficient(const MonomialOrder& order) const {
        return coefficient(leading_exponent(order));
    }

    LaurentPolynomial shifted(const LatticePoint& alpha) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const Rational& c);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.dim_ == b.dim_ && a.coeffs_.size() == b.coeffs_.size() &&
               std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                          [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
    }

private:
    Index dim_ = 0;
    Map coeffs_;
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

/// Homogeneous element of the multigraded algebra. Terms are kept in
/// descending order of the order it was built with, so the leading term is
/// the first one.
class HomogeneousPolynomial {
public:
    using OrderPtr = std::shared_ptr<const MonomialOrder>;

    HomogeneousPolynomial() = default;
    /// Combines repeated monomials and drops zero coefficients. Every term
    /// must have degree `degree`.
    HomogeneousPolynomial(MultiDegree degree, std::vector<Term> terms, OrderPtr order);

    const MultiDegree& degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }
    const OrderPtr& order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    std::vector<Monomial> support() const;

    friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
    friend HomogeneousPolynomial operator*(const Rational& c, const HomogeneousPolynomial& f);

    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

private:
    MultiDegree degree_;
    std::vector<Term> terms_;
    OrderPtr order_;
};

Monomial leading_monomial(const HomogeneousPolynomial& f, const MonomialOrder& order);

/// x^(α,d) is a monomial of the algebra iff α ∈ Σ d_i Δ_i.
bool is_valid_monomial(const Monomial& m, const PolytopeFamily& family);

/// The unique degree-d lift of x^{-shift} f with shift = Σ d_i β_i: exponents
/// move by -shift, coefficients are kept. Throws DimensionError when a
/// shifted exponent falls outside Σ d_i Δ_i.
HomogeneousPolynomial homogenize(const LaurentPolynomial& f, const MultiDegree& d,
                                 const PolytopeFamily& family, HomogeneousPolynomial::OrderPtr order);

/// Lift at degree e_slot.
HomogeneousPolynomial homogenize(const LaurentPolynomial& f, Index slot, const PolytopeFamily& family,
                                 HomogeneousPolynomial::OrderPtr order);

/// χ: x^(α,d) ↦ x^α.
LaurentPolynomial dehomogenize(const HomogeneousPolynomial& f);

HomogeneousPolynomial monomial_multiply(const Monomial& m, const HomogeneousPolynomial& f);

} // namespace sgb
