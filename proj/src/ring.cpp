#include "sgb/ring.hpp"

#include <algorithm>

namespace sgb {

LaurentPolynomial::LaurentPolynomial(Index dim, Map coeffs) : dim_(dim) {
    for (auto& [alpha, c] : coeffs) {
        if (alpha.size() != dim) throw DimensionError("exponent of wrong length in polynomial");
        if (!c.is_zero()) coeffs_.emplace(alpha, std::move(c));
    }
}

LaurentPolynomial LaurentPolynomial::monomial(const LatticePoint& alpha, Rational coeff) {
    LaurentPolynomial p(alpha.size());
    p.add_term(alpha, coeff);
    return p;
}

Rational LaurentPolynomial::coefficient(const LatticePoint& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<LatticePoint> LaurentPolynomial::support() const {
    std::vector<LatticePoint> out;
    out.reserve(coeffs_.size());
    for (const auto& [alpha, c] : coeffs_) out.push_back(alpha);
    return out;
}

void LaurentPolynomial::add_term(const LatticePoint& alpha, const Rational& c) {
    if (alpha.size() != dim_) throw DimensionError("exponent of wrong length in polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(alpha, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

LatticePoint LaurentPolynomial::leading_exponent(const MonomialOrder& order) const {
    if (coeffs_.empty()) throw InvalidArgument("leading monomial of the zero polynomial");
    const LatticePoint* best = &coeffs_.begin()->first;
    for (const auto& [alpha, c] : coeffs_)
        if (order.compare_exponents(alpha, *best) > 0) best = &alpha;
    return *best;
}

LaurentPolynomial LaurentPolynomial::shifted(const LatticePoint& alpha) const {
    LaurentPolynomial out(dim_);
    for (const auto& [beta, c] : coeffs_) out.coeffs_.emplace(beta + alpha, c);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [alpha, c] : other.coeffs_) add_term(alpha, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [alpha, c] : other.coeffs_) add_term(alpha, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [alpha, v] : coeffs_) v *= c;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out(a.dim_);
    for (const auto& [x, c] : a.coeffs_)
        for (const auto& [y, e] : b.coeffs_) out.add_term(x + y, c * e);
    return out;
}

HomogeneousPolynomial::HomogeneousPolynomial(MultiDegree degree, std::vector<Term> terms, OrderPtr order)
    : degree_(std::move(degree)), order_(std::move(order)) {
    if (!order_) throw InvalidArgument("homogeneous polynomial needs a monomial order");
    for (const auto& t : terms)
        if (t.monomial.degree.size() != degree_.size() || t.monomial.degree != degree_)
            throw DimensionError("term " + to_string(t.monomial) + " does not have degree " +
                                 to_string(degree_));
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order_->compare_exponents(a.monomial.alpha, b.monomial.alpha) > 0;
    });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().monomial.alpha == t.monomial.alpha) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

const Monomial& HomogeneousPolynomial::leading_monomial() const {
    if (terms_.empty()) throw InvalidArgument("leading monomial of the zero polynomial");
    return terms_.front().monomial;
}

const Rational& HomogeneousPolynomial::leading_coefficient() const {
    if (terms_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return terms_.front().coeff;
}

std::vector<Monomial> HomogeneousPolynomial::support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.monomial);
    return out;
}

HomogeneousPolynomial operator+(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.degree_ != b.degree_) throw DimensionError("adding polynomials of different degrees");
    std::vector<Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return HomogeneousPolynomial(a.degree_, std::move(terms), a.order_ ? a.order_ : b.order_);
}

HomogeneousPolynomial operator*(const Rational& c, const HomogeneousPolynomial& f) {
    std::vector<Term> terms = f.terms_;
    for (auto& t : terms) t.coeff *= c;
    return HomogeneousPolynomial(f.degree_, std::move(terms), f.order_);
}

bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.degree_.size() != b.degree_.size() || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Monomial leading_monomial(const HomogeneousPolynomial& f, const MonomialOrder& order) {
    if (f.order() && *f.order() == order) return f.leading_monomial();
    const auto support = f.support();
    return leading_monomial(std::span<const Monomial>(support), order);
}

bool is_valid_monomial(const Monomial& m, const PolytopeFamily& family) {
    return point_in_weighted_sum(m.alpha, family, m.degree);
}

HomogeneousPolynomial homogenize(const LaurentPolynomial& f, const MultiDegree& d,
                                 const PolytopeFamily& family, HomogeneousPolynomial::OrderPtr order) {
    if (f.dim() != family.dim())
        throw DimensionError("polynomial in " + std::to_string(f.dim()) + " variables, family in dimension " +
                             std::to_string(family.dim()));
    const LatticePoint shift = family.shift_for(d);
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& [alpha, c] : f.terms()) {
        Monomial m{alpha - shift, d};
        if (!is_valid_monomial(m, family))
            throw DimensionError("exponent " + to_string(alpha) + " lies outside the polytope of degree " +
                                 to_string(d));
        terms.push_back({std::move(m), c});
    }
    return HomogeneousPolynomial(d, std::move(terms), std::move(order));
}

HomogeneousPolynomial homogenize(const LaurentPolynomial& f, Index slot, const PolytopeFamily& family,
                                 HomogeneousPolynomial::OrderPtr order) {
    if (slot < 0 || slot >= family.size()) throw DimensionError("slot out of range");
    return homogenize(f, MultiDegree(unit_vector(family.size(), slot)), family, std::move(order));
}

LaurentPolynomial dehomogenize(const HomogeneousPolynomial& f) {
    LaurentPolynomial out(f.is_zero() ? 0 : f.terms().front().monomial.alpha.size());
    for (const auto& t : f.terms()) out.add_term(t.monomial.alpha, t.coeff);
    return out;
}

HomogeneousPolynomial monomial_multiply(const Monomial& m, const HomogeneousPolynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) terms.push_back({m * t.monomial, t.coeff});
    return HomogeneousPolynomial(f.degree() + m.degree, std::move(terms), f.order());
}

} // namespace sgb
