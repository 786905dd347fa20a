#pragma once

#include <compare>
#include <span>
#include <vector>

#include "sgb/monomial.hpp"
#include "sgb/polytope.hpp"

namespace sgb {

/// Multigraded monomial order: degrees are compared by the rows of
/// `degree_forms` in turn, ties by the rows of `exponent_forms`.
class MonomialOrder {
public:
    /// Throws InvalidArgument unless both form systems have full rank
    /// and send every unit degree to a lexicographically positive vector.
    MonomialOrder(IntMatrix degree_forms, IntMatrix exponent_forms);

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    std::strong_ordering compare_degrees(const MultiDegree& a, const MultiDegree& b) const;
    /// The associated order on the dehomogenized algebra.
    std::strong_ordering compare_exponents(const LatticePoint& a, const LatticePoint& b) const;

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    const IntMatrix& degree_forms() const { return degree_forms_; }
    const IntMatrix& exponent_forms() const { return exponent_forms_; }

    /// Checks that x^0 is the minimum of the ambient semigroup: the image
    /// of every non-zero cone generator is lexicographically positive.
    void check_against(const PolytopeFamily& family) const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.degree_forms_ == b.degree_forms_ && a.exponent_forms_ == b.exponent_forms_;
    }

private:
    IntMatrix degree_forms_;
    IntMatrix exponent_forms_;
};

/// Total degree, then lex on d; plain lex on exponents.
MonomialOrder default_order(const PolytopeFamily& family);

/// Default degree part with a user-supplied exponent weight matrix (rows are forms).
MonomialOrder weight_order(const PolytopeFamily& family, IntMatrix exponent_forms);

Monomial leading_monomial(std::span<const Monomial> support, const MonomialOrder& order);

std::vector<Monomial> sort_monomials_desc(std::vector<Monomial> monomials, const MonomialOrder& order);

} // namespace sgb
