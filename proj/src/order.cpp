#include "sgb/order.hpp"

#include <algorithm>
#include <sstream>

#include "sgb/exactla.hpp"

namespace sgb {
namespace {

bool lex_positive(const IntVector& v) {
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i) > 0) return true;
        if (v(i) < 0) return false;
    }
    return false;
}

std::strong_ordering compare_images(const IntMatrix& forms, const IntVector& a, const IntVector& b) {
    for (Index i = 0; i < forms.rows(); ++i) {
        const Integer la = forms.row(i).dot(a);
        const Integer lb = forms.row(i).dot(b);
        if (la != lb) return la <=> lb;
    }
    return std::strong_ordering::equal;
}

void require_full_rank(const IntMatrix& forms, const char* what) {
    if (forms.rows() != forms.cols())
        throw InvalidArgument(std::string(what) + " must be square, got " + std::to_string(forms.rows()) +
                              "x" + std::to_string(forms.cols()));
    if (rank<Rational>(forms.cast<Rational>()) != forms.rows())
        throw InvalidArgument(std::string(what) + " are not linearly independent");
}

} // namespace

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
    os << ')';
    return os.str();
}

std::string to_string(const Monomial& m) { return "x^" + to_string(m.alpha) + "e" + to_string(m.degree); }

MonomialOrder::MonomialOrder(IntMatrix degree_forms, IntMatrix exponent_forms)
    : degree_forms_(std::move(degree_forms)), exponent_forms_(std::move(exponent_forms)) {
    require_full_rank(degree_forms_, "degree forms");
    require_full_rank(exponent_forms_, "exponent forms");
    for (Index i = 0; i < degree_forms_.cols(); ++i)
        if (!lex_positive(degree_forms_.col(i)))
            throw InvalidArgument("degree forms must be positive on every unit degree");
}

std::strong_ordering MonomialOrder::compare_degrees(const MultiDegree& a, const MultiDegree& b) const {
    return compare_images(degree_forms_, a, b);
}

std::strong_ordering MonomialOrder::compare_exponents(const LatticePoint& a, const LatticePoint& b) const {
    return compare_images(exponent_forms_, a, b);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (auto c = compare_degrees(a.degree, b.degree); c != 0) return c;
    return compare_exponents(a.alpha, b.alpha);
}

void MonomialOrder::check_against(const PolytopeFamily& family) const {
    if (exponent_forms_.cols() != family.dim())
        throw InvalidArgument("order has " + std::to_string(exponent_forms_.cols()) +
                              " exponent coordinates, family lives in dimension " +
                              std::to_string(family.dim()));
    if (degree_forms_.cols() != family.size())
        throw InvalidArgument("order grades " + std::to_string(degree_forms_.cols()) +
                              " degree components, family has " + std::to_string(family.size()));
    const IntMatrix g = family.cone_generators();
    for (Index j = 0; j < g.cols(); ++j) {
        if ((g.col(j).array() == 0).all()) continue;
        if (!lex_positive(exponent_forms_ * g.col(j)))
            throw InvalidArgument("exponent forms are not positive on cone generator " +
                                  to_string(IntVector(g.col(j))));
    }
}

MonomialOrder default_order(const PolytopeFamily& family) {
    return weight_order(family, IntMatrix::Identity(family.dim(), family.dim()));
}

MonomialOrder weight_order(const PolytopeFamily& family, IntMatrix exponent_forms) {
    const Index r = family.size();
    IntMatrix degree_forms(r, r);
    degree_forms.row(0).setOnes();
    if (r > 1) degree_forms.bottomRows(r - 1) = IntMatrix::Identity(r, r).topRows(r - 1);
    MonomialOrder order(std::move(degree_forms), std::move(exponent_forms));
    order.check_against(family);
    return order;
}

Monomial leading_monomial(std::span<const Monomial> support, const MonomialOrder& order) {
    if (support.empty()) throw InvalidArgument("leading monomial of the zero polynomial");
    const Monomial* best = &support.front();
    for (const auto& m : support.subspan(1))
        if (order.greater(m, *best)) best = &m;
    return *best;
}

std::vector<Monomial> sort_monomials_desc(std::vector<Monomial> monomials, const MonomialOrder& order) {
    std::stable_sort(monomials.begin(), monomials.end(),
                     [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    return monomials;
}

} // namespace sgb
