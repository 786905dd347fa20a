#include "sgb/polytope.hpp"

#include <algorithm>
#include <set>

#include "sgb/lp.hpp"

namespace sgb {
namespace {

IntMatrix sorted_unique_columns(std::vector<LatticePoint> points) {
    if (points.empty()) throw DimensionError("empty polynomial");
    const Index n = points.front().size();
    for (const auto& p : points)
        if (p.size() != n) throw DimensionError("lattice points of mixed dimension");
    std::sort(points.begin(), points.end(), LexLess{});
    points.erase(std::unique(points.begin(), points.end(),
                             [](const LatticePoint& a, const LatticePoint& b) { return a == b; }),
                 points.end());
    IntMatrix g(n, static_cast<Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) g.col(static_cast<Index>(j)) = points[j];
    return g;
}

std::vector<LatticePoint> columns_of(const IntMatrix& m) {
    std::vector<LatticePoint> out;
    out.reserve(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
    return out;
}

void check_degree(const PolytopeFamily& family, const MultiDegree& d) {
    if (d.size() != family.size())
        throw DimensionError("multidegree has " + std::to_string(d.size()) + " components, family has " +
                             std::to_string(family.size()) + " polytopes");
    if (!is_nonnegative(d)) throw DimensionError("multidegree must be non-negative");
}

} // namespace

IntegerPolytope::IntegerPolytope(std::span<const LatticePoint> points)
    : generators_(sorted_unique_columns({points.begin(), points.end()})) {}

IntegerPolytope::IntegerPolytope(const IntMatrix& generators_as_columns)
    : generators_(sorted_unique_columns(columns_of(generators_as_columns))) {}

IntegerPolytope IntegerPolytope::translated(const LatticePoint& shift) const {
    if (shift.size() != dim()) throw DimensionError("translation has wrong dimension");
    IntMatrix g = generators_.colwise() - shift;
    return IntegerPolytope(g);
}

IntegerPolytope standard_simplex(Index n) {
    IntMatrix g = IntMatrix::Zero(n, n + 1);
    for (Index i = 0; i < n; ++i) g(i, i + 1) = 1;
    return IntegerPolytope(g);
}

LatticePoint PolytopeFamily::shift_for(const MultiDegree& d) const {
    LatticePoint s = LatticePoint::Zero(dim());
    for (Index i = 0; i < size(); ++i) s += d(i) * translations[static_cast<std::size_t>(i)];
    return s;
}

IntMatrix PolytopeFamily::cone_generators() const {
    Index total = 0;
    for (const auto& p : polytopes) total += p.size();
    IntMatrix g(dim(), total);
    Index c = 0;
    for (const auto& p : polytopes) {
        g.middleCols(c, p.size()) = p.generators();
        c += p.size();
    }
    return g;
}

IntegerPolytope newton_polytope(std::span<const LatticePoint> support) {
    if (support.empty()) throw DimensionError("empty polynomial");
    return IntegerPolytope(support);
}

PolytopeFamily normalize_translations(std::vector<IntegerPolytope> polytopes) {
    PolytopeFamily family;
    if (polytopes.empty()) return family;
    const Index n = polytopes.front().dim();
    for (auto& p : polytopes) {
        if (p.dim() != n) throw DimensionError("polytopes of different dimensions");
        LatticePoint shift = p.lex_min();
        family.polytopes.push_back(p.translated(shift));
        family.translations.push_back(std::move(shift));
    }
    return family;
}

PolytopeFamily solver_family(std::vector<IntegerPolytope> polytopes) {
    if (polytopes.empty()) throw DimensionError("solver family needs at least one polytope");
    const Index n = polytopes.front().dim();
    PolytopeFamily rest = normalize_translations(std::move(polytopes));
    PolytopeFamily family;
    family.polytopes.push_back(standard_simplex(n));
    family.translations.push_back(LatticePoint::Zero(n));
    family.polytopes.insert(family.polytopes.end(), rest.polytopes.begin(), rest.polytopes.end());
    family.translations.insert(family.translations.end(), rest.translations.begin(),
                               rest.translations.end());
    return family;
}

bool point_in_weighted_sum(const LatticePoint& p, const PolytopeFamily& family, const MultiDegree& d) {
    check_degree(family, d);
    if (p.size() != family.dim())
        throw DimensionError("point has dimension " + std::to_string(p.size()) + ", family has " +
                             std::to_string(family.dim()));

    // Variables μ_ij >= 0 with Σ_ij μ_ij v_ij = p and Σ_j μ_ij = d_i for
    // every active polytope.
    Index vars = 0, active = 0;
    for (Index i = 0; i < family.size(); ++i) {
        if (d(i) == 0) continue;
        vars += family[i].size();
        ++active;
    }
    if (active == 0) return (p.array() == 0).all();

    const Index n = family.dim();
    IntMatrix a = IntMatrix::Zero(n + active, vars);
    IntVector b(n + active);
    b.head(n) = p;
    Index col = 0, row = n;
    for (Index i = 0; i < family.size(); ++i) {
        if (d(i) == 0) continue;
        const auto& g = family[i].generators();
        a.block(0, col, n, g.cols()) = g;
        a.block(row, col, 1, g.cols()).setOnes();
        b(row) = d(i);
        col += g.cols();
        ++row;
    }
    return nonnegative_solution_exists(a, b);
}

bool in_convex_hull(const LatticePoint& p, const IntMatrix& points) {
    if (p.size() != points.rows()) throw DimensionError("point and hull dimensions differ");
    if (points.cols() == 0) return false;
    IntMatrix a(points.rows() + 1, points.cols());
    a.topRows(points.rows()) = points;
    a.bottomRows(1).setOnes();
    IntVector b(points.rows() + 1);
    b.head(points.rows()) = p;
    b(points.rows()) = 1;
    return nonnegative_solution_exists(a, b);
}

bool cone_membership(const LatticePoint& p, const IntMatrix& generators) {
    if (p.size() != generators.rows())
        throw DimensionError("point has dimension " + std::to_string(p.size()) + ", cone has " +
                             std::to_string(generators.rows()));
    if ((p.array() == 0).all()) return true;
    return nonnegative_solution_exists(generators, p);
}

bool cone_membership(const LatticePoint& p, const IntegerPolytope& polytope) {
    return cone_membership(p, polytope.generators());
}

std::vector<LatticePoint> weighted_minkowski_lattice_points(const PolytopeFamily& family,
                                                            const MultiDegree& d,
                                                            const PointOrder& greater) {
    check_degree(family, d);
    const Index n = family.dim();
    IntVector lo = IntVector::Zero(n), hi = IntVector::Zero(n);
    for (Index i = 0; i < family.size(); ++i) {
        lo += d(i) * family[i].coordinate_min();
        hi += d(i) * family[i].coordinate_max();
    }

    std::vector<LatticePoint> out;
    LatticePoint p = lo;
    for (;;) {
        if (point_in_weighted_sum(p, family, d)) out.push_back(p);
        Index k = n - 1;
        while (k >= 0 && p(k) == hi(k)) {
            p(k) = lo(k);
            --k;
        }
        if (k < 0) break;
        ++p(k);
    }
    if (greater)
        std::sort(out.begin(), out.end(), greater);
    else
        std::reverse(out.begin(), out.end()); // enumeration above is lex ascending
    return out;
}

Index lattice_point_count(const PolytopeFamily& family, const MultiDegree& d) {
    return static_cast<Index>(weighted_minkowski_lattice_points(family, d).size());
}

Integer mixed_volume(std::span<const IntegerPolytope> polytopes) {
    const auto n = static_cast<Index>(polytopes.size());
    if (n == 0) throw DimensionError("mixed volume of zero polytopes");
    for (const auto& p : polytopes)
        if (p.dim() != n)
            throw DimensionError("mixed volume needs exactly n polytopes in R^n, got " +
                                 std::to_string(n) + " polytopes in dimension " +
                                 std::to_string(p.dim()));

    PolytopeFamily family;
    family.polytopes.assign(polytopes.begin(), polytopes.end());
    family.translations.assign(polytopes.size(), LatticePoint::Zero(n));

    // (-1)^n from the empty sub-sum, then Σ_{I≠∅} (-1)^{n-|I|} #(Δ_I ∩ Z^n).
    Integer mv = (n % 2 == 0) ? 1 : -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        MultiDegree d = MultiDegree::Zero(n);
        Index k = 0;
        for (Index i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                d(i) = 1;
                ++k;
            }
        const Integer count = lattice_point_count(family, d);
        mv += ((n - k) % 2 == 0) ? count : -count;
    }
    return mv;
}

} // namespace sgb
