#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sgb/types.hpp"

namespace sgb {

/// Convex hull of a finite, non-empty set of lattice points. Generators are
/// stored deduplicated and sorted lexicographically, one per column. They
/// need not be vertices; every query below is hull-based.
class IntegerPolytope {
public:
    explicit IntegerPolytope(std::span<const LatticePoint> points);
    explicit IntegerPolytope(const IntMatrix& generators_as_columns);

    Index dim() const { return generators_.rows(); }
    Index size() const { return generators_.cols(); }
    const IntMatrix& generators() const { return generators_; }
    LatticePoint generator(Index j) const { return generators_.col(j); }

    LatticePoint lex_min() const { return generators_.col(0); }
    IntVector coordinate_min() const { return generators_.rowwise().minCoeff(); }
    IntVector coordinate_max() const { return generators_.rowwise().maxCoeff(); }

    IntegerPolytope translated(const LatticePoint& shift) const;

    friend bool operator==(const IntegerPolytope& a, const IntegerPolytope& b) {
        return a.generators_.rows() == b.generators_.rows() &&
               a.generators_.cols() == b.generators_.cols() && a.generators_ == b.generators_;
    }

private:
    IntMatrix generators_;
};

IntegerPolytope standard_simplex(Index n);

/// Δ_0, ..., Δ_r with the translations that were subtracted from them.
struct PolytopeFamily {
    std::vector<IntegerPolytope> polytopes;
    std::vector<LatticePoint> translations;

    Index dim() const { return polytopes.empty() ? 0 : polytopes.front().dim(); }
    Index size() const { return static_cast<Index>(polytopes.size()); }
    const IntegerPolytope& operator[](Index i) const { return polytopes[static_cast<std::size_t>(i)]; }

    /// Σ_i d_i β_i: the exponent shift of a degree-d lift.
    LatticePoint shift_for(const MultiDegree& d) const;
    /// All generators of all polytopes; their cone is the cone of Σ Δ_i.
    IntMatrix cone_generators() const;
};

IntegerPolytope newton_polytope(std::span<const LatticePoint> support);

/// Subtracts from each polytope its lexicographically minimal generator so
/// that the origin is a vertex of every member and of their Minkowski sum.
PolytopeFamily normalize_translations(std::vector<IntegerPolytope> polytopes);

/// Δ_0 = standard n-simplex (untranslated) followed by the normalized inputs.
PolytopeFamily solver_family(std::vector<IntegerPolytope> polytopes);

bool point_in_weighted_sum(const LatticePoint& p, const PolytopeFamily& family, const MultiDegree& d);

/// p ∈ conv(points)?
bool in_convex_hull(const LatticePoint& p, const IntMatrix& points_as_columns);

/// p is a non-negative rational combination of the polytope's generators.
bool cone_membership(const LatticePoint& p, const IntegerPolytope& polytope);
bool cone_membership(const LatticePoint& p, const IntMatrix& generators_as_columns);

using PointOrder = std::function<bool(const LatticePoint&, const LatticePoint&)>;

/// Lattice points of Σ d_i Δ_i. Sorted by `greater` (descending
/// lexicographic order when omitted), so the first point is the largest.
std::vector<LatticePoint> weighted_minkowski_lattice_points(const PolytopeFamily& family,
                                                            const MultiDegree& d,
                                                            const PointOrder& greater = {});

/// P(d) = #((Σ d_i Δ_i) ∩ Z^n).
Index lattice_point_count(const PolytopeFamily& family, const MultiDegree& d);

/// Mixed volume of n polytopes in R^n by the alternating lattice-point count
/// over all Minkowski sub-sums.
Integer mixed_volume(std::span<const IntegerPolytope> polytopes);

} // namespace sgb
