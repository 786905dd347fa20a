#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sgb/macaulay.hpp"

namespace sgb {

/// Shape of one eliminated matrix, recorded for instrumentation.
struct MatrixRecord {
    std::string kind; ///< "reduce", "full" or "solver"
    Index k = 0;      ///< number of generators involved
    MultiDegree degree;
    Index rows = 0;
    Index columns = 0;
    Index rank = 0;
};

struct Stats {
    Index rows_built = 0;
    Index zero_reductions = 0;
    Index eliminations = 0;
    std::vector<MatrixRecord> matrices;
    /// P(d) for every degree whose monomials were enumerated.
    std::map<std::vector<Integer>, Index> lattice_counts;
};

/// Generators F_1..F_k of the ideal together with the ambient family, the
/// order, and memoized per-degree data. Caches are guarded by a mutex; the
/// computations themselves are deterministic.
class SystemContext {
public:
    SystemContext(PolytopeFamily family, HomogeneousPolynomial::OrderPtr order,
                  std::vector<HomogeneousPolynomial> generators);

    SystemContext(const SystemContext&) = delete;
    SystemContext& operator=(const SystemContext&) = delete;

    const PolytopeFamily& family() const { return family_; }
    const HomogeneousPolynomial::OrderPtr& order() const { return order_; }
    const std::vector<HomogeneousPolynomial>& generators() const { return generators_; }
    const HomogeneousPolynomial& generator(Index i) const { return generators_[static_cast<std::size_t>(i)]; }
    Index generator_count() const { return static_cast<Index>(generators_.size()); }
    const IntMatrix& cone_generators() const { return cone_generators_; }

    /// Monomials of degree d in decreasing order; empty when d has a negative entry.
    const std::vector<Monomial>& monomials(const MultiDegree& d);
    Index lattice_count(const MultiDegree& d) { return static_cast<Index>(monomials(d).size()); }

    /// Echelon matrix cached by reduce_macaulay, or null.
    std::shared_ptr<const MacaulayMatrix> cached(Index k, const MultiDegree& d) const;
    void store(Index k, const MultiDegree& d, std::shared_ptr<const MacaulayMatrix> m);
    void clear_cache();

    void record(MatrixRecord rec);
    Stats stats() const;
    void reset_stats();

private:
    using Key = std::pair<Index, std::vector<Integer>>;

    PolytopeFamily family_;
    HomogeneousPolynomial::OrderPtr order_;
    std::vector<HomogeneousPolynomial> generators_;
    IntMatrix cone_generators_;

    mutable std::mutex mutex_;
    std::map<std::vector<Integer>, std::shared_ptr<const std::vector<Monomial>>> monomials_;
    std::map<Key, std::shared_ptr<const MacaulayMatrix>> echelon_cache_;
    Stats stats_;
};

/// Gröbner basis of an ideal of K[S_Δ] (or of K[x] after FGLM). Elements are
/// monic and listed by decreasing leading monomial.
struct GroebnerBasis {
    std::vector<LaurentPolynomial> elements;
    std::vector<LatticePoint> leading_exponents;
};

/// All products x^(α, d - d_i) F_i for i < k (0-based generators 0..k-1);
/// columns are every degree-d monomial.
MacaulayMatrix macaulay_full(SystemContext& ctx, Index k, const MultiDegree& d);

/// Echelon form of the degree-d piece of <F_1..F_k>, built recursively with
/// the Koszul F5 filter and memoized on (k, d).
std::shared_ptr<const MacaulayMatrix> reduce_macaulay(SystemContext& ctx, Index k, const MultiDegree& d);

/// x^a divides x^b in K[S_Δ].
bool divides(const LatticePoint& a, const LatticePoint& b, const IntMatrix& cone_generators);

/// Full reduction of f by the leading terms of `basis` (elements monic).
LaurentPolynomial normal_form(LaurentPolynomial f, const std::vector<LaurentPolynomial>& basis,
                              const std::vector<LatticePoint>& leading, const MonomialOrder& order,
                              const IntMatrix& cone_generators);

/// Drops elements whose leading monomial is divisible by another's, then
/// inter-reduces tails in ascending leading-monomial order.
GroebnerBasis reduce_basis(std::vector<LaurentPolynomial> elements, const MonomialOrder& order,
                           const IntMatrix& cone_generators);

/// χ(Rows(reduce_macaulay(ctx, k, d))) minimalized and inter-reduced. This is a
/// Gröbner basis of <χ(F_1),...,χ(F_k)> once d is large enough; see
/// gb_stability_check for a heuristic test.
GroebnerBasis compute_gb(SystemContext& ctx, const MultiDegree& d);

/// Smallest t with supp(f) ⊆ t·(Σ Δ_i).
Integer element_degree(const LaurentPolynomial& f, const PolytopeFamily& family);

struct StabilityVerdict {
    bool stable = false;
    GroebnerBasis at_degree;
    GroebnerBasis at_next_degree;
};

/// Compares the reduced leading monomials at d and at d + (1,...,1).
StabilityVerdict gb_stability_check(SystemContext& ctx, const MultiDegree& d);

} // namespace sgb
