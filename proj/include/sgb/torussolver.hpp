#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgb/f5core.hpp"

namespace sgb {

/// Square system f_1..f_n over the torus lifted to the solver algebra: slot 0
/// holds the standard simplex, slot i the normalized Newton polytope of f_i,
/// and F_i is the degree-e_i lift of f_i.
struct SolverSetup {
    std::vector<LaurentPolynomial> inputs;
    std::vector<IntegerPolytope> newton_polytopes;
    std::unique_ptr<SystemContext> context;

    Index variable_count() const { return context->family().dim(); }
};

/// Builds the solver algebra for a square system. `exponent_forms`, when
/// given, replaces the lexicographic order on exponents.
SolverSetup make_solver_setup(std::vector<LaurentPolynomial> system,
                              const std::optional<IntMatrix>& exponent_forms = std::nullopt);

/// Degree (0,1,...,1) of the standard monomials.
MultiDegree basis_degree(const SystemContext& ctx);

/// The standard monomials at degree (0,1,...,1), in decreasing order.
struct MonomialBasisL {
    std::vector<Monomial> monomials;
    /// Position of x^(0,(0,1,...,1)), when present.
    std::optional<Index> one_index;

    Index size() const { return static_cast<Index>(monomials.size()); }
};

MonomialBasisL monomial_basis_L(SystemContext& ctx);

/// M(F_0) at degree (1,...,1) split into blocks. The second column block holds
/// the monomials L_j x^(0,e_0), the second row block the products L_i F_0;
/// inside each block the global descending order is kept.
struct BlockedMacaulay {
    RationalMatrix m11, m12, m21, m22;
    std::vector<Monomial> first_columns;
    std::vector<Monomial> second_columns;

    Index size() const { return m11.rows() + m21.rows(); }
    RationalMatrix assembled() const;
};

/// Throws AssumptionViolation when the matrix is not square.
BlockedMacaulay build_M(SystemContext& ctx, const MonomialBasisL& basis, const HomogeneousPolynomial& f0);

/// The degree-e_0 monomial x^(e_i, e_0) whose image is the variable x_i.
Monomial variable_monomial(const SystemContext& ctx, Index variable);

/// Row i holds the coordinates of χ(L_i)·χ(F_0) in the basis χ(L).
struct MultiplicationMap {
    std::string label;
    RationalMatrix matrix;
};

/// Schur complement of M(F_0). Throws AssumptionViolation when M_11 is singular.
MultiplicationMap multiplication_matrix(SystemContext& ctx, const MonomialBasisL& basis,
                                        const HomogeneousPolynomial& f0, std::string label = {});

/// Maps of x_1..x_n sharing one factorization of M_11.
std::vector<MultiplicationMap> multiplication_maps(SystemContext& ctx, const MonomialBasisL& basis,
                                                   std::span<const std::string> labels = {});

bool pairwise_commute(std::span<const MultiplicationMap> maps);

/// Coordinate vector of f·1 in the quotient, evaluating f on the maps.
/// Negative exponents use exact inverses.
RationalVector apply_to_one(const LaurentPolynomial& f, std::span<const MultiplicationMap> maps, Index one_index);

/// Orders on K[x] for the change of ordering, with x_1 > x_2 > ... > x_n.
enum class TargetOrder { Lex, GrLex, GrevLex };

TargetOrder parse_target_order(std::string_view name);
std::string to_string(TargetOrder order);
std::strong_ordering compare(TargetOrder order, const LatticePoint& a, const LatticePoint& b);

/// Gröbner basis of the ideal whose quotient the maps describe, for the
/// target order. An empty basis means the ideal is the whole ring.
GroebnerBasis fglm(std::span<const MultiplicationMap> maps, Index one_index, TargetOrder target);

struct SolveResult {
    GroebnerBasis basis;
    TargetOrder target = TargetOrder::Lex;
    MonomialBasisL standard_monomials;
    std::vector<MultiplicationMap> maps;
    Integer mixed_volume = 0;
    Index matrix_size = 0;
    std::vector<std::string> warnings;
    Stats stats;
};

/// Gröbner basis of <f_1..f_n> : <x_1...x_n>^∞ in K[x].
SolveResult zero_dim_gb(std::vector<LaurentPolynomial> system, TargetOrder target,
                        const std::optional<IntMatrix>& exponent_forms = std::nullopt,
                        std::span<const std::string> labels = {});

} // namespace sgb
