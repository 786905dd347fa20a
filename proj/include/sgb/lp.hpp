#pragma once

#include <optional>
#include <vector>

#include "sgb/types.hpp"

namespace sgb {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// Rows A_i x (relation_i) b_i over non-negative variables x >= 0.
/// With an objective c, lp_feasible also minimizes c.x.
struct LPProblem {
    RationalMatrix constraints;
    RationalVector rhs;
    std::vector<Relation> relations;
    std::optional<RationalVector> objective;

    Index variables() const { return constraints.cols(); }
};

enum class LPStatus { Infeasible, Feasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    /// A vertex of the feasible region (optimal when an objective was given).
    RationalVector witness;
    std::optional<Rational> objective_value;

    bool feasible() const { return status != LPStatus::Infeasible; }
};

/// Two-phase dense simplex with Bland's rule. Exact; never cycles.
LPResult lp_feasible(const LPProblem& problem);

/// Feasibility of { x >= 0 : A x = b } with an integer system.
bool nonnegative_solution_exists(const IntMatrix& a, const IntVector& b);

} // namespace sgb
