#include "sgb/lp.hpp"

#include <limits>

namespace sgb {
namespace {

constexpr Index kNone = -1;

class Tableau {
public:
    Tableau(RationalMatrix body, std::vector<Index> basis, Index first_artificial)
        : t_(std::move(body)), basis_(std::move(basis)), first_artificial_(first_artificial) {}

    Index rows() const { return t_.rows(); }
    Index rhs_col() const { return t_.cols() - 1; }

    /// Reduced costs of `cost` (length = #variables) against the current basis.
    void price(const RationalVector& cost) {
        cost_row_ = RationalVector::Zero(t_.cols());
        cost_row_.head(cost.size()) = cost;
        for (Index i = 0; i < rows(); ++i) {
            const Rational& cb = cost(basis_[static_cast<std::size_t>(i)]);
            if (cb.is_zero()) continue;
            for (Index j = 0; j < t_.cols(); ++j)
                if (!t_(i, j).is_zero()) cost_row_(j) -= cb * t_(i, j);
        }
    }

    /// Runs Bland's rule to optimality. Returns false when unbounded.
    bool optimize(bool allow_artificial) {
        const Index limit = allow_artificial ? rhs_col() : first_artificial_;
        for (;;) {
            Index enter = kNone;
            for (Index j = 0; j < limit; ++j) {
                if (cost_row_(j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return true;

            Index leave = kNone;
            Rational best;
            for (Index i = 0; i < rows(); ++i) {
                if (t_(i, enter) <= 0) continue;
                Rational ratio = t_(i, rhs_col()) / t_(i, enter);
                if (leave == kNone || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(i)] <
                                          basis_[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }

    void pivot(Index p, Index q) {
        const Rational inv = Rational(1) / t_(p, q);
        for (Index j = 0; j < t_.cols(); ++j)
            if (!t_(p, j).is_zero()) t_(p, j) *= inv;
        auto eliminate = [&](auto&& row) {
            if (row(q).is_zero()) return;
            const Rational factor = row(q);
            for (Index j = 0; j < t_.cols(); ++j)
                if (!t_(p, j).is_zero()) row(j) -= factor * t_(p, j);
        };
        for (Index i = 0; i < rows(); ++i)
            if (i != p) eliminate(t_.row(i));
        eliminate(cost_row_);
        basis_[static_cast<std::size_t>(p)] = q;
    }

    /// Pivots zero-valued artificial variables out of the basis where possible.
    void expel_artificials() {
        for (Index i = 0; i < rows(); ++i) {
            if (basis_[static_cast<std::size_t>(i)] < first_artificial_) continue;
            for (Index j = 0; j < first_artificial_; ++j) {
                if (!t_(i, j).is_zero()) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    Rational objective() const { return -cost_row_(rhs_col()); }

    RationalVector solution(Index variables) const {
        RationalVector x = RationalVector::Zero(variables);
        for (Index i = 0; i < rows(); ++i) {
            const Index b = basis_[static_cast<std::size_t>(i)];
            if (b < variables) x(b) = t_(i, rhs_col());
        }
        return x;
    }

private:
    RationalMatrix t_;
    RationalVector cost_row_;
    std::vector<Index> basis_;
    Index first_artificial_;
};

} // namespace

LPResult lp_feasible(const LPProblem& problem) {
    const Index m = problem.constraints.rows();
    const Index nv = problem.constraints.cols();
    if (problem.rhs.size() != m || static_cast<Index>(problem.relations.size()) != m)
        throw DimensionError("lp_feasible: " + std::to_string(m) + " constraint rows but " +
                             std::to_string(problem.rhs.size()) + " right-hand sides and " +
                             std::to_string(problem.relations.size()) + " relations");
    if (problem.objective && problem.objective->size() != nv)
        throw DimensionError("lp_feasible: objective length does not match variable count");

    Index slacks = 0;
    for (Relation r : problem.relations)
        if (r != Relation::Equal) ++slacks;

    const Index first_artificial = nv + slacks;
    const Index total = first_artificial + m;
    RationalMatrix body = RationalMatrix::Zero(m, total + 1);
    std::vector<Index> basis(static_cast<std::size_t>(m));

    Index slack = nv;
    for (Index i = 0; i < m; ++i) {
        body.row(i).head(nv) = problem.constraints.row(i);
        switch (problem.relations[static_cast<std::size_t>(i)]) {
        case Relation::LessEqual: body(i, slack++) = 1; break;
        case Relation::GreaterEqual: body(i, slack++) = -1; break;
        case Relation::Equal: break;
        }
        body(i, total) = problem.rhs(i);
        if (problem.rhs(i) < 0) body.row(i) = -body.row(i);
        body(i, first_artificial + i) = 1;
        basis[static_cast<std::size_t>(i)] = first_artificial + i;
    }

    Tableau tableau(std::move(body), std::move(basis), first_artificial);
    RationalVector phase1 = RationalVector::Zero(total);
    phase1.tail(m).setOnes();
    tableau.price(phase1);
    tableau.optimize(true);

    LPResult result;
    if (!tableau.objective().is_zero()) {
        result.status = LPStatus::Infeasible;
        return result;
    }
    tableau.expel_artificials();
    result.status = LPStatus::Feasible;

    if (problem.objective) {
        RationalVector cost = RationalVector::Zero(total);
        cost.head(nv) = *problem.objective;
        tableau.price(cost);
        if (!tableau.optimize(false)) {
            result.status = LPStatus::Unbounded;
            result.witness = tableau.solution(nv);
            return result;
        }
        result.objective_value = tableau.objective();
    }
    result.witness = tableau.solution(nv);
    return result;
}

bool nonnegative_solution_exists(const IntMatrix& a, const IntVector& b) {
    if (a.rows() != b.size())
        throw DimensionError("nonnegative_solution_exists: matrix has " + std::to_string(a.rows()) +
                             " rows, right-hand side has " + std::to_string(b.size()));
    if (a.cols() == 0) return (b.array() == 0).all();
    LPProblem lp;
    lp.constraints = a.cast<Rational>();
    lp.rhs = b.cast<Rational>();
    lp.relations.assign(static_cast<std::size_t>(a.rows()), Relation::Equal);
    return lp_feasible(lp).feasible();
}

} // namespace sgb
