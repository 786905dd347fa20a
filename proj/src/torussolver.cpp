#include "sgb/torussolver.hpp"

#include <algorithm>
#include <set>

namespace sgb {

SolverSetup make_solver_setup(std::vector<LaurentPolynomial> system, const std::optional<IntMatrix>& exponent_forms) {
    if (system.empty()) throw DimensionError("empty system");
    const Index n = system.front().dim();
    if (static_cast<Index>(system.size()) != n)
        throw DimensionError("solver needs a square system: " + std::to_string(system.size()) +
                             " polynomials in " + std::to_string(n) + " variables");
    SolverSetup setup;
    for (const auto& f : system) {
        if (f.dim() != n) throw DimensionError("polynomials live in different numbers of variables");
        const auto support = f.support();
        setup.newton_polytopes.push_back(newton_polytope(support));
    }
    PolytopeFamily family = solver_family(setup.newton_polytopes);
    auto order = std::make_shared<const MonomialOrder>(exponent_forms ? weight_order(family, *exponent_forms)
                                                                      : default_order(family));
    std::vector<HomogeneousPolynomial> lifted;
    for (Index i = 0; i < n; ++i) lifted.push_back(homogenize(system[static_cast<std::size_t>(i)], i + 1, family, order));
    setup.inputs = std::move(system);
    setup.context = std::make_unique<SystemContext>(std::move(family), std::move(order), std::move(lifted));
    return setup;
}

MultiDegree basis_degree(const SystemContext& ctx) {
    MultiDegree d = MultiDegree::Ones(ctx.family().size());
    d(0) = 0;
    return d;
}

MonomialBasisL monomial_basis_L(SystemContext& ctx) {
    const MultiDegree d = basis_degree(ctx);
    std::set<LatticePoint, LexLess> leading;
    for (const auto& m : reduce_macaulay(ctx, ctx.generator_count(), d)->leading_monomials()) leading.insert(m.alpha);
    MonomialBasisL out;
    for (const auto& m : ctx.monomials(d)) {
        if (leading.count(m.alpha)) continue;
        if (m.alpha.isZero()) out.one_index = out.size();
        out.monomials.push_back(m);
    }
    return out;
}

RationalMatrix BlockedMacaulay::assembled() const {
    RationalMatrix m(size(), size());
    m << m11, m12, m21, m22;
    return m;
}

namespace {

struct Partition {
    std::vector<Index> first, second;
};

Partition partition_columns(const std::vector<Monomial>& columns, const MonomialBasisL& basis) {
    std::set<LatticePoint, LexLess> standard;
    for (const auto& m : basis.monomials) standard.insert(m.alpha);
    Partition p;
    for (std::size_t j = 0; j < columns.size(); ++j)
        (standard.count(columns[j].alpha) ? p.second : p.first).push_back(static_cast<Index>(j));
    return p;
}

RationalMatrix take_columns(const RationalMatrix& m, const std::vector<Index>& cols) {
    RationalMatrix out(m.rows(), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
    return out;
}

std::vector<Monomial> pick(const std::vector<Monomial>& columns, const std::vector<Index>& idx) {
    std::vector<Monomial> out;
    for (Index j : idx) out.push_back(columns[static_cast<std::size_t>(j)]);
    return out;
}

MultiDegree full_degree(const SystemContext& ctx) { return MultiDegree::Ones(ctx.family().size()); }

/// Rows of M(F_0) that do not depend on F_0, split by column block.
struct FixedRows {
    MacaulayMatrix shape;
    Partition partition;
    RationalMatrix m11, m12;
};

FixedRows fixed_rows(SystemContext& ctx, const MonomialBasisL& basis) {
    const MultiDegree one = full_degree(ctx);
    MacaulayMatrix m(one, ctx.monomials(one), ctx.order());
    m.add_rows(*reduce_macaulay(ctx, ctx.generator_count(), one));
    const Index rows = m.row_count() + basis.size();
    if (rows != m.column_count())
        throw AssumptionViolation("rank defect: M(F0) would be " + std::to_string(rows) + "x" +
                                  std::to_string(m.column_count()) +
                                  "; the system has solutions at infinity or is not zero-dimensional");
    Partition p = partition_columns(m.columns(), basis);
    RationalMatrix m11 = take_columns(m.matrix(), p.first);
    RationalMatrix m12 = take_columns(m.matrix(), p.second);
    return {std::move(m), std::move(p), std::move(m11), std::move(m12)};
}

void product_rows(const FixedRows& fixed, const MonomialBasisL& basis, const HomogeneousPolynomial& f0,
                  RationalMatrix& m21, RationalMatrix& m22) {
    MacaulayMatrix rows(fixed.shape.degree(), fixed.shape.columns(), fixed.shape.order());
    for (const auto& l : basis.monomials) rows.add_row(monomial_multiply(l, f0), {RowLabel::Kind::Product, -1, l.alpha});
    m21 = take_columns(rows.matrix(), fixed.partition.first);
    m22 = take_columns(rows.matrix(), fixed.partition.second);
}

void check_f0(const SystemContext& ctx, const HomogeneousPolynomial& f0) {
    MultiDegree e0 = MultiDegree::Zero(ctx.family().size());
    e0(0) = 1;
    if (f0.degree().size() != e0.size() || f0.degree() != e0)
        throw DimensionError("F0 must have degree " + to_string(e0) + ", got " + to_string(f0.degree()));
}

RationalMatrix solve_fixed(const FixedRows& fixed) {
    try {
        return solve_block<Rational>(fixed.m11, fixed.m12);
    } catch (const SingularMatrixError& e) {
        throw AssumptionViolation("M11 is singular (dependent column " + std::to_string(e.column()) +
                                  "): the system is not Koszul regular together with x^(0,e0)");
    }
}

void record_solver(SystemContext& ctx, const FixedRows& fixed) {
    const Index n = fixed.shape.column_count();
    ctx.record({"solver", ctx.generator_count(), full_degree(ctx), n, n, n});
}

} // namespace

BlockedMacaulay build_M(SystemContext& ctx, const MonomialBasisL& basis, const HomogeneousPolynomial& f0) {
    check_f0(ctx, f0);
    FixedRows fixed = fixed_rows(ctx, basis);
    BlockedMacaulay out;
    out.m11 = fixed.m11;
    out.m12 = fixed.m12;
    product_rows(fixed, basis, f0, out.m21, out.m22);
    out.first_columns = pick(fixed.shape.columns(), fixed.partition.first);
    out.second_columns = pick(fixed.shape.columns(), fixed.partition.second);
    return out;
}

Monomial variable_monomial(const SystemContext& ctx, Index variable) {
    const Index n = ctx.family().dim();
    if (variable < 0 || variable >= n) throw DimensionError("variable index out of range");
    MultiDegree e0 = MultiDegree::Zero(ctx.family().size());
    e0(0) = 1;
    return {unit_vector(n, variable), e0};
}

MultiplicationMap multiplication_matrix(SystemContext& ctx, const MonomialBasisL& basis,
                                        const HomogeneousPolynomial& f0, std::string label) {
    check_f0(ctx, f0);
    FixedRows fixed = fixed_rows(ctx, basis);
    const RationalMatrix x = solve_fixed(fixed);
    RationalMatrix m21, m22;
    product_rows(fixed, basis, f0, m21, m22);
    record_solver(ctx, fixed);
    return {std::move(label), m22 - m21 * x};
}

std::vector<MultiplicationMap> multiplication_maps(SystemContext& ctx, const MonomialBasisL& basis,
                                                   std::span<const std::string> labels) {
    const Index n = ctx.family().dim();
    FixedRows fixed = fixed_rows(ctx, basis);
    const RationalMatrix x = solve_fixed(fixed);
    record_solver(ctx, fixed);
    std::vector<MultiplicationMap> maps;
    for (Index i = 0; i < n; ++i) {
        const HomogeneousPolynomial f0(variable_monomial(ctx, i).degree, {{variable_monomial(ctx, i), Rational(1)}},
                                       ctx.order());
        RationalMatrix m21, m22;
        product_rows(fixed, basis, f0, m21, m22);
        std::string label = static_cast<std::size_t>(i) < labels.size() ? labels[static_cast<std::size_t>(i)]
                                                                        : "x" + std::to_string(i + 1);
        maps.push_back({std::move(label), m22 - m21 * x});
    }
    return maps;
}

bool pairwise_commute(std::span<const MultiplicationMap> maps) {
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j)
            if (maps[i].matrix * maps[j].matrix != maps[j].matrix * maps[i].matrix) return false;
    return true;
}

RationalVector apply_to_one(const LaurentPolynomial& f, std::span<const MultiplicationMap> maps, Index one_index) {
    if (maps.empty()) throw DimensionError("no multiplication maps");
    if (f.dim() != static_cast<Index>(maps.size()))
        throw DimensionError("polynomial in " + std::to_string(f.dim()) + " variables, " +
                             std::to_string(maps.size()) + " maps");
    const Index size = maps.front().matrix.rows();
    std::vector<RationalMatrix> forward, backward(maps.size());
    for (const auto& m : maps) forward.push_back(m.matrix.transpose());

    RationalVector total = RationalVector::Zero(size);
    for (const auto& [alpha, c] : f.terms()) {
        RationalVector v = RationalVector::Zero(size);
        v(one_index) = Rational(1);
        for (std::size_t i = 0; i < maps.size(); ++i) {
            const Integer e = alpha(static_cast<Index>(i));
            if (e < 0 && backward[i].size() == 0) backward[i] = inverse<Rational>(forward[i]);
            const RationalMatrix& step = e < 0 ? backward[i] : forward[i];
            for (Integer k = 0; k < (e < 0 ? -e : e); ++k) v = step * v;
        }
        total += v * c;
    }
    return total;
}

TargetOrder parse_target_order(std::string_view name) {
    if (name == "lex") return TargetOrder::Lex;
    if (name == "grlex") return TargetOrder::GrLex;
    if (name == "grevlex") return TargetOrder::GrevLex;
    throw InvalidArgument("unknown target order '" + std::string(name) + "' (expected lex, grlex or grevlex)");
}

std::string to_string(TargetOrder order) {
    switch (order) {
    case TargetOrder::Lex: return "lex";
    case TargetOrder::GrLex: return "grlex";
    case TargetOrder::GrevLex: return "grevlex";
    }
    return "lex";
}

std::strong_ordering compare(TargetOrder order, const LatticePoint& a, const LatticePoint& b) {
    if (order != TargetOrder::Lex) {
        const Integer da = a.sum(), db = b.sum();
        if (da != db) return da <=> db;
    }
    if (order == TargetOrder::GrevLex) {
        for (Index i = a.size(); i-- > 0;)
            if (a(i) != b(i)) return b(i) <=> a(i);
        return std::strong_ordering::equal;
    }
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) <=> b(i);
    return std::strong_ordering::equal;
}

namespace {

bool divides_nonneg(const LatticePoint& a, const LatticePoint& b) { return (b.array() >= a.array()).all(); }

/// Incremental echelon over the coordinate vectors of the staircase.
class DependenceTester {
public:
    explicit DependenceTester(Index size) : size_(size) {}

    /// Either expresses v in the staircase (returns the coefficients) or
    /// inserts it as staircase element number `count()` and returns nothing.
    std::optional<RationalVector> reduce_or_insert(const RationalVector& v) {
        const Index count = static_cast<Index>(rows_.size());
        RationalVector w = v;
        RationalVector comb = RationalVector::Zero(count);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& entry = w(pivots_[k]);
            if (entry.is_zero()) continue;
            const Rational factor = entry;
            w -= rows_[k] * factor;
            comb.head(combos_[k].size()) += combos_[k] * factor;
        }
        Index pivot = -1;
        for (Index j = 0; j < size_; ++j)
            if (!w(j).is_zero()) {
                pivot = j;
                break;
            }
        if (pivot < 0) return comb;
        const Rational scale = Rational(1) / w(pivot);
        RationalVector combo = RationalVector::Zero(count + 1);
        combo.head(count) = -comb;
        combo(count) = Rational(1);
        rows_.push_back(w * scale);
        combos_.push_back(combo * scale);
        pivots_.push_back(pivot);
        return std::nullopt;
    }

private:
    Index size_;
    std::vector<RationalVector> rows_;
    std::vector<RationalVector> combos_;
    std::vector<Index> pivots_;
};

} // namespace

GroebnerBasis fglm(std::span<const MultiplicationMap> maps, Index one_index, TargetOrder target) {
    if (maps.empty()) throw DimensionError("fglm needs at least one multiplication map");
    const Index n = static_cast<Index>(maps.size());
    const Index size = maps.front().matrix.rows();
    for (const auto& m : maps)
        if (m.matrix.rows() != size || m.matrix.cols() != size)
            throw DimensionError("multiplication maps must be square and of equal size");
    if (one_index < 0 || one_index >= size) throw DimensionError("index of 1 out of range");

    std::vector<RationalMatrix> step;
    for (const auto& m : maps) step.push_back(m.matrix.transpose());

    std::vector<LatticePoint> staircase;
    std::vector<RationalVector> vectors;
    std::vector<LaurentPolynomial> elements;
    std::vector<LatticePoint> leading;
    DependenceTester tester(size);

    auto less = [&](const LatticePoint& a, const LatticePoint& b) { return compare(target, a, b) < 0; };
    struct Candidate {
        LatticePoint exponent;
        std::size_t parent;
        Index variable;
    };

    RationalVector one = RationalVector::Zero(size);
    one(one_index) = Rational(1);
    if (tester.reduce_or_insert(one)) throw AssumptionViolation("the vector of 1 is zero");
    staircase.push_back(LatticePoint::Zero(n));
    vectors.push_back(one);

    std::vector<Candidate> queue;
    auto push_neighbours = [&](std::size_t idx) {
        for (Index i = 0; i < n; ++i) queue.push_back({staircase[idx] + unit_vector(n, i), idx, i});
    };
    push_neighbours(0);

    while (!queue.empty()) {
        auto best = std::min_element(queue.begin(), queue.end(),
                                     [&](const Candidate& a, const Candidate& b) { return less(a.exponent, b.exponent); });
        Candidate c = *best;
        queue.erase(best);
        auto same = [&](const Candidate& o) { return o.exponent == c.exponent; };
        queue.erase(std::remove_if(queue.begin(), queue.end(), same), queue.end());
        if (std::any_of(leading.begin(), leading.end(), [&](const LatticePoint& l) { return divides_nonneg(l, c.exponent); }))
            continue;

        RationalVector v = step[static_cast<std::size_t>(c.variable)] * vectors[c.parent];
        if (auto comb = tester.reduce_or_insert(v)) {
            LaurentPolynomial g = LaurentPolynomial::monomial(c.exponent);
            for (Index j = 0; j < comb->size(); ++j) g.add_term(staircase[static_cast<std::size_t>(j)], -(*comb)(j));
            elements.push_back(std::move(g));
            leading.push_back(c.exponent);
        } else {
            staircase.push_back(c.exponent);
            vectors.push_back(std::move(v));
            push_neighbours(staircase.size() - 1);
        }
    }

    std::vector<std::size_t> idx(elements.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return less(leading[b], leading[a]); });
    GroebnerBasis out;
    for (std::size_t i : idx) {
        out.elements.push_back(elements[i]);
        out.leading_exponents.push_back(leading[i]);
    }
    return out;
}

SolveResult zero_dim_gb(std::vector<LaurentPolynomial> system, TargetOrder target,
                        const std::optional<IntMatrix>& exponent_forms, std::span<const std::string> labels) {
    SolverSetup setup = make_solver_setup(std::move(system), exponent_forms);
    SystemContext& ctx = *setup.context;
    const Index n = setup.variable_count();

    SolveResult result;
    result.target = target;
    result.mixed_volume = mixed_volume(setup.newton_polytopes);
    result.standard_monomials = monomial_basis_L(ctx);
    result.matrix_size = ctx.lattice_count(full_degree(ctx));
    const MonomialBasisL& basis = result.standard_monomials;

    if (basis.size() == 0) {
        result.warnings.push_back("no torus solutions: the quotient is zero");
        result.basis.elements.push_back(LaurentPolynomial::monomial(LatticePoint::Zero(n)));
        result.basis.leading_exponents.push_back(LatticePoint::Zero(n));
        result.stats = ctx.stats();
        return result;
    }
    if (!basis.one_index)
        throw AssumptionViolation("1 is a leading monomial although the standard monomials are non-empty");

    result.maps = multiplication_maps(ctx, basis, labels);
    if (!pairwise_commute(result.maps))
        throw AssumptionViolation("multiplication maps do not commute");
    if (result.mixed_volume != basis.size())
        result.warnings.push_back("number of standard monomials " + std::to_string(basis.size()) +
                                  " differs from the mixed volume " + std::to_string(result.mixed_volume));
    result.basis = fglm(result.maps, *basis.one_index, target);
    result.stats = ctx.stats();
    return result;
}

} // namespace sgb
