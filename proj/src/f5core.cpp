#include "sgb/f5core.hpp"

#include <algorithm>
#include <set>

namespace sgb {

SystemContext::SystemContext(PolytopeFamily family, HomogeneousPolynomial::OrderPtr order,
                             std::vector<HomogeneousPolynomial> generators)
    : family_(std::move(family)), order_(std::move(order)), generators_(std::move(generators)) {
    if (!order_) throw InvalidArgument("system context needs a monomial order");
    order_->check_against(family_);
    for (const auto& f : generators_) {
        if (f.degree().size() != family_.size())
            throw DimensionError("generator degree " + to_string(f.degree()) + " does not match a family of " +
                                 std::to_string(family_.size()) + " polytopes");
        if (f.is_zero()) throw InvalidArgument("zero generator");
    }
    cone_generators_ = family_.cone_generators();
}

const std::vector<Monomial>& SystemContext::monomials(const MultiDegree& d) {
    const auto key = to_std(d);
    {
        std::lock_guard lock(mutex_);
        if (auto it = monomials_.find(key); it != monomials_.end()) return *it->second;
    }
    auto list = std::make_shared<std::vector<Monomial>>();
    if (is_nonnegative(d)) {
        const auto& order = *order_;
        auto points = weighted_minkowski_lattice_points(
            family_, d, [&](const LatticePoint& a, const LatticePoint& b) { return order.compare_exponents(a, b) > 0; });
        list->reserve(points.size());
        for (auto& p : points) list->push_back({std::move(p), d});
    }
    std::lock_guard lock(mutex_);
    if (is_nonnegative(d)) stats_.lattice_counts[key] = static_cast<Index>(list->size());
    auto [it, inserted] = monomials_.emplace(key, std::move(list));
    return *it->second;
}

std::shared_ptr<const MacaulayMatrix> SystemContext::cached(Index k, const MultiDegree& d) const {
    std::lock_guard lock(mutex_);
    auto it = echelon_cache_.find({k, to_std(d)});
    return it == echelon_cache_.end() ? nullptr : it->second;
}

void SystemContext::store(Index k, const MultiDegree& d, std::shared_ptr<const MacaulayMatrix> m) {
    std::lock_guard lock(mutex_);
    echelon_cache_.emplace(Key{k, to_std(d)}, std::move(m));
}

void SystemContext::clear_cache() {
    std::lock_guard lock(mutex_);
    echelon_cache_.clear();
}

void SystemContext::record(MatrixRecord rec) {
    std::lock_guard lock(mutex_);
    stats_.rows_built += rec.rows;
    stats_.zero_reductions += rec.rows - rec.rank;
    ++stats_.eliminations;
    stats_.matrices.push_back(std::move(rec));
}

Stats SystemContext::stats() const {
    std::lock_guard lock(mutex_);
    return stats_;
}

void SystemContext::reset_stats() {
    std::lock_guard lock(mutex_);
    stats_ = Stats{};
}

namespace {

void check_k(const SystemContext& ctx, Index k) {
    if (k < 1 || k > ctx.generator_count())
        throw DimensionError("generator count k=" + std::to_string(k) + " out of range 1.." +
                             std::to_string(ctx.generator_count()));
}

void check_degree(const SystemContext& ctx, const MultiDegree& d) {
    if (d.size() != ctx.family().size())
        throw DimensionError("degree " + to_string(d) + " needs " + std::to_string(ctx.family().size()) +
                             " components");
}

void add_products(SystemContext& ctx, MacaulayMatrix& m, Index i, const MultiDegree& d,
                  const std::set<LatticePoint, LexLess>& excluded) {
    const HomogeneousPolynomial& f = ctx.generator(i);
    const MultiDegree e = d - f.degree();
    if (!is_nonnegative(e)) return;
    for (const Monomial& mult : ctx.monomials(e)) {
        if (excluded.count(mult.alpha)) continue;
        m.add_row(monomial_multiply(mult, f), {RowLabel::Kind::Product, i, mult.alpha});
    }
}

} // namespace

MacaulayMatrix macaulay_full(SystemContext& ctx, Index k, const MultiDegree& d) {
    check_k(ctx, k);
    check_degree(ctx, d);
    MacaulayMatrix m(d, ctx.monomials(d), ctx.order());
    for (Index i = 0; i < k; ++i) add_products(ctx, m, i, d, {});
    return m;
}

std::shared_ptr<const MacaulayMatrix> reduce_macaulay(SystemContext& ctx, Index k, const MultiDegree& d) {
    check_k(ctx, k);
    check_degree(ctx, d);
    if (auto hit = ctx.cached(k, d)) return hit;

    MacaulayMatrix m(d, ctx.monomials(d), ctx.order());
    std::set<LatticePoint, LexLess> excluded;
    if (k > 1) {
        m.add_rows(*reduce_macaulay(ctx, k - 1, d));
        const MultiDegree lower = d - ctx.generator(k - 1).degree();
        if (is_nonnegative(lower))
            for (const Monomial& lm : reduce_macaulay(ctx, k - 1, lower)->leading_monomials())
                excluded.insert(lm.alpha);
    }
    add_products(ctx, m, k - 1, d, excluded);

    auto reduced = std::make_shared<const MacaulayMatrix>(row_echelon(m));
    ctx.record({"reduce", k, d, m.row_count(), m.column_count(), reduced->row_count()});
    ctx.store(k, d, reduced);
    return reduced;
}

bool divides(const LatticePoint& a, const LatticePoint& b, const IntMatrix& cone_generators) {
    return cone_membership(b - a, cone_generators);
}

LaurentPolynomial normal_form(LaurentPolynomial f, const std::vector<LaurentPolynomial>& basis,
                              const std::vector<LatticePoint>& leading, const MonomialOrder& order,
                              const IntMatrix& cone_generators) {
    LaurentPolynomial remainder(f.dim());
    while (!f.is_zero()) {
        const LatticePoint t = f.leading_exponent(order);
        const Rational c = f.coefficient(t);
        bool reduced = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!divides(leading[j], t, cone_generators)) continue;
            f -= basis[j].shifted(t - leading[j]) * c;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(t, c);
            f.add_term(t, -c);
        }
    }
    return remainder;
}

GroebnerBasis reduce_basis(std::vector<LaurentPolynomial> elements, const MonomialOrder& order,
                           const IntMatrix& cone_generators) {
    std::erase_if(elements, [](const LaurentPolynomial& g) { return g.is_zero(); });
    for (auto& g : elements) g *= Rational(1) / g.leading_coefficient(order);

    std::vector<LatticePoint> lead;
    for (const auto& g : elements) lead.push_back(g.leading_exponent(order));

    // Drop non-minimal leading monomials; among equal ones keep the first.
    std::vector<bool> keep(elements.size(), true);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lead[i] == lead[j] ? j < i : divides(lead[j], lead[i], cone_generators)) keep[i] = false;
        }
    }

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (keep[i]) idx.push_back(i);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order.compare_exponents(lead[a], lead[b]) < 0; });

    std::vector<LaurentPolynomial> basis;
    std::vector<LatticePoint> leading;
    for (std::size_t i : idx) {
        basis.push_back(elements[i]);
        leading.push_back(lead[i]);
    }

    for (std::size_t i = 0; i < basis.size(); ++i) {
        LaurentPolynomial tail = basis[i];
        tail.add_term(leading[i], -Rational(1));
        std::vector<LaurentPolynomial> others;
        std::vector<LatticePoint> others_lead;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == i) continue;
            others.push_back(basis[j]);
            others_lead.push_back(leading[j]);
        }
        LaurentPolynomial nf = normal_form(std::move(tail), others, others_lead, order, cone_generators);
        nf.add_term(leading[i], Rational(1));
        basis[i] = std::move(nf);
    }

    GroebnerBasis out;
    for (std::size_t i = basis.size(); i-- > 0;) {
        out.elements.push_back(std::move(basis[i]));
        out.leading_exponents.push_back(std::move(leading[i]));
    }
    return out;
}

GroebnerBasis compute_gb(SystemContext& ctx, const MultiDegree& d) {
    check_degree(ctx, d);
    if (!is_nonnegative(d)) throw DimensionError("degree must be non-negative");
    auto m = reduce_macaulay(ctx, ctx.generator_count(), d);
    std::vector<LaurentPolynomial> candidates;
    for (const auto& row : m->rows()) {
        LaurentPolynomial g = dehomogenize(row);
        if (g.dim() == 0) g = LaurentPolynomial(ctx.family().dim());
        candidates.push_back(std::move(g));
    }
    return reduce_basis(std::move(candidates), *ctx.order(), ctx.cone_generators());
}

Integer element_degree(const LaurentPolynomial& f, const PolytopeFamily& family) {
    constexpr Integer kLimit = 1 << 12;
    const Index r = family.size();
    for (Integer t = 0; t <= kLimit; ++t) {
        const MultiDegree d = MultiDegree::Constant(r, t);
        bool inside = true;
        for (const auto& [alpha, c] : f.terms()) {
            if (!point_in_weighted_sum(alpha, family, d)) {
                inside = false;
                break;
            }
        }
        if (inside) return t;
    }
    throw InvalidArgument("polynomial is not supported in the semigroup of the family");
}

StabilityVerdict gb_stability_check(SystemContext& ctx, const MultiDegree& d) {
    StabilityVerdict v;
    v.at_degree = compute_gb(ctx, d);
    v.at_next_degree = compute_gb(ctx, MultiDegree(d.array() + 1));
    auto as_set = [](const GroebnerBasis& g) {
        return std::set<LatticePoint, LexLess>(g.leading_exponents.begin(), g.leading_exponents.end());
    };
    v.stable = as_set(v.at_degree) == as_set(v.at_next_degree);
    return v;
}

} // namespace sgb
