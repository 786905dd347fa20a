#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::set<LatticePoint, LexLess> lm_set(const MacaulayMatrix& m) {
    std::set<LatticePoint, LexLess> out;
    for (const auto& lm : m.leading_monomials()) out.insert(lm.alpha);
    return out;
}

std::set<LatticePoint, LexLess> lm_set(const GroebnerBasis& g) {
    return {g.leading_exponents.begin(), g.leading_exponents.end()};
}

std::unique_ptr<SystemContext> solver_context(const std::vector<LaurentPolynomial>& fs) {
    return make_solver_setup(fs).context;
}

std::vector<MultiDegree> grid(Index r, Integer top) {
    std::vector<MultiDegree> out{MultiDegree::Zero(r)};
    for (Index i = 0; i < r; ++i) {
        std::vector<MultiDegree> next;
        for (const auto& d : out)
            for (Integer v = 0; v <= top; ++v) {
                MultiDegree e = d;
                e(i) = v;
                next.push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("full Macaulay matrices of the quadrics") {
    auto q = quadric_pair();
    auto m2 = macaulay_full(*q.ctx, 2, pt({2}));
    CHECK(m2.row_count() == 2);
    CHECK(m2.column_count() == 6);
    auto m4 = macaulay_full(*q.ctx, 2, pt({4}));
    CHECK(m4.row_count() == 12);
    CHECK(m4.column_count() == 15);
    auto m1 = macaulay_full(*q.ctx, 1, pt({2}));
    REQUIRE(m1.row_count() == 1);
    CHECK(m1.row_polynomial(0) == q.ctx->generator(0));
    CHECK(macaulay_full(*q.ctx, 2, pt({1})).row_count() == 0);
    CHECK_THROWS_AS(macaulay_full(*q.ctx, 3, pt({2})), DimensionError);
    CHECK_THROWS_AS(macaulay_full(*q.ctx, 2, pt({2, 1})), DimensionError);
}

TEST_CASE("filtered reduction of the quadrics in degree 4") {
    auto q = quadric_pair();
    auto e = reduce_macaulay(*q.ctx, 2, pt({4}));
    const Stats s = q.ctx->stats();
    const auto it = std::find_if(s.matrices.begin(), s.matrices.end(),
                                 [](const MatrixRecord& r) { return r.k == 2 && r.degree == pt({4}); });
    REQUIRE(it != s.matrices.end());
    CHECK(it->rows == 11);
    CHECK(it->rank == 11);
    CHECK(it->columns == 15);
    CHECK(e->row_count() == 11);
    // oracle: rank of the unfiltered matrix
    CHECK(oracle::bareiss_rank(macaulay_full(*q.ctx, 2, pt({4})).matrix()) == 11);
    CHECK(s.zero_reductions == 0);
    CHECK(reduce_macaulay(*q.ctx, 2, pt({1}))->row_count() == 0);
}

TEST_CASE("with one generator the filtered and full matrices coincide") {
    auto q = quadric_pair();
    for (Integer t = 0; t <= 4; ++t) {
        const auto full = row_echelon(macaulay_full(*q.ctx, 1, pt({t})));
        CHECK(reduce_macaulay(*q.ctx, 1, pt({t}))->matrix() == full.matrix());
    }
}

TEST_CASE("quadric basis needs degree 4") {
    auto q = quadric_pair();
    const auto g4 = compute_gb(*q.ctx, pt({4}));
    const auto g3 = compute_gb(*q.ctx, pt({3}));
    Integer top = 0;
    for (const auto& e : g4.elements) top = std::max(top, element_degree(e, q.ctx->family()));
    CHECK(top == 4);
    CHECK(lm_set(g3) != lm_set(g4));

    // oracle: classical lex Buchberger on the same two polynomials
    std::vector<oracle::Poly> gens;
    for (const auto& f : q.ctx->generators()) gens.push_back(to_oracle(dehomogenize(f)));
    const auto expected = oracle::buchberger(oracle::Ord::Lex, gens);
    REQUIRE(expected.size() == g4.elements.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(from_oracle(expected[i], 2) == g4.elements[i]);

    auto v = gb_stability_check(*q.ctx, pt({3}));
    CHECK_FALSE(v.stable);
    v = gb_stability_check(*q.ctx, pt({4}));
    CHECK(v.stable);
    REQUIRE(v.at_degree.elements.size() == v.at_next_degree.elements.size());
    for (std::size_t i = 0; i < v.at_degree.elements.size(); ++i)
        CHECK(v.at_degree.elements[i] == v.at_next_degree.elements[i]);
}

TEST_CASE("a single linear polynomial is its own basis") {
    auto fam = normalize_translations({standard_simplex(2)});
    auto o = std::make_shared<const MonomialOrder>(default_order(fam));
    const auto f = poly({{2, {1, 0}}, {-4, {0, 1}}, {6, {0, 0}}});
    SystemContext ctx(fam, o, {homogenize(f, pt({1}), fam, o)});
    const auto g = compute_gb(ctx, pt({1}));
    REQUIRE(g.elements.size() == 1);
    CHECK(g.elements[0] == f * Rational(1, 2));
    CHECK(g.leading_exponents[0] == pt({1, 0}));
    CHECK(gb_stability_check(ctx, pt({1})).stable);
}

TEST_CASE("divisibility and normal forms in a semigroup algebra") {
    // segment conv{(0,0),(1,1)}: the algebra is K[xy]
    auto fam = normalize_translations({polytope({{0, 0}, {1, 1}})});
    const IntMatrix cone = fam.cone_generators();
    CHECK(divides(pt({1, 1}), pt({2, 2}), cone));
    CHECK_FALSE(divides(pt({1, 1}), pt({2, 1}), cone));
    CHECK_FALSE(divides(pt({2, 2}), pt({1, 1}), cone));

    auto o = default_order(fam);
    const auto g = poly({{1, {1, 1}}, {-2, {0, 0}}});
    const auto f = poly({{1, {3, 3}}, {1, {0, 0}}});
    // (xy)^3 + 1 = 8 + 1 modulo xy - 2
    CHECK(normal_form(f, {g}, {pt({1, 1})}, o, cone) == poly({{9, {0, 0}}}));
}

TEST_CASE("element degrees") {
    auto fam = solver_family({polytope({{0, 0}, {1, 1}}), standard_simplex(2)});
    CHECK(element_degree(poly({{1, {0, 0}}}), fam) == 0);
    CHECK(element_degree(poly({{1, {1, 0}}}), fam) == 1);
    CHECK(element_degree(poly({{1, {3, 1}}, {1, {0, 0}}}), fam) == 1);
    CHECK(element_degree(poly({{1, {4, 0}}}), fam) == 2);
    CHECK_THROWS_AS(element_degree(poly({{1, {-1, 0}}}), fam), InvalidArgument);
}

TEST_CASE("filtered and full leading monomials agree on a grid of degrees") {
    auto corpus = random_square_corpus(8, 99);
    corpus.push_back({poly({{1, {1, 1}}, {-1, {0, 0}}}), poly({{1, {1, 0}}, {1, {0, 1}}, {-2, {0, 0}}})});
    for (const auto& sys : corpus) {
        auto ctx = solver_context(sys);
        for (const auto& d : grid(3, 2)) {
            const auto filtered = reduce_macaulay(*ctx, 2, d);
            const auto full = macaulay_full(*ctx, 2, d);
            CHECK(lm_set(*filtered) == lm_set(row_echelon(full)));
            // same row space
            RationalMatrix stacked(filtered->row_count() + full.row_count(), full.column_count());
            stacked << filtered->matrix(), full.matrix();
            CHECK(rank<Rational>(stacked) == filtered->row_count());
            CHECK(oracle::bareiss_rank(full.matrix()) == filtered->row_count());
        }
    }
}

TEST_CASE("memoization does not change results") {
    const auto sys = random_square_corpus(1, 5).front();
    auto warm = solver_context(sys);
    reduce_macaulay(*warm, 2, pt({1, 1, 1}));
    const auto a = reduce_macaulay(*warm, 2, pt({2, 2, 1}));
    auto cold = solver_context(sys);
    const auto b = reduce_macaulay(*cold, 2, pt({2, 2, 1}));
    CHECK(a->matrix() == b->matrix());
    CHECK(reduce_macaulay(*warm, 2, pt({2, 2, 1})).get() == a.get());
    warm->clear_cache();
    CHECK(reduce_macaulay(*warm, 2, pt({2, 2, 1}))->matrix() == a->matrix());
}

TEST_CASE("generic square systems have no zero reductions") {
    const auto corpus = random_square_corpus(20);
    for (const auto& sys : corpus) {
        for (const auto& d : {pt({0, 1, 1}), pt({1, 1, 1}), pt({0, 2, 1}), pt({1, 2, 2}), pt({2, 2, 2})}) {
            auto ctx = solver_context(sys);
            reduce_macaulay(*ctx, 2, d);
            const Stats s = ctx->stats();
            CHECK(s.zero_reductions == 0);
            for (const auto& m : s.matrices) CHECK(m.rank == m.rows);
        }
    }
}

TEST_CASE("reported column counts match independent lattice counts") {
    const auto corpus = random_square_corpus(6, 1234);
    for (const auto& sys : corpus) {
        auto ctx = solver_context(sys);
        reduce_macaulay(*ctx, 2, pt({2, 2, 2}));
        std::vector<std::vector<oracle::Point>> polys;
        for (Index i = 0; i < ctx->family().size(); ++i) polys.push_back(to_points(ctx->family()[i]));
        for (const auto& m : ctx->stats().matrices) {
            std::vector<long> d(m.degree.begin(), m.degree.end());
            const auto expected = oracle::lattice_points2(oracle::scaled_sum(polys, d, 2)).size();
            CHECK(m.columns == static_cast<Index>(expected));
            CHECK(m.rows <= m.columns);
        }
        for (const auto& [d, count] : ctx->stats().lattice_counts) {
            std::vector<long> dl(d.begin(), d.end());
            CHECK(count == static_cast<Index>(oracle::lattice_points2(oracle::scaled_sum(polys, dl, 2)).size()));
        }
    }
}

TEST_CASE("context validation") {
    auto fam = normalize_translations({standard_simplex(2)});
    auto o = std::make_shared<const MonomialOrder>(default_order(fam));
    const auto f = homogenize(poly({{1, {1, 0}}}), pt({1}), fam, o);
    CHECK_THROWS_AS(SystemContext(fam, nullptr, {f}), InvalidArgument);
    auto fam2 = normalize_translations({standard_simplex(2), standard_simplex(2)});
    auto o2 = std::make_shared<const MonomialOrder>(default_order(fam2));
    CHECK_THROWS_AS(SystemContext(fam2, o2, {f}), DimensionError);
}
