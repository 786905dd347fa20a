#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

const std::vector<LaurentPolynomial> hyperbola_line{poly({{1, {1, 1}}, {-1, {0, 0}}}),
                                                    poly({{1, {1, 0}}, {1, {0, 1}}, {-2, {0, 0}}})};

const std::vector<LaurentPolynomial> saturation_pair{poly({{1, {2, 0}}, {-1, {1, 0}}}),
                                                     poly({{1, {0, 1}}, {-1, {0, 0}}})};

const std::vector<LaurentPolynomial> unit_squares{
    poly({{1, {1, 1}}, {2, {1, 0}}, {-3, {0, 1}}, {1, {0, 0}}}),
    poly({{2, {1, 1}}, {-1, {1, 0}}, {1, {0, 1}}, {-4, {0, 0}}})};

const std::vector<LaurentPolynomial> circle_parabola{poly({{1, {2, 0}}, {1, {0, 2}}, {-5, {0, 0}}}),
                                                     poly({{1, {2, 0}}, {-1, {0, 1}}, {-1, {0, 0}}})};

std::vector<LaurentPolynomial> as_polys(const std::vector<oracle::Poly>& ps, Index n) {
    std::vector<LaurentPolynomial> out;
    for (const auto& p : ps) out.push_back(from_oracle(p, n));
    return out;
}

std::vector<oracle::Poly> as_oracle(const std::vector<LaurentPolynomial>& fs) {
    std::vector<oracle::Poly> out;
    for (const auto& f : fs) out.push_back(to_oracle(f));
    return out;
}

HomogeneousPolynomial unit_f0(const SystemContext& ctx) {
    MultiDegree e0 = MultiDegree::Zero(ctx.family().size());
    e0(0) = 1;
    Monomial one{LatticePoint::Zero(ctx.family().dim()), e0};
    return HomogeneousPolynomial(e0, {{one, Rational(1)}}, ctx.order());
}

// Number of monomials outside the ideal generated by the leading exponents;
// -1 when the staircase is infinite or larger than the cap.
long staircase_size(const std::vector<LatticePoint>& leading, Integer cap = 40) {
    long count = 0;
    for (Integer a = 0; a <= cap; ++a)
        for (Integer b = 0; b <= cap; ++b) {
            bool covered = false;
            for (const auto& l : leading) covered = covered || (l(0) <= a && l(1) <= b);
            if (!covered) {
                if (a == cap || b == cap) return -1;
                ++count;
            }
        }
    return count;
}

} // namespace

TEST_CASE("standard monomials of the hyperbola and line") {
    auto setup = make_solver_setup(hyperbola_line);
    auto& ctx = *setup.context;
    CHECK(basis_degree(ctx) == pt({0, 1, 1}));
    const auto basis = monomial_basis_L(ctx);
    CHECK(basis.size() == 2);
    REQUIRE(basis.one_index.has_value());
    CHECK(basis.monomials[static_cast<std::size_t>(*basis.one_index)].alpha == pt({0, 0}));
    CHECK(mixed_volume(setup.newton_polytopes) == 2);
}

TEST_CASE("blocked M(F0) for a variable") {
    auto setup = make_solver_setup(hyperbola_line);
    auto& ctx = *setup.context;
    const auto basis = monomial_basis_L(ctx);
    const Monomial x = variable_monomial(ctx, 0);
    const HomogeneousPolynomial f0(x.degree, {{x, Rational(1)}}, ctx.order());
    const auto m = build_M(ctx, basis, f0);
    CHECK(m.size() == 11);
    CHECK(m.m22.rows() == basis.size());
    CHECK(m.m22.cols() == basis.size());
    CHECK(m.second_columns.size() == static_cast<std::size_t>(basis.size()));
    CHECK(m.m11.rows() == reduce_macaulay(ctx, 2, pt({1, 1, 1}))->row_count());
    const RationalMatrix full = m.assembled();
    CHECK(full.rows() == full.cols());
    CHECK(oracle::bareiss_rank(m.m11) == m.m11.rows());
    // rank additivity over the invertible block
    const auto map = multiplication_matrix(ctx, basis, f0, "x");
    CHECK(oracle::bareiss_rank(full) == m.m11.rows() + oracle::bareiss_rank(map.matrix));
    CHECK_THROWS_AS(variable_monomial(ctx, 2), DimensionError);
}

TEST_CASE("the unit F0 gives the identity map") {
    auto setup = make_solver_setup(unit_squares);
    auto& ctx = *setup.context;
    const auto basis = monomial_basis_L(ctx);
    const auto f0 = unit_f0(ctx);
    const auto m = build_M(ctx, basis, f0);
    CHECK(m.m21.isZero());
    CHECK(m.m22 == RationalMatrix::Identity(basis.size(), basis.size()));
    CHECK(multiplication_matrix(ctx, basis, f0).matrix == RationalMatrix::Identity(basis.size(), basis.size()));
}

TEST_CASE("multiplication by x on a double root") {
    auto setup = make_solver_setup(hyperbola_line);
    auto& ctx = *setup.context;
    const auto basis = monomial_basis_L(ctx);
    const auto maps = multiplication_maps(ctx, basis);
    REQUIRE(maps.size() == 2);
    CHECK(maps[0].label == "x1");
    const RationalMatrix& mx = maps[0].matrix;
    CHECK(mx.trace() == 2);
    // oracle: (t - 1)^2
    CHECK(oracle::charpoly(mx) == std::vector<Rational>{1, -2, 1});
    CHECK(oracle::charpoly(maps[1].matrix) == std::vector<Rational>{1, -2, 1});
    CHECK(pairwise_commute(maps));
}

TEST_CASE("characteristic polynomial of y on circle and parabola") {
    auto setup = make_solver_setup(circle_parabola);
    auto& ctx = *setup.context;
    const auto basis = monomial_basis_L(ctx);
    const auto maps = multiplication_maps(ctx, basis);
    REQUIRE(basis.size() == 4);
    // y satisfies y^2 + y - 4 = 0 twice over, so charpoly(M_y) = (y^2 + y - 4)^2
    CHECK(oracle::charpoly(maps[1].matrix) == std::vector<Rational>{16, -8, -7, 2, 1});
}

TEST_CASE("maps annihilate the generators") {
    auto corpus = random_square_corpus(10, 77);
    corpus.push_back(hyperbola_line);
    corpus.push_back(unit_squares);
    corpus.push_back(circle_parabola);
    for (const auto& sys : corpus) {
        auto setup = make_solver_setup(sys);
        auto& ctx = *setup.context;
        const auto basis = monomial_basis_L(ctx);
        REQUIRE(basis.one_index.has_value());
        const auto maps = multiplication_maps(ctx, basis);
        CHECK(pairwise_commute(maps));
        for (Index i = 1; i <= 2; ++i) {
            CHECK(apply_to_one(dehomogenize(ctx.generator(i - 1)), maps, *basis.one_index).isZero());
            CHECK(apply_to_one(sys[static_cast<std::size_t>(i - 1)], maps, *basis.one_index).isZero());
        }
        const auto unit = apply_to_one(poly({{1, {0, 0}}}), maps, *basis.one_index);
        CHECK(unit == RationalVector::Unit(basis.size(), *basis.one_index));
        // x * x^-1 = 1
        CHECK(apply_to_one(poly({{1, {1, 0}}}) * poly({{1, {-1, 0}}}), maps, *basis.one_index) == unit);
        CHECK(basis.size() == mixed_volume(setup.newton_polytopes));
    }
}

TEST_CASE("target orders") {
    CHECK(parse_target_order("lex") == TargetOrder::Lex);
    CHECK(parse_target_order("grevlex") == TargetOrder::GrevLex);
    CHECK(to_string(TargetOrder::GrLex) == "grlex");
    CHECK_THROWS_AS(parse_target_order("degrevlex"), InvalidArgument);
    CHECK(compare(TargetOrder::Lex, pt({1, 0}), pt({0, 5})) == std::strong_ordering::greater);
    CHECK(compare(TargetOrder::GrLex, pt({1, 0}), pt({0, 5})) == std::strong_ordering::less);
    CHECK(compare(TargetOrder::GrLex, pt({1, 1}), pt({0, 2})) == std::strong_ordering::greater);
    // x*z^2 vs y^3 and x*y*z vs y^3 in three variables
    CHECK(compare(TargetOrder::GrevLex, pt({1, 0, 2}), pt({0, 3, 0})) == std::strong_ordering::less);
    CHECK(compare(TargetOrder::GrLex, pt({1, 0, 2}), pt({0, 3, 0})) == std::strong_ordering::greater);
    CHECK(compare(TargetOrder::GrevLex, pt({1, 1, 1}), pt({0, 3, 0})) == std::strong_ordering::less);
}

TEST_CASE("lex bases agree with saturation by a classical algorithm") {
    std::vector<std::vector<LaurentPolynomial>> systems{hyperbola_line, saturation_pair, unit_squares,
                                                        circle_parabola};
    for (const auto& s : random_square_corpus(12, 4242)) systems.push_back(s);
    for (const auto& sys : systems) {
        const auto expected = as_polys(oracle::saturate_lex(as_oracle(sys), 2), 2);
        const auto got = zero_dim_gb(sys, TargetOrder::Lex);
        CHECK(got.basis.elements == expected);
        CHECK(got.warnings.empty());
        CHECK(got.standard_monomials.size() == got.mixed_volume);
    }
}

TEST_CASE("graded bases agree with a classical algorithm") {
    std::vector<std::vector<LaurentPolynomial>> systems{hyperbola_line, unit_squares, circle_parabola};
    for (const auto& s : random_square_corpus(8, 515)) systems.push_back(s);
    for (const auto& sys : systems) {
        const auto lex = oracle::saturate_lex(as_oracle(sys), 2);
        const auto grlex = oracle::buchberger(oracle::Ord::GrLex, lex);
        CHECK(zero_dim_gb(sys, TargetOrder::GrLex).basis.elements == as_polys(grlex, 2));

        const auto grevlex = zero_dim_gb(sys, TargetOrder::GrevLex);
        // every element lies in the ideal and the staircase has the right size
        for (const auto& g : grevlex.basis.elements) CHECK(oracle::reduce_full(oracle::Ord::GrLex, to_oracle(g), grlex).empty());
        CHECK(staircase_size(grevlex.basis.leading_exponents) == grevlex.standard_monomials.size());
    }
}

TEST_CASE("known solve results") {
    auto r = zero_dim_gb(hyperbola_line, TargetOrder::Lex);
    REQUIRE(r.basis.elements.size() == 2);
    CHECK(r.basis.elements[0] == poly({{1, {1, 0}}, {1, {0, 1}}, {-2, {0, 0}}}));
    CHECK(r.basis.elements[1] == poly({{1, {0, 2}}, {-2, {0, 1}}, {1, {0, 0}}}));
    CHECK(r.mixed_volume == 2);
    CHECK(r.matrix_size == 11);

    r = zero_dim_gb(saturation_pair, TargetOrder::Lex);
    CHECK(r.basis.elements == std::vector<LaurentPolynomial>{poly({{1, {1, 0}}, {-1, {0, 0}}}),
                                                             poly({{1, {0, 1}}, {-1, {0, 0}}})});
    CHECK(r.mixed_volume == 1);
}

TEST_CASE("dependent equations violate the rank condition") {
    const std::vector<LaurentPolynomial> dependent{poly({{1, {1, 0}}, {1, {0, 1}}, {-2, {0, 0}}}),
                                                   poly({{2, {1, 0}}, {2, {0, 1}}, {-4, {0, 0}}})};
    CHECK_THROWS_AS(zero_dim_gb(dependent, TargetOrder::Lex), AssumptionViolation);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(make_solver_setup({hyperbola_line[0]}), DimensionError);
    CHECK_THROWS_AS(make_solver_setup({hyperbola_line[0], poly({{1, {1, 0, 0}}})}), DimensionError);
    CHECK_THROWS_AS(make_solver_setup({hyperbola_line[0], LaurentPolynomial(2)}), DimensionError);
}

TEST_CASE("an order given by weight forms") {
    IntMatrix forms(2, 2);
    forms << 0, 1, 1, 0;
    const auto a = zero_dim_gb(unit_squares, TargetOrder::Lex, forms);
    const auto b = zero_dim_gb(unit_squares, TargetOrder::Lex);
    CHECK(a.basis.elements == b.basis.elements);
}
