#pragma once

#include <initializer_list>
#include <memory>
#include <set>
#include <random>
#include <utility>
#include <vector>

#include "oracle/oracle.hpp"
#include "sgb/f5core.hpp"
#include "sgb/torussolver.hpp"

namespace testing {

using namespace sgb;

inline LatticePoint pt(std::initializer_list<Integer> v) { return from_std(std::vector<Integer>(v)); }

/// f from (coefficient, exponent) pairs.
inline LaurentPolynomial poly(std::initializer_list<std::pair<Rational, std::vector<Integer>>> terms) {
    Index dim = terms.size() ? static_cast<Index>(terms.begin()->second.size()) : 0;
    LaurentPolynomial f(dim);
    for (const auto& [c, e] : terms) f.add_term(from_std(e), c);
    return f;
}

inline IntegerPolytope polytope(std::initializer_list<std::vector<Integer>> pts) {
    std::vector<LatticePoint> v;
    for (const auto& p : pts) v.push_back(from_std(p));
    return IntegerPolytope(std::span<const LatticePoint>(v));
}

inline std::vector<oracle::Point> to_points(const IntegerPolytope& p) {
    std::vector<oracle::Point> out;
    for (Index j = 0; j < p.size(); ++j) {
        oracle::Point q;
        for (Index i = 0; i < p.dim(); ++i) q.push_back(p.generators()(i, j));
        out.push_back(q);
    }
    return out;
}

inline oracle::Poly to_oracle(const LaurentPolynomial& f) {
    oracle::Poly out;
    for (const auto& [e, c] : f.terms()) out.emplace(oracle::Exp(e.begin(), e.end()), c);
    return out;
}

inline LaurentPolynomial from_oracle(const oracle::Poly& p, Index dim) {
    LaurentPolynomial f(dim);
    for (const auto& [e, c] : p) f.add_term(from_std(std::vector<Integer>(e.begin(), e.end())), c);
    return f;
}

/// Two dense quadrics over the 2-simplex in degree 2; their basis needs degree 4.
struct QuadricPair {
    std::shared_ptr<const MonomialOrder> order;
    std::unique_ptr<SystemContext> ctx;
};

inline QuadricPair quadric_pair() {
    PolytopeFamily family = normalize_translations({standard_simplex(2)});
    auto order = std::make_shared<const MonomialOrder>(default_order(family));
    const MultiDegree two = pt({2});
    auto f1 = poly({{1, {2, 0}}, {1, {1, 1}}, {1, {0, 2}}, {1, {1, 0}}, {1, {0, 1}}, {1, {0, 0}}});
    auto f2 = poly({{1, {2, 0}}, {2, {1, 1}}, {3, {0, 2}}, {4, {1, 0}}, {5, {0, 1}}, {6, {0, 0}}});
    std::vector<HomogeneousPolynomial> gens{homogenize(f1, two, family, order), homogenize(f2, two, family, order)};
    return {order, std::make_unique<SystemContext>(family, order, std::move(gens))};
}

inline Rational random_coefficient(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
    Rational c(num(rng), den(rng));
    return sign(rng) ? -c : c;
}

/// Random polynomial in two variables: 2 to 4 distinct exponents in [0,2]^2.
inline LaurentPolynomial random_sparse(std::mt19937& rng, int min_terms = 2, int max_terms = 4) {
    std::uniform_int_distribution<int> count(min_terms, max_terms), coord(0, 2);
    const int k = count(rng);
    std::set<std::vector<Integer>> exps;
    while (static_cast<int>(exps.size()) < k) exps.insert({coord(rng), coord(rng)});
    LaurentPolynomial f(2);
    for (const auto& e : exps) f.add_term(from_std(e), random_coefficient(rng));
    return f;
}

/// Square systems in two variables whose Newton polytopes have a
/// full-dimensional Minkowski sum, from a fixed seed.
inline std::vector<std::vector<LaurentPolynomial>> random_square_corpus(int count, unsigned seed = 20240611) {
    std::mt19937 rng(seed);
    std::vector<std::vector<LaurentPolynomial>> out;
    while (static_cast<int>(out.size()) < count) {
        auto f = random_sparse(rng), g = random_sparse(rng);
        auto pf = newton_polytope(f.support()), pg = newton_polytope(g.support());
        if (oracle::double_area2(oracle::minkowski(to_points(pf), to_points(pg))) == 0) continue;
        out.push_back({f, g});
    }
    return out;
}

} // namespace testing
