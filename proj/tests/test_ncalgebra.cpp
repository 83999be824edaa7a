#include <doctest.h>

#include "ncsurf/ncalgebra.hpp"
#include "oracles.hpp"

using namespace ncsurf;

TEST_CASE("polynomial rings")
{
    CHECK(graded_dims(QuadraticPresentation::polynomial_ring(3), 5) == std::vector<std::size_t>{1, 3, 6, 10, 15, 21});
    CHECK(graded_dims(QuadraticPresentation::polynomial_ring(2), 6) ==
          std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
    CHECK(graded_dims(QuadraticPresentation::polynomial_ring(4), 4) == std::vector<std::size_t>{1, 4, 10, 20, 35});
    CHECK(graded_dims(QuadraticPresentation::polynomial_ring(1), 3) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("free and exterior algebras")
{
    const QuadraticPresentation free(2, {});
    CHECK(graded_dims(free, 4) == std::vector<std::size_t>{1, 2, 4, 8, 16});
    // x^2, y^2, xy + yx
    const auto ext = QuadraticPresentation::from_triples(
        2, {{{0, 0, Rational(1)}}, {{1, 1, Rational(1)}}, {{0, 1, Rational(1)}, {1, 0, Rational(1)}}});
    CHECK(graded_dims(ext, 4) == std::vector<std::size_t>{1, 2, 1, 0, 0});
}

TEST_CASE("Sklyanin algebras")
{
    const std::vector<std::size_t> expected{1, 3, 6, 10, 15};
    CHECK(graded_dims(sklyanin(1, 2, 3), 4) == expected);
    CHECK(graded_dims(sklyanin(1, 2, 3), 4, RankMode::modular) == expected);
    CHECK(graded_dims(sklyanin(1, -1, 0), 4) == expected); // commutative
    CHECK(graded_dims(sklyanin(Rational(2, 3), 5, -7), 4) == expected);
    CHECK_THROWS_AS(sklyanin(0, 0, 0), std::invalid_argument);
}

TEST_CASE("sparse ranks agree with the dense oracle")
{
    const std::vector<QuadraticPresentation> algebras{
        sklyanin(1, 2, 3),
        sklyanin(1, 1, 1), // degenerate
        sklyanin(0, 0, 1), // degenerate
        QuadraticPresentation::polynomial_ring(3),
        QuadraticPresentation::from_triples(2, {{{0, 1, Rational(1)}, {1, 0, Rational(-2)}}}),
        QuadraticPresentation::from_triples(2, {{{0, 1, Rational(1)}, {1, 0, Rational(-1)}, {1, 1, Rational(1)}}}),
    };
    for (const auto& a : algebras) {
        const auto dims = graded_dims(a, 4);
        const auto modular = graded_dims(a, 4, RankMode::modular);
        for (std::size_t d = 0; d <= 4; ++d) {
            CHECK(dims[d] == oracle::graded_dim_dense(a, d));
        }
        CHECK(modular == dims);
    }
}

TEST_CASE("budget")
{
    CHECK_THROWS_AS(graded_dims(QuadraticPresentation::polynomial_ring(3), 12), ResourceBudgetError);
    CHECK_THROWS_AS(graded_dims(QuadraticPresentation::polynomial_ring(3), 5, RankMode::rational, 100),
                    ResourceBudgetError);
}

TEST_CASE("presentation validation")
{
    CHECK_THROWS(QuadraticPresentation::from_triples(2, {{{2, 0, Rational(1)}}}));
    CHECK_THROWS(QuadraticPresentation::from_triples(2, {{{0, 0, Rational(0)}}}));
    CHECK_THROWS(QuadraticPresentation(2, {RatMatrix(3)}));
    const auto p = QuadraticPresentation::polynomial_ring(2).with_relation(RatMatrix{{1, 0}, {0, 0}});
    CHECK(graded_dims(p, 3) == std::vector<std::size_t>{1, 2, 2, 2});
}

TEST_CASE("fat point multiplicities")
{
    const std::vector<std::uint64_t> expected{1, 2, 1, 4, 5, 2, 7, 8, 3, 10, 11, 4};
    for (std::uint64_t n = 1; n <= 12; ++n) {
        CHECK(fat_point_multiplicity({n}) == expected[n - 1]);
    }
    CHECK_THROWS_AS(fat_point_multiplicity({0}), std::invalid_argument);
}

TEST_CASE("extended Gram matrices")
{
    for (std::uint64_t s = 1; s <= 20; ++s) {
        CHECK(extended_gram(s) == gram_family_blowup(static_cast<long>(s)));
    }
    CHECK_THROWS_AS(extended_gram(0), std::invalid_argument);
    CHECK(extended_gram(2, sklyanin(1, 2, 3)) == gram_family_blowup(2));
    CHECK_THROWS_AS(extended_gram(2, QuadraticPresentation::from_triples(3, {})), std::logic_error);
}

TEST_CASE("named Gram matrices")
{
    CHECK(gram_p2().matrix() == IntMatrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}});
    CHECK(gram_quadric().matrix() == IntMatrix{{1, 2, 2, 4}, {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}});
    CHECK(gram_family(2).matrix() == IntMatrix{{1, 2, 4, 2}, {0, 1, 3, 3}, {0, 0, 1, 3}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(gram_family(-1), std::invalid_argument);
    CHECK_THROWS_AS(gram_family_blowup(-1), std::invalid_argument);
}
