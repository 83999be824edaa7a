#include <doctest.h>

#include <random>

#include "ncsurf/exactmat.hpp"
#include "oracles.hpp"

using namespace ncsurf;

namespace {

IntMatrix random_matrix(std::size_t n, long bound, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

} // namespace

TEST_CASE("determinant: frozen values")
{
    CHECK(det(IntMatrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}}) == 1);
    CHECK(det(IntMatrix{{2, 1}, {7, 4}}) == 1);
    CHECK(det(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(RatMatrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
}

TEST_CASE("determinant and rank agree with the minor expansions")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IntMatrix m = random_matrix(n, 4, rng);
        if (trial % 3 == 0 && n > 1) {
            for (std::size_t j = 0; j < n; ++j) {
                m(n - 1, j) = m(0, j) * 2; // force a dependency
            }
        }
        CHECK(det(m) == oracle::leibniz_det(m));
        CHECK(rank(m) == oracle::rank_by_minors(m));
        CHECK(rank(to_rational(m)) == oracle::rank_by_minors(m));
    }
}

TEST_CASE("inverse over Q")
{
    const IntMatrix m{{2, 1}, {7, 4}};
    CHECK(inverse(m) == RatMatrix{{4, -1}, {-7, 2}});
    CHECK_THROWS_AS(inverse(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix a = random_matrix(4, 5, rng);
        if (det(a) == 0) {
            continue;
        }
        CHECK(to_rational(a) * inverse(a) == RatMatrix::identity(4));
    }
}

TEST_CASE("to_integer rejects fractions")
{
    CHECK(to_integer(RatMatrix{{1, 2}, {3, 4}}) == IntMatrix{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(to_integer(RatMatrix{{Rational(1, 2)}}), std::domain_error);
}

TEST_CASE("characteristic polynomial")
{
    CHECK(charpoly(IntMatrix::identity(2)) == std::vector<Integer>{1, -2, 1});
    CHECK(charpoly(IntMatrix{{0, 1}, {-1, 0}}) == std::vector<Integer>{1, 0, 1});

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = random_matrix(1 + static_cast<std::size_t>(trial % 5), 6, rng);
        const auto expected = oracle::charpoly_by_interpolation(m);
        const auto got = charpoly(m);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(Rational(got[k]) == expected[k]);
        }
    }
}

TEST_CASE("Smith invariants")
{
    CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
    CHECK(smith_invariants(IntMatrix{{0, 0}, {0, 0}}) == std::vector<Integer>{0, 0});
    CHECK(smith_invariants(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Integer>{2, 6, 12});

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix m = random_matrix(1 + static_cast<std::size_t>(trial % 4), 6, rng);
        if (trial % 4 == 0) {
            m = m * IntMatrix::identity(m.size()) + m; // even entries
        }
        CHECK(smith_invariants(m) == oracle::smith_by_minors(m));
    }
}

TEST_CASE("nilpotency and powers")
{
    const IntMatrix n{{0, 1, 5}, {0, 0, 2}, {0, 0, 0}};
    CHECK(is_nilpotent(n));
    CHECK_FALSE(is_nilpotent(IntMatrix::identity(3)));
    CHECK(power(n, 3).is_zero());
    CHECK(power(IntMatrix{{1, 1}, {0, 1}}, 5) == IntMatrix{{1, 5}, {0, 1}});
    CHECK(power(n, 0) == IntMatrix::identity(3));
}

TEST_CASE("arithmetic identities on random matrices")
{
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix a = random_matrix(3, 9, rng);
        const IntMatrix b = random_matrix(3, 9, rng);
        const IntMatrix c = random_matrix(3, 9, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(a + b - b == a);
        CHECK(det(a * b) == det(a) * det(b));
    }
    CHECK_THROWS_AS(IntMatrix::identity(2) * IntMatrix::identity(3), std::invalid_argument);
}

TEST_CASE("big integers survive exactly")
{
    IntMatrix m{{1, 0}, {0, 1}};
    m(0, 1) = Integer("123456789012345678901234567890");
    CHECK(det(m) == 1);
    const RatMatrix inv = inverse(m);
    CHECK(inv(0, 1) == Rational(Integer("-123456789012345678901234567890")));
}
