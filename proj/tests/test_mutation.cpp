#include <doctest.h>

#include "ncsurf/eulerform.hpp"
#include "ncsurf/mutation.hpp"
#include "ncsurf/ncalgebra.hpp"

using namespace ncsurf;

namespace {

IntMatrix m4(long a, long b, long c, long d, long e, long f)
{
    return IntMatrix{{1, a, b, c}, {0, 1, d, e}, {0, 0, 1, f}, {0, 0, 0, 1}};
}

} // namespace

TEST_CASE("single generators on P2")
{
    // sigma_1 with a = 3: columns (c2 - 3 c1, c1), then rows
    CHECK(apply_generator(gram_p2(), BraidGenerator::sigma(1)).matrix() ==
          IntMatrix{{1, -3, -15}, {0, 1, 6}, {0, 0, 1}});
    CHECK(apply_generator(gram_p2(), BraidGenerator::epsilon(2)).matrix() ==
          IntMatrix{{1, -3, 6}, {0, 1, -3}, {0, 0, 1}});
    for (const auto& g : all_generators(3)) {
        CHECK(apply_generator(apply_generator(gram_p2(), g), g.inverse()) == gram_p2());
    }
}

TEST_CASE("chain from B'_m to B_m with the printed intermediates")
{
    for (long m = 0; m <= 10; ++m) {
        const GramMatrix bp = gram_family_blowup(m);
        CHECK(apply_word(bp, parse_word("s3", 4)).matrix() == m4(3, -5 * m, 6, -2 * m, 3, -m));
        CHECK(apply_word(bp, parse_word("s2 s3", 4)).matrix() == m4(m, 3, 6, 2 * m, 5 * m, 3));
        CHECK(apply_word(bp, parse_word("s1 s2 s3", 4)).matrix() == m4(-m, -m, -m, 3, 6, 3));
        // printed with -2m at (1,3); +2m is the only value consistent with the next step
        CHECK(apply_word(bp, parse_word("s3 s1 s2 s3", 4)).matrix() == m4(-m, 2 * m, -m, -3, 3, -3));
        CHECK(apply_word(bp, parse_word("e3 s3 s1 s2 s3", 4)).matrix() == m4(-m, -2 * m, -m, 3, 3, 3));
        CHECK(apply_word(bp, parse_word("e1 e3 s3 s1 s2 s3", 4)) == gram_family(m));
    }
}

TEST_CASE("word order: rightmost generator acts first")
{
    const GramMatrix m = gram_family_blowup(2);
    const GramMatrix step = apply_generator(apply_generator(m, BraidGenerator::sigma(3)), BraidGenerator::sigma(2));
    CHECK(apply_word(m, parse_word("s2 s3", 4)) == step);
    const auto trace = trace_word(m, parse_word("s2 s3", 4));
    REQUIRE(trace.size() == 2);
    CHECK(trace[0] == apply_word(m, parse_word("s3", 4)));
    CHECK(trace[1] == step);
}

TEST_CASE("inverse words undo words")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const GramMatrix m = random_gram(4, 5, seed);
        const BraidWord w = random_word(4, 1 + seed % 12, seed + 1000);
        CHECK(apply_word(apply_word(m, w), w.inverse()) == m);
        CHECK(apply_word(m, compose(w.inverse(), w)) == m);
        const BraidWord v = random_word(4, 5, seed + 2000);
        CHECK(apply_word(m, compose(v, w)) == apply_word(apply_word(m, w), v));
    }
}

TEST_CASE("signed braid relations")
{
    for (std::size_t n : {2U, 3U, 4U, 5U}) {
        const RelationReport r = verify_braid_relations(n, 100, 9, 7 + n);
        CHECK(r.passed);
        CHECK_FALSE(r.first_failure.has_value());
        CHECK(r.checks > 0);
    }
    CHECK_THROWS_AS(verify_braid_relations(1, 10, 3, 0), std::invalid_argument);
}

TEST_CASE("relation report is deterministic")
{
    const auto a = verify_braid_relations(4, 50, 9, 123);
    const auto b = verify_braid_relations(4, 50, 9, 123);
    CHECK(a.checks == b.checks);
    CHECK(a.passed == b.passed);
    CHECK(random_gram(4, 9, 5) == random_gram(4, 9, 5));
    CHECK(random_word(4, 10, 5).str() == random_word(4, 10, 5).str());
}

TEST_CASE("word parsing")
{
    const BraidWord w = parse_word("  e1 e3\ts3 S1 s2 ", 4);
    CHECK(w.str() == "e1 e3 s3 S1 s2");
    CHECK(w.length() == 5);
    CHECK(parse_word("", 4).empty());
    CHECK(w.inverse().str() == "S2 s1 S3 e3 e1");
    CHECK_THROWS_AS(parse_word("s0", 4), GeneratorRangeError);
    CHECK_THROWS_AS(parse_word("s4", 4), GeneratorRangeError);
    CHECK_NOTHROW(parse_word("e4", 4));
    CHECK_THROWS_AS(parse_word("e5", 4), GeneratorRangeError);
    CHECK_THROWS_AS(parse_word("x1", 4), WordParseError);
    CHECK_THROWS_AS(parse_word("s", 4), WordParseError);
    CHECK_THROWS_AS(parse_word("s1a", 4), WordParseError);
    try {
        parse_word("s1 s2 q", 4);
        FAIL("expected a parse error");
    } catch (const WordParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(apply_word(gram_p2(), parse_word("s1", 4)), std::invalid_argument);
    CHECK_THROWS_AS(apply_generator(gram_p2(), BraidGenerator::sigma(3)), GeneratorRangeError);
    CHECK_THROWS_AS(compose(BraidWord{3, {}}, BraidWord{4, {}}), std::invalid_argument);
}
