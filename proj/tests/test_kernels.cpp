#include <doctest.h>

#include <random>

#include "ncsurf/classify.hpp"
#include "ncsurf/eulerform.hpp"
#include "ncsurf/kernels.hpp"
#include "ncsurf/mutation.hpp"
#include "ncsurf/ncalgebra.hpp"

using namespace ncsurf;

namespace {

std::vector<std::int64_t> packed(const GramMatrix& m)
{
    std::vector<std::int64_t> out;
    for (const auto& x : m.upper_entries()) {
        out.push_back(x.get_si());
    }
    return out;
}

} // namespace

TEST_CASE("packed screen agrees with the exact checker")
{
    std::mt19937_64 rng(21);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 400; ++trial) {
            const GramMatrix m = random_gram(n, 4, rng());
            const auto screen = kernels::screen_surface_type(packed(m), n, 2);
            REQUIRE(screen != kernels::Screen::overflow);
            CHECK((screen == kernels::Screen::pass) == check_surface_type(m).passes_surface_type);
        }
    }
    for (long m = 0; m <= 20; ++m) {
        CHECK(kernels::screen_surface_type(packed(gram_family(m)), 4, 2) == kernels::Screen::pass);
        CHECK(kernels::screen_surface_type(packed(gram_family_blowup(m)), 4, 2) == kernels::Screen::pass);
    }
    CHECK(kernels::screen_surface_type(packed(gram_p2()), 3, 2) == kernels::Screen::pass);
    CHECK(kernels::screen_surface_type(packed(GramMatrix::identity(4)), 4, 2) == kernels::Screen::fail);
}

TEST_CASE("packed screen reports overflow instead of wrapping")
{
    const std::int64_t big = std::int64_t{1} << 40;
    const std::vector<std::int64_t> upper{big, big, big, big, big, big};
    CHECK(kernels::screen_surface_type(upper, 4, 2) == kernels::Screen::overflow);
}

TEST_CASE("packed generator action agrees with the exact one")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        const GramMatrix m = random_gram(4, 30, rng());
        for (const auto& g : all_generators(4)) {
            std::vector<std::int64_t> out(6);
            REQUIRE(kernels::apply_generator_packed(packed(m), 4, g, out));
            CHECK(out == packed(apply_generator(m, g)));
        }
    }
    const std::int64_t big = std::int64_t{1} << 62;
    std::vector<std::int64_t> out(3);
    CHECK_FALSE(kernels::apply_generator_packed(std::vector<std::int64_t>{big, big, big}, 3,
                                                BraidGenerator::sigma(1), out));
}

TEST_CASE("parallel enumeration equals the serial reference")
{
    for (long bound : {0L, 1L, 3L, 6L}) {
        CHECK(enumerate_solutions(3, bound) == enumerate_solutions_serial(3, bound));
    }
    CHECK(enumerate_solutions(4, 2) == enumerate_solutions_serial(4, 2));
    CHECK(enumerate_solutions(2, 5, 1) == enumerate_solutions_serial(2, 5, 1));
}
