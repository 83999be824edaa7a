#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ncsurf/eulerform.hpp"
#include "ncsurf/exactmat.hpp"

namespace ncsurf {

class ResourceBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadratic algebra k<x_0..x_{g-1}> / (relations), all generators in
/// degree 1. A relation is a g x g coefficient array: entry (u, v) is the
/// coefficient of x_u x_v.
class QuadraticPresentation {
public:
    QuadraticPresentation(std::size_t num_generators, std::vector<RatMatrix> relations);

    /// Relations given as (u, v, coefficient) triples, one list per relation.
    static QuadraticPresentation from_triples(std::size_t num_generators,
                                              const std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>>& relations);

    /// k[x_0..x_{g-1}]: the commutators x_u x_v - x_v x_u for u < v.
    static QuadraticPresentation polynomial_ring(std::size_t num_generators);

    std::size_t num_generators() const { return g_; }
    const std::vector<RatMatrix>& relations() const { return relations_; }

    /// Copy with one more relation.
    QuadraticPresentation with_relation(RatMatrix relation) const;

private:
    std::size_t g_;
    std::vector<RatMatrix> relations_;
};

enum class RankMode : std::uint8_t {
    rational, ///< exact over Q
    modular,  ///< screening over F_p, p = 2^31 - 1; can only undercount ranks
};

inline constexpr std::size_t default_monomial_budget = 1U << 15U;

/// dim A_0, ..., dim A_D. In degree d the ideal is spanned by all
/// m_left * r * m_right; its dimension is an exact rank on the g^d monomials.
/// Throws ResourceBudgetError when g^D exceeds the monomial budget.
std::vector<std::size_t> graded_dims(const QuadraticPresentation& p, std::size_t max_degree,
                                     RankMode mode = RankMode::rational,
                                     std::size_t monomial_budget = default_monomial_budget);

/// Three-generator Sklyanin presentation (x, y, z) = (x_0, x_1, x_2):
///   a xy + b yx + c z^2,  a yz + b zy + c x^2,  a zx + b xz + c y^2.
QuadraticPresentation sklyanin(const Rational& a, const Rational& b, const Rational& c);

struct FatPointSpec {
    /// Order n of the automorphism of the elliptic triple.
    std::uint64_t automorphism_order = 1;
};

/// Multiplicity s of the fat point modules: n if gcd(n, 3) = 1, else n / 3.
std::uint64_t fat_point_multiplicity(FatPointSpec spec);

/// Gram matrix of (O, O(1), O(2)) on P^2.
GramMatrix gram_p2();
/// The quadric type (A).
GramMatrix gram_quadric();
/// The family B_m.
GramMatrix gram_family(long m);
/// The representative B'_m: P^2 collection extended by an object with m
/// dimensional Hom from each.
GramMatrix gram_family_blowup(long m);

/// Gram matrix of (S_0, S_1, S_2, F) built from dimension counts: entry
/// (i, j), j <= 2, is dim A_{j-i} of the given quadratic AS-regular algebra
/// and every Hom into the fat point F is s dimensional. Throws
/// std::logic_error if the result disagrees with gram_family_blowup(s).
GramMatrix extended_gram(std::uint64_t s, const QuadraticPresentation& algebra = QuadraticPresentation::polynomial_ring(3));

} // namespace ncsurf
