#pragma once

// Signed braid group action on Gram matrices by mutation and sign change.
//
// sigma_i replaces the adjacent pair (E_i, E_{i+1}) by (L_{E_i} E_{i+1}, E_i)
// with [L_E F] = [F] - <E,F>[E]; sigma_i^{-1} is the right mutation; epsilon_i
// negates the i-th basis vector. Each generator is a unimodular basis change
// P acting by M -> P^t M P.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncsurf/eulerform.hpp"

namespace ncsurf {

class WordParseError : public std::invalid_argument {
public:
    WordParseError(const std::string& what, std::size_t token_position)
        : std::invalid_argument(what), position(token_position)
    {
    }
    /// 1-based index of the offending token.
    std::size_t position;
};

class GeneratorRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct BraidGenerator {
    enum class Kind : std::uint8_t { sigma, sigma_inverse, epsilon };

    Kind kind = Kind::sigma;
    std::size_t index = 1; // 1-based

    static BraidGenerator sigma(std::size_t i) { return {Kind::sigma, i}; }
    static BraidGenerator sigma_inv(std::size_t i) { return {Kind::sigma_inverse, i}; }
    static BraidGenerator epsilon(std::size_t i) { return {Kind::epsilon, i}; }

    bool valid_for(std::size_t rank) const;
    BraidGenerator inverse() const;
    /// Token form: s<k>, S<k>, e<k>.
    std::string str() const;

    friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
};

/// A word in textual (composition) order: the last generator is applied first.
struct BraidWord {
    std::size_t rank = 0;
    std::vector<BraidGenerator> generators;

    std::size_t length() const { return generators.size(); }
    bool empty() const { return generators.empty(); }

    /// Word acting as the inverse transformation.
    BraidWord inverse() const;
    std::string str() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// (this after first): first is applied, then after.
BraidWord compose(const BraidWord& after, const BraidWord& first);

/// All 3n-2 generators for the given rank in the fixed order
/// s1..s{n-1}, S1..S{n-1}, e1..en.
std::vector<BraidGenerator> all_generators(std::size_t rank);

GramMatrix apply_generator(const GramMatrix& m, BraidGenerator g);

/// Applies the generators rightmost-first.
GramMatrix apply_word(const GramMatrix& m, const BraidWord& w);

/// Each prefix action: result[k] is the matrix after the last k+1 generators.
std::vector<GramMatrix> trace_word(const GramMatrix& m, const BraidWord& w);

/// Whitespace-separated tokens s<k> (sigma_k), S<k> (sigma_k^{-1}), e<k>
/// (epsilon_k). Throws WordParseError on a malformed token and
/// GeneratorRangeError on an index outside the rank.
BraidWord parse_word(std::string_view text, std::size_t rank);

/// Uniformly random Gram matrix with upper entries in [-bound, bound].
GramMatrix random_gram(std::size_t n, long bound, std::uint64_t seed);

/// Random word of the given length over all generators.
BraidWord random_word(std::size_t rank, std::size_t length, std::uint64_t seed);

struct RelationFailure {
    std::size_t trial = 0;
    std::string relation;
    GramMatrix input = GramMatrix::identity(1);
};

struct RelationReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t checks = 0; // relation instances evaluated
    bool passed = true;
    std::optional<RelationFailure> first_failure;
};

/// Evaluates every signed braid relation on `trials` seeded random Gram
/// matrices. Trials run in parallel; the report is independent of the
/// thread count (first failure = lowest trial index).
RelationReport verify_braid_relations(std::size_t n, std::size_t trials, long entry_bound, std::uint64_t seed);

} // namespace ncsurf
