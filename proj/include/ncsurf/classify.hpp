#pragma once

// Bounded enumeration of surface-type Gram matrices and orbit search under
// the signed braid group.
//
// Orbits are infinite, so every search runs inside the finite graph of
// Gram matrices whose entries are bounded by SearchParams::entry_cap_orbit
// (raised to the largest entry of the start matrix, so a large input can
// still descend). Within that graph the component of a matrix does not
// depend on where the search starts, which makes canonical forms well
// defined whenever the component is explored completely.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ncsurf/eulerform.hpp"
#include "ncsurf/mutation.hpp"

namespace ncsurf {

struct SearchParams {
    long entry_bound_enumeration = 8;
    long entry_cap_orbit = 200;
    std::size_t max_orbit_size = 2'000'000;
    std::size_t max_word_length = 256;

    /// Throws std::invalid_argument unless every field is positive.
    void validate() const;
};

/// Orbit invariants. s transforms by conjugation and M by congruence under
/// every generator, so all fields are constant on an orbit.
struct Fingerprint {
    std::vector<Integer> charpoly;      ///< of s
    std::size_t rank_s_minus_id = 0;
    std::vector<Integer> smith_s_minus_id;
    std::vector<Integer> smith_s_minus_id_squared;
    std::vector<Integer> smith_symmetrized; ///< of M + M^t

    std::string str() const;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GramMatrix& m);

struct OrbitCertificate {
    GramMatrix representative;
    /// apply_word(input, witness_word) == representative.
    BraidWord witness_word;
    Fingerprint invariants_fingerprint;
    std::size_t states_explored = 0;
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& what, OrbitCertificate best_so_far)
        : std::runtime_error(what), best(std::move(best_so_far))
    {
    }
    OrbitCertificate best;
};

/// All unit upper-triangular integer matrices with |entries| <= bound that
/// pass check_surface_type, in lexicographic order of the upper entries.
/// Sharded over the first upper entry and run in parallel; the output does
/// not depend on the thread count.
std::vector<GramMatrix> enumerate_solutions(std::size_t n, long bound, std::size_t required_rank = 2);

/// Serial reference: the GMP axiom checker on every candidate.
std::vector<GramMatrix> enumerate_solutions_serial(std::size_t n, long bound, std::size_t required_rank = 2);

/// The explored part of the capped component of a root matrix, with a BFS
/// tree for witness reconstruction.
class CappedOrbit {
public:
    CappedOrbit(const GramMatrix& root, const SearchParams& params);

    std::size_t rank() const { return n_; }
    std::size_t size() const { return parent_.size(); }
    /// True when the capped component was exhausted within the budgets.
    bool complete() const { return complete_; }

    GramMatrix state(std::size_t index) const;
    std::optional<std::size_t> find(const GramMatrix& m) const;
    /// apply_word(root, word_to(i)) == state(i).
    BraidWord word_to(std::size_t index) const;

    /// Packed strictly upper entries of state i.
    std::span<const std::int64_t> packed(std::size_t i) const { return {states_.data() + i * stride_, stride_}; }
    std::optional<std::size_t> find_packed(std::span<const std::int64_t> key) const;

    CappedOrbit(const CappedOrbit&) = delete;
    CappedOrbit& operator=(const CappedOrbit&) = delete;

private:
    struct SeedOnly {};
    /// Holds only the root; expansion is driven externally.
    CappedOrbit(const GramMatrix& root, SeedOnly);

    using Key = std::span<const std::int64_t>;
    struct Hash {
        using is_transparent = void;
        const CappedOrbit* self;
        std::size_t operator()(std::uint32_t i) const { return (*this)(self->packed(i)); }
        std::size_t operator()(Key k) const;
    };
    struct Equal {
        using is_transparent = void;
        const CappedOrbit* self;
        bool operator()(std::uint32_t a, std::uint32_t b) const { return (*this)(self->packed(a), self->packed(b)); }
        bool operator()(Key a, std::uint32_t b) const { return (*this)(a, self->packed(b)); }
        bool operator()(std::uint32_t a, Key b) const { return (*this)(self->packed(a), b); }
        bool operator()(Key a, Key b) const;
    };

    void push(Key key, std::uint32_t parent, std::uint8_t via, std::uint32_t depth);

    std::size_t n_;
    std::size_t stride_;
    std::vector<BraidGenerator> gens_;
    std::vector<std::int64_t> states_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> via_;
    std::vector<std::uint32_t> depth_;
    std::unordered_set<std::uint32_t, Hash, Equal> index_;
    bool complete_ = true;

    friend class BidirectionalSearch;
    friend class OrbitSearch;
};

/// Representative minimizing (max |entry|, then lexicographic upper entries)
/// over the capped component of m. Throws BudgetExhausted (carrying the best
/// certificate found) when the component could not be exhausted.
OrbitCertificate canonical_form(const GramMatrix& m, const SearchParams& params = {});

struct EquivalenceResult {
    enum class Verdict : std::uint8_t { equivalent, distinguished_by_invariant, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    /// Present iff equivalent: apply_word(m1, *witness) == m2.
    std::optional<BraidWord> witness;
    std::size_t states_explored = 0;
};

std::string to_string(EquivalenceResult::Verdict v);

/// Invariants first; then a bidirectional bounded orbit search. Never reports
/// equivalent without a witness that replays exactly.
EquivalenceResult equivalent(const GramMatrix& m1, const GramMatrix& m2, const SearchParams& params = {});

enum class ClassVerdict : std::uint8_t { connected_to_p2, connected_to_quadric, connected_to_family, unresolved };

std::string to_string(ClassVerdict v);

struct ClassifiedMatrix {
    GramMatrix matrix;
    Fingerprint fingerprint;
    ClassVerdict verdict = ClassVerdict::unresolved;
    std::optional<long> family_m;  ///< m for connected_to_family
    std::optional<BraidWord> witness; ///< maps matrix to the target
    std::size_t bucket = 0;
};

struct ClassificationReport {
    std::size_t n = 0;
    long bound = 0;
    SearchParams params;
    std::vector<Fingerprint> buckets; ///< sorted
    std::vector<ClassifiedMatrix> records;
    long family_cap = -1; ///< largest m of B_m tried

    std::size_t unresolved() const;
};

/// Enumerates surface-type matrices of rank n (3 or 4) within the bound and
/// connects each to a known representative: P^2 for rank 3, (A) or some B_m
/// for rank 4. Unconnected matrices are reported as unresolved.
ClassificationReport classify_solutions(std::size_t n, long bound, const SearchParams& params = {});

ClassificationReport classify_rank4(long bound, const SearchParams& params = {});

std::ostream& operator<<(std::ostream& os, const ClassificationReport& r);

} // namespace ncsurf
