#include "ncsurf/classify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "ncsurf/kernels.hpp"
#include "ncsurf/ncalgebra.hpp"

namespace ncsurf {

void SearchParams::validate() const
{
    if (entry_bound_enumeration <= 0 || entry_cap_orbit <= 0 || max_orbit_size == 0 || max_word_length == 0) {
        throw std::invalid_argument("SearchParams: all bounds and budgets must be positive");
    }
}

namespace {

std::string join(const std::vector<Integer>& v)
{
    std::string out;
    for (const auto& x : v) {
        if (!out.empty()) {
            out += ',';
        }
        out += x.get_str();
    }
    return out;
}

} // namespace

std::string Fingerprint::str() const
{
    std::ostringstream os;
    os << "charpoly=[" << join(charpoly) << "] rank=" << rank_s_minus_id << " snf(s-1)=[" << join(smith_s_minus_id)
       << "] snf((s-1)^2)=[" << join(smith_s_minus_id_squared) << "] snf(M+Mt)=[" << join(smith_symmetrized) << ']';
    return os.str();
}

Fingerprint fingerprint(const GramMatrix& m)
{
    const IntMatrix s = serre_matrix(m);
    const IntMatrix nil = s - IntMatrix::identity(m.rank());
    Fingerprint fp;
    fp.charpoly = charpoly(s);
    fp.rank_s_minus_id = rank(nil);
    fp.smith_s_minus_id = smith_invariants(nil);
    fp.smith_s_minus_id_squared = smith_invariants(nil * nil);
    fp.smith_symmetrized = smith_invariants(m.matrix() + m.matrix().transpose());
    return fp;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

std::size_t upper_count(std::size_t n) { return n * (n - 1) / 2; }

GramMatrix from_packed(std::size_t n, std::span<const std::int64_t> upper)
{
    std::vector<Integer> big;
    big.reserve(upper.size());
    for (const auto x : upper) {
        big.emplace_back(static_cast<long>(x));
    }
    return GramMatrix::from_upper(n, big);
}

// Lexicographic odometer over [-bound, bound]^k starting at position `from`.
bool advance(std::vector<std::int64_t>& v, std::size_t from, long bound)
{
    for (std::size_t i = v.size(); i-- > from;) {
        if (v[i] < bound) {
            ++v[i];
            return true;
        }
        v[i] = -bound;
    }
    return false;
}

void check_enumeration_args(std::size_t n, long bound)
{
    if (n < 1 || n > kernels::max_rank) {
        throw std::invalid_argument("enumerate_solutions: rank must be in 1.." + std::to_string(kernels::max_rank));
    }
    if (bound < 0) {
        throw std::invalid_argument("enumerate_solutions: bound must be nonnegative");
    }
}

} // namespace

std::vector<GramMatrix> enumerate_solutions(std::size_t n, long bound, std::size_t required_rank)
{
    check_enumeration_args(n, bound);
    const std::size_t k = upper_count(n);
    if (k == 0) {
        return enumerate_solutions_serial(n, bound, required_rank);
    }

    const auto shards = static_cast<std::int64_t>(2 * bound + 1);
    std::vector<std::vector<GramMatrix>> found(static_cast<std::size_t>(shards));

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t shard = 0; shard < shards; ++shard) {
        std::vector<std::int64_t> v(k, -bound);
        v[0] = -bound + shard;
        auto& out = found[static_cast<std::size_t>(shard)];
        do {
            const auto screen = kernels::screen_surface_type(v, n, required_rank);
            if (screen == kernels::Screen::fail) {
                continue;
            }
            GramMatrix m = from_packed(n, v);
            if (check_surface_type(m, required_rank).passes_surface_type) {
                out.push_back(std::move(m));
            }
        } while (advance(v, 1, bound));
    }

    std::vector<GramMatrix> all;
    for (auto& shard : found) {
        for (auto& m : shard) {
            all.push_back(std::move(m));
        }
    }
    return all;
}

std::vector<GramMatrix> enumerate_solutions_serial(std::size_t n, long bound, std::size_t required_rank)
{
    check_enumeration_args(n, bound);
    std::vector<GramMatrix> out;
    std::vector<std::int64_t> v(upper_count(n), -bound);
    do {
        GramMatrix m = from_packed(n, v);
        if (check_surface_type(m, required_rank).passes_surface_type) {
            out.push_back(std::move(m));
        }
    } while (advance(v, 0, bound));
    return out;
}

// ---------------------------------------------------------------------------
// capped orbits

namespace {

std::optional<std::vector<std::int64_t>> pack(const GramMatrix& m)
{
    std::vector<std::int64_t> out;
    for (const auto& x : m.upper_entries()) {
        if (!x.fits_slong_p()) {
            return std::nullopt;
        }
        out.push_back(x.get_si());
    }
    return out;
}

std::int64_t max_abs(std::span<const std::int64_t> v)
{
    std::int64_t best = 0;
    for (const auto x : v) {
        best = std::max(best, x < 0 ? -x : x);
    }
    return best;
}

bool within_cap(std::span<const std::int64_t> v, std::int64_t cap)
{
    return std::all_of(v.begin(), v.end(), [cap](std::int64_t x) { return x <= cap && x >= -cap; });
}

} // namespace

std::size_t CappedOrbit::Hash::operator()(Key k) const
{
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto x : k) {
        h ^= static_cast<std::uint64_t>(x);
        h *= 1099511628211ULL;
        h ^= h >> 29U;
    }
    return static_cast<std::size_t>(h);
}

bool CappedOrbit::Equal::operator()(Key a, Key b) const { return std::equal(a.begin(), a.end(), b.begin(), b.end()); }

std::optional<std::size_t> CappedOrbit::find_packed(std::span<const std::int64_t> key) const
{
    const auto it = index_.find(key);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return *it;
}

// Caller guarantees the key is not present.
void CappedOrbit::push(Key key, std::uint32_t parent, std::uint8_t via, std::uint32_t depth)
{
    const std::size_t idx = parent_.size();
    states_.insert(states_.end(), key.begin(), key.end());
    parent_.push_back(parent);
    via_.push_back(via);
    depth_.push_back(depth);
    index_.insert(static_cast<std::uint32_t>(idx));
}

// BFS driver shared by CappedOrbit and the bidirectional search.
class OrbitSearch {
public:
    OrbitSearch(CappedOrbit& orbit, const SearchParams& params, std::size_t depth_limit, std::size_t state_limit)
        : orbit_(orbit),
          // a root above the cap may still descend, so the cap never excludes it
          cap_(std::max<std::int64_t>(params.entry_cap_orbit, max_abs(orbit.packed(0)))),
          depth_limit_(depth_limit), state_limit_(state_limit)
    {
    }

    bool exhausted() const { return head_ >= orbit_.size(); }

    /// Expands the next queued state. Returns false once the state budget is hit.
    bool step()
    {
        const std::size_t i = head_++;
        const std::size_t stride = orbit_.stride_;
        std::vector<std::int64_t> cur(orbit_.packed(i).begin(), orbit_.packed(i).end());
        std::vector<std::int64_t> next(stride);
        const bool at_depth_limit = orbit_.depth_[i] >= depth_limit_;
        for (std::size_t g = 0; g < orbit_.gens_.size(); ++g) {
            if (!kernels::apply_generator_packed(cur, orbit_.n_, orbit_.gens_[g], next) || !within_cap(next, cap_)) {
                continue;
            }
            if (orbit_.find_packed(next)) {
                continue;
            }
            if (at_depth_limit) {
                orbit_.complete_ = false;
                continue;
            }
            if (orbit_.size() >= state_limit_) {
                orbit_.complete_ = false;
                return false;
            }
            orbit_.push(next, static_cast<std::uint32_t>(i), static_cast<std::uint8_t>(g), orbit_.depth_[i] + 1);
        }
        return true;
    }

private:
    CappedOrbit& orbit_;
    std::int64_t cap_;
    std::size_t depth_limit_;
    std::size_t state_limit_;
    std::size_t head_ = 0;
};

CappedOrbit::CappedOrbit(const GramMatrix& root, SeedOnly)
    : n_(root.rank()), stride_(upper_count(root.rank())), gens_(all_generators(root.rank())),
      index_(64, Hash{this}, Equal{this})
{
    const auto key = pack(root);
    if (!key) {
        throw std::out_of_range("CappedOrbit: root entries exceed 64-bit range");
    }
    push(*key, 0, 0, 0);
}

CappedOrbit::CappedOrbit(const GramMatrix& root, const SearchParams& params) : CappedOrbit(root, SeedOnly{})
{
    params.validate();
    OrbitSearch bfs(*this, params, params.max_word_length, params.max_orbit_size);
    while (!bfs.exhausted()) {
        if (!bfs.step()) {
            break;
        }
    }
}

GramMatrix CappedOrbit::state(std::size_t index) const { return from_packed(n_, packed(index)); }

std::optional<std::size_t> CappedOrbit::find(const GramMatrix& m) const
{
    if (m.rank() != n_) {
        return std::nullopt;
    }
    const auto key = pack(m);
    if (!key) {
        return std::nullopt;
    }
    return find_packed(*key);
}

BraidWord CappedOrbit::word_to(std::size_t index) const
{
    BraidWord w{n_, {}};
    // walking up the tree yields generators in textual order (last applied first)
    for (std::size_t i = index; i != 0; i = parent_[i]) {
        w.generators.push_back(gens_[via_[i]]);
    }
    return w;
}

// ---------------------------------------------------------------------------

namespace {

bool canonical_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b)
{
    const auto ma = max_abs(a);
    const auto mb = max_abs(b);
    if (ma != mb) {
        return ma < mb;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

OrbitCertificate canonical_form(const GramMatrix& m, const SearchParams& params)
{
    params.validate();
    OrbitCertificate cert{m, BraidWord{m.rank(), {}}, fingerprint(m), 1};
    if (!pack(m)) {
        throw BudgetExhausted("canonical_form: entries exceed 64-bit range", cert);
    }
    const CappedOrbit orbit(m, params);
    std::size_t best = 0;
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        if (canonical_less(orbit.packed(i), orbit.packed(best))) {
            best = i;
        }
    }
    cert.representative = orbit.state(best);
    cert.witness_word = orbit.word_to(best);
    cert.states_explored = orbit.size();
    if (!(apply_word(m, cert.witness_word) == cert.representative)) {
        throw std::logic_error("canonical_form: witness does not replay");
    }
    if (!orbit.complete()) {
        throw BudgetExhausted("canonical_form: orbit budget exhausted after " + std::to_string(orbit.size()) +
                                  " states",
                              cert);
    }
    return cert;
}

std::string to_string(EquivalenceResult::Verdict v)
{
    switch (v) {
    case EquivalenceResult::Verdict::equivalent:
        return "equivalent";
    case EquivalenceResult::Verdict::distinguished_by_invariant:
        return "distinguished-by-invariant";
    case EquivalenceResult::Verdict::inconclusive:
        break;
    }
    return "inconclusive";
}

class BidirectionalSearch {
public:
    static EquivalenceResult run(const GramMatrix& m1, const GramMatrix& m2, const SearchParams& params)
    {
        EquivalenceResult res;
        const auto k1 = pack(m1);
        const auto k2 = pack(m2);
        if (!k1 || !k2) {
            return res;
        }
        CappedOrbit a(m1, CappedOrbit::SeedOnly{});
        CappedOrbit b(m2, CappedOrbit::SeedOnly{});

        const std::size_t half_depth = (params.max_word_length + 1) / 2;
        OrbitSearch sa(a, params, half_depth, params.max_orbit_size);
        OrbitSearch sb(b, params, half_depth, params.max_orbit_size);

        auto meet = [&](CappedOrbit& from, CappedOrbit& other, std::size_t first_new) -> std::optional<std::pair<std::size_t, std::size_t>> {
            for (std::size_t i = first_new; i < from.size(); ++i) {
                if (const auto j = other.find_packed(from.packed(i))) {
                    return std::make_pair(i, *j);
                }
            }
            return std::nullopt;
        };

        std::optional<std::pair<std::size_t, std::size_t>> hit; // (index in a, index in b)
        if (const auto j = b.find_packed(a.packed(0))) {
            hit = std::make_pair(std::size_t{0}, *j);
        }
        while (!hit && (!sa.exhausted() || !sb.exhausted()) && a.size() + b.size() < params.max_orbit_size) {
            // expand the smaller side
            const bool use_a = !sa.exhausted() && (sb.exhausted() || a.size() <= b.size());
            CappedOrbit& from = use_a ? a : b;
            CappedOrbit& other = use_a ? b : a;
            OrbitSearch& s = use_a ? sa : sb;
            const std::size_t before = from.size();
            if (!s.step()) {
                break;
            }
            if (auto h = meet(from, other, before)) {
                hit = use_a ? *h : std::make_pair(h->second, h->first);
            }
        }
        res.states_explored = a.size() + b.size();
        if (!hit) {
            return res;
        }
        const BraidWord to_mid = a.word_to(hit->first);
        const BraidWord from_m2_to_mid = b.word_to(hit->second);
        BraidWord w = compose(from_m2_to_mid.inverse(), to_mid);
        if (!(apply_word(m1, w) == m2)) {
            throw std::logic_error("equivalent: witness does not replay");
        }
        res.verdict = EquivalenceResult::Verdict::equivalent;
        res.witness = std::move(w);
        return res;
    }
};

EquivalenceResult equivalent(const GramMatrix& m1, const GramMatrix& m2, const SearchParams& params)
{
    params.validate();
    if (m1.rank() != m2.rank()) {
        throw std::invalid_argument("equivalent: rank mismatch (" + std::to_string(m1.rank()) + " vs " +
                                    std::to_string(m2.rank()) + ")");
    }
    EquivalenceResult res;
    if (m1 == m2) {
        res.verdict = EquivalenceResult::Verdict::equivalent;
        res.witness = BraidWord{m1.rank(), {}};
        return res;
    }
    if (!(fingerprint(m1) == fingerprint(m2))) {
        res.verdict = EquivalenceResult::Verdict::distinguished_by_invariant;
        return res;
    }
    return BidirectionalSearch::run(m1, m2, params);
}

// ---------------------------------------------------------------------------
// classification

std::string to_string(ClassVerdict v)
{
    switch (v) {
    case ClassVerdict::connected_to_p2:
        return "connected-to-P2";
    case ClassVerdict::connected_to_quadric:
        return "connected-to-A";
    case ClassVerdict::connected_to_family:
        return "connected-to-B_m";
    case ClassVerdict::unresolved:
        break;
    }
    return "unresolved";
}

std::size_t ClassificationReport::unresolved() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const ClassifiedMatrix& r) {
        return r.verdict == ClassVerdict::unresolved;
    }));
}

namespace {

struct Target {
    GramMatrix matrix;
    ClassVerdict verdict;
    std::optional<long> m;
};

// For B_m the content of (s - id)^2 is |m^2 - 9|, so a bucket with content c
// can only hold B_m with m <= sqrt(c + 9).
long family_cap(const std::vector<Fingerprint>& buckets)
{
    Integer cmax = 0;
    for (const auto& fp : buckets) {
        if (!fp.smith_s_minus_id_squared.empty()) {
            cmax = std::max(cmax, fp.smith_s_minus_id_squared.front());
        }
    }
    Integer r;
    Integer arg = cmax + 9;
    mpz_sqrt(r.get_mpz_t(), arg.get_mpz_t());
    return r.get_si();
}

} // namespace

ClassificationReport classify_solutions(std::size_t n, long bound, const SearchParams& params)
{
    params.validate();
    ClassificationReport report;
    report.n = n;
    report.bound = bound;
    report.params = params;

    for (auto& m : enumerate_solutions(n, bound)) {
        ClassifiedMatrix rec{std::move(m), {}, ClassVerdict::unresolved, std::nullopt, std::nullopt, 0};
        rec.fingerprint = fingerprint(rec.matrix);
        report.records.push_back(std::move(rec));
    }
    for (const auto& r : report.records) {
        report.buckets.push_back(r.fingerprint);
    }
    std::sort(report.buckets.begin(), report.buckets.end());
    report.buckets.erase(std::unique(report.buckets.begin(), report.buckets.end()), report.buckets.end());
    for (auto& r : report.records) {
        r.bucket = static_cast<std::size_t>(
            std::lower_bound(report.buckets.begin(), report.buckets.end(), r.fingerprint) - report.buckets.begin());
    }

    std::vector<Target> targets;
    if (n == 3) {
        targets.push_back({gram_p2(), ClassVerdict::connected_to_p2, std::nullopt});
    } else if (n == 4) {
        targets.push_back({gram_quadric(), ClassVerdict::connected_to_quadric, std::nullopt});
        report.family_cap = family_cap(report.buckets);
        for (long m = 0; m <= report.family_cap; ++m) {
            targets.push_back({gram_family(m), ClassVerdict::connected_to_family, m});
        }
    }

    for (const auto& t : targets) {
        const Fingerprint tfp = fingerprint(t.matrix);
        const bool wanted = std::any_of(report.records.begin(), report.records.end(), [&](const ClassifiedMatrix& r) {
            return r.verdict == ClassVerdict::unresolved && r.fingerprint == tfp;
        });
        if (!wanted) {
            continue;
        }
        const CappedOrbit orbit(t.matrix, params);
        for (auto& r : report.records) {
            if (r.verdict != ClassVerdict::unresolved || !(r.fingerprint == tfp)) {
                continue;
            }
            const auto idx = orbit.find(r.matrix);
            if (!idx) {
                continue;
            }
            BraidWord w = orbit.word_to(*idx).inverse();
            if (!(apply_word(r.matrix, w) == t.matrix)) {
                throw std::logic_error("classify: witness does not replay");
            }
            r.verdict = t.verdict;
            r.family_m = t.m;
            r.witness = std::move(w);
        }
    }
    return report;
}

ClassificationReport classify_rank4(long bound, const SearchParams& params)
{
    return classify_solutions(4, bound, params);
}

std::ostream& operator<<(std::ostream& os, const ClassificationReport& r)
{
    os << "rank " << r.n << ", entry bound " << r.bound << ": " << r.records.size() << " surface-type matrices in "
       << r.buckets.size() << " invariant buckets\n";
    for (std::size_t b = 0; b < r.buckets.size(); ++b) {
        std::map<std::string, std::size_t> tally;
        std::size_t members = 0;
        for (const auto& rec : r.records) {
            if (rec.bucket != b) {
                continue;
            }
            ++members;
            std::string key = to_string(rec.verdict);
            if (rec.family_m) {
                key = "connected-to-B_" + std::to_string(*rec.family_m);
            }
            ++tally[key];
        }
        os << "bucket " << b << " (" << members << " matrices): " << r.buckets[b].str() << '\n';
        for (const auto& [k, c] : tally) {
            os << "  " << k << ": " << c << '\n';
        }
    }
    os << "unresolved: " << r.unresolved() << '\n';
    for (const auto& rec : r.records) {
        if (rec.verdict == ClassVerdict::unresolved) {
            os << "  unresolved matrix, upper entries [" << join(rec.matrix.upper_entries()) << "]\n";
        }
    }
    return os;
}

} // namespace ncsurf
