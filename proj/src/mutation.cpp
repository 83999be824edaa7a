#include "ncsurf/mutation.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <utility>

#include "ncsurf/rng.hpp"

namespace ncsurf {

bool BraidGenerator::valid_for(std::size_t rank) const
{
    if (index < 1) {
        return false;
    }
    return kind == Kind::epsilon ? index <= rank : index + 1 <= rank;
}

BraidGenerator BraidGenerator::inverse() const
{
    switch (kind) {
    case Kind::sigma:
        return sigma_inv(index);
    case Kind::sigma_inverse:
        return sigma(index);
    case Kind::epsilon:
        break;
    }
    return *this;
}

std::string BraidGenerator::str() const
{
    const char c = kind == Kind::sigma ? 's' : kind == Kind::sigma_inverse ? 'S' : 'e';
    return c + std::to_string(index);
}

BraidWord BraidWord::inverse() const
{
    BraidWord inv{rank, {}};
    inv.generators.reserve(generators.size());
    for (auto it = generators.rbegin(); it != generators.rend(); ++it) {
        inv.generators.push_back(it->inverse());
    }
    return inv;
}

std::string BraidWord::str() const
{
    std::string out;
    for (const auto& g : generators) {
        if (!out.empty()) {
            out += ' ';
        }
        out += g.str();
    }
    return out;
}

BraidWord compose(const BraidWord& after, const BraidWord& first)
{
    if (after.rank != first.rank) {
        throw std::invalid_argument("compose: rank mismatch");
    }
    BraidWord w{after.rank, after.generators};
    w.generators.insert(w.generators.end(), first.generators.begin(), first.generators.end());
    return w;
}

std::vector<BraidGenerator> all_generators(std::size_t rank)
{
    std::vector<BraidGenerator> gens;
    for (std::size_t i = 1; i < rank; ++i) {
        gens.push_back(BraidGenerator::sigma(i));
    }
    for (std::size_t i = 1; i < rank; ++i) {
        gens.push_back(BraidGenerator::sigma_inv(i));
    }
    for (std::size_t i = 1; i <= rank; ++i) {
        gens.push_back(BraidGenerator::epsilon(i));
    }
    return gens;
}

namespace {

void check_generator(const BraidGenerator& g, std::size_t rank)
{
    if (!g.valid_for(rank)) {
        throw GeneratorRangeError("generator " + g.str() + " is out of range for rank " + std::to_string(rank));
    }
}

// Replaces columns (k, k+1) by (c_{k+1} + x c_k, c_k) when `left`, or by
// (c_{k+1}, c_k + x c_{k+1}) otherwise; then the same on rows. This is
// M -> P^t M P for the sigma / sigma^{-1} basis changes.
void mutate_pair(IntMatrix& m, std::size_t k, const Integer& x, bool left)
{
    const std::size_t n = m.size();
    for (std::size_t r = 0; r < n; ++r) {
        Integer ck = m(r, k);
        Integer ck1 = m(r, k + 1);
        if (left) {
            m(r, k) = ck1 + x * ck;
            m(r, k + 1) = std::move(ck);
        } else {
            m(r, k) = ck1;
            m(r, k + 1) = ck + x * ck1;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        Integer rk = m(k, c);
        Integer rk1 = m(k + 1, c);
        if (left) {
            m(k, c) = rk1 + x * rk;
            m(k + 1, c) = std::move(rk);
        } else {
            m(k, c) = rk1;
            m(k + 1, c) = rk + x * rk1;
        }
    }
}

} // namespace

GramMatrix apply_generator(const GramMatrix& gm, BraidGenerator g)
{
    check_generator(g, gm.rank());
    IntMatrix m = gm.matrix();
    const std::size_t k = g.index - 1;
    switch (g.kind) {
    case BraidGenerator::Kind::sigma: {
        const Integer a = m(k, k + 1);
        mutate_pair(m, k, -a, true);
        break;
    }
    case BraidGenerator::Kind::sigma_inverse: {
        const Integer b = m(k, k + 1);
        mutate_pair(m, k, -b, false);
        break;
    }
    case BraidGenerator::Kind::epsilon:
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j != k) {
                m(k, j) = -m(k, j);
                m(j, k) = -m(j, k);
            }
        }
        break;
    }
    return GramMatrix(std::move(m));
}

GramMatrix apply_word(const GramMatrix& m, const BraidWord& w)
{
    if (w.rank != m.rank()) {
        throw std::invalid_argument("apply_word: word rank " + std::to_string(w.rank) + " does not match matrix rank " +
                                    std::to_string(m.rank()));
    }
    GramMatrix cur = m;
    for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) {
        cur = apply_generator(cur, *it);
    }
    return cur;
}

std::vector<GramMatrix> trace_word(const GramMatrix& m, const BraidWord& w)
{
    if (w.rank != m.rank()) {
        throw std::invalid_argument("trace_word: rank mismatch");
    }
    std::vector<GramMatrix> steps;
    GramMatrix cur = m;
    for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) {
        cur = apply_generator(cur, *it);
        steps.push_back(cur);
    }
    return steps;
}

BraidWord parse_word(std::string_view text, std::size_t rank)
{
    BraidWord w{rank, {}};
    std::istringstream in{std::string(text)};
    std::string tok;
    std::size_t pos = 0;
    while (in >> tok) {
        ++pos;
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S' && tok[0] != 'e') ||
            !std::all_of(tok.begin() + 1, tok.end(), [](unsigned char c) { return std::isdigit(c) != 0; }) ||
            tok.size() > 8) {
            throw WordParseError("malformed generator '" + tok + "' at token " + std::to_string(pos), pos);
        }
        BraidGenerator g;
        g.kind = tok[0] == 's'   ? BraidGenerator::Kind::sigma
                 : tok[0] == 'S' ? BraidGenerator::Kind::sigma_inverse
                                 : BraidGenerator::Kind::epsilon;
        g.index = std::stoul(tok.substr(1));
        if (!g.valid_for(rank)) {
            throw GeneratorRangeError("generator '" + tok + "' at token " + std::to_string(pos) +
                                      " is out of range for rank " + std::to_string(rank));
        }
        w.generators.push_back(g);
    }
    return w;
}

GramMatrix random_gram(std::size_t n, long bound, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Integer> upper(n * (n - 1) / 2);
    for (auto& x : upper) {
        x = dist(rng);
    }
    return GramMatrix::from_upper(n, upper);
}

BraidWord random_word(std::size_t rank, std::size_t length, std::uint64_t seed)
{
    const auto gens = all_generators(rank);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, gens.size() - 1);
    BraidWord w{rank, {}};
    for (std::size_t k = 0; k < length; ++k) {
        w.generators.push_back(gens[dist(rng)]);
    }
    return w;
}

namespace {

struct Relation {
    std::string name;
    BraidWord lhs;
    BraidWord rhs;
};

std::vector<Relation> signed_braid_relations(std::size_t n)
{
    using G = BraidGenerator;
    auto word = [n](std::initializer_list<G> gs) { return BraidWord{n, gs}; };
    std::vector<Relation> rels;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            rels.push_back({G::sigma(i).str() + G::sigma(j).str() + "=" + G::sigma(j).str() + G::sigma(i).str(),
                            word({G::sigma(i), G::sigma(j)}), word({G::sigma(j), G::sigma(i)})});
        }
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        rels.push_back({"braid " + std::to_string(i), word({G::sigma(i), G::sigma(i + 1), G::sigma(i)}),
                        word({G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)})});
    }
    for (std::size_t i = 1; i <= n; ++i) {
        rels.push_back({G::epsilon(i).str() + "^2=1", word({G::epsilon(i), G::epsilon(i)}), word({})});
        for (std::size_t j = i + 1; j <= n; ++j) {
            rels.push_back({G::epsilon(i).str() + G::epsilon(j).str() + "=" + G::epsilon(j).str() +
                                G::epsilon(i).str(),
                            word({G::epsilon(i), G::epsilon(j)}), word({G::epsilon(j), G::epsilon(i)})});
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        rels.push_back({G::epsilon(i).str() + G::sigma(i).str() + G::epsilon(i + 1).str() + "=" + G::sigma(i).str(),
                        word({G::epsilon(i), G::sigma(i), G::epsilon(i + 1)}), word({G::sigma(i)})});
        rels.push_back({G::sigma(i).str() + G::sigma_inv(i).str() + "=1", word({G::sigma(i), G::sigma_inv(i)}),
                        word({})});
        rels.push_back({G::sigma_inv(i).str() + G::sigma(i).str() + "=1", word({G::sigma_inv(i), G::sigma(i)}),
                        word({})});
    }
    return rels;
}

} // namespace

RelationReport verify_braid_relations(std::size_t n, std::size_t trials, long entry_bound, std::uint64_t seed)
{
    if (n < 2) {
        throw std::invalid_argument("verify_braid_relations: rank must be at least 2");
    }
    const auto rels = signed_braid_relations(n);
    RelationReport report;
    report.n = n;
    report.trials = trials;
    report.checks = trials * rels.size();

    // lowest failing trial index, or trials if none
    const auto count = static_cast<std::int64_t>(trials);
    std::vector<int> failed_rel(trials, -1);

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < count; ++t) {
        const GramMatrix m = random_gram(n, entry_bound, trial_seed(seed, static_cast<std::uint64_t>(t)));
        for (std::size_t r = 0; r < rels.size(); ++r) {
            if (!(apply_word(m, rels[r].lhs) == apply_word(m, rels[r].rhs))) {
                failed_rel[static_cast<std::size_t>(t)] = static_cast<int>(r);
                break;
            }
        }
    }

    for (std::size_t t = 0; t < trials; ++t) {
        if (failed_rel[t] >= 0) {
            report.passed = false;
            report.first_failure = RelationFailure{t, rels[static_cast<std::size_t>(failed_rel[t])].name,
                                                   random_gram(n, entry_bound, trial_seed(seed, t))};
            break;
        }
    }
    return report;
}

} // namespace ncsurf
