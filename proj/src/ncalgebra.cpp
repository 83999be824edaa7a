#include "ncsurf/ncalgebra.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <utility>

namespace ncsurf {

QuadraticPresentation::QuadraticPresentation(std::size_t num_generators, std::vector<RatMatrix> relations)
    : g_(num_generators), relations_(std::move(relations))
{
    if (g_ == 0) {
        throw std::invalid_argument("quadratic presentation needs at least one generator");
    }
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        if (relations_[r].size() != g_) {
            throw std::invalid_argument("relation " + std::to_string(r + 1) + " is not a " + std::to_string(g_) +
                                        "x" + std::to_string(g_) + " coefficient array");
        }
        if (relations_[r].is_zero()) {
            throw std::invalid_argument("relation " + std::to_string(r + 1) + " is zero");
        }
    }
}

QuadraticPresentation QuadraticPresentation::from_triples(
    std::size_t num_generators,
    const std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>>& relations)
{
    std::vector<RatMatrix> rels;
    for (const auto& triples : relations) {
        RatMatrix r(num_generators);
        for (const auto& [u, v, c] : triples) {
            if (u >= num_generators || v >= num_generators) {
                throw std::invalid_argument("relation term (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") references a generator outside 0.." +
                                            std::to_string(num_generators - 1));
            }
            r(u, v) += c;
        }
        rels.push_back(std::move(r));
    }
    return {num_generators, std::move(rels)};
}

QuadraticPresentation QuadraticPresentation::polynomial_ring(std::size_t num_generators)
{
    std::vector<RatMatrix> rels;
    for (std::size_t u = 0; u < num_generators; ++u) {
        for (std::size_t v = u + 1; v < num_generators; ++v) {
            RatMatrix r(num_generators);
            r(u, v) = 1;
            r(v, u) = -1;
            rels.push_back(std::move(r));
        }
    }
    return {num_generators, std::move(rels)};
}

QuadraticPresentation QuadraticPresentation::with_relation(RatMatrix relation) const
{
    std::vector<RatMatrix> rels = relations_;
    rels.push_back(std::move(relation));
    return {g_, std::move(rels)};
}

namespace {

struct ModP {
    static constexpr std::uint64_t p = 2147483647ULL;
    std::uint64_t v = 0;

    static ModP from(const Rational& q)
    {
        auto reduce = [](const Integer& z) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
            return r.get_ui();
        };
        const std::uint64_t den = reduce(q.get_den());
        if (den == 0) {
            throw std::domain_error("coefficient " + q.get_str() + " has a denominator divisible by the screening prime");
        }
        return ModP{reduce(q.get_num())} * ModP{den}.inverse();
    }

    bool is_zero() const { return v == 0; }
    friend ModP operator*(ModP a, ModP b) { return {a.v * b.v % p}; }
    friend ModP operator-(ModP a, ModP b) { return {(a.v + p - b.v) % p}; }
    ModP inverse() const
    {
        std::uint64_t result = 1;
        std::uint64_t base = v;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1U) {
            if (e & 1U) {
                result = result * base % p;
            }
            base = base * base % p;
        }
        return {result};
    }
};

struct QField {
    Rational v;
    static QField from(const Rational& q) { return {q}; }
    bool is_zero() const { return v == 0; }
    friend QField operator*(const QField& a, const QField& b) { return {a.v * b.v}; }
    friend QField operator-(const QField& a, const QField& b) { return {a.v - b.v}; }
    QField inverse() const { return {1 / v}; }
};

template <typename F>
using SparseRow = std::vector<std::pair<std::size_t, F>>;

// Incremental row echelon form keyed by leading column.
template <typename F>
class Echelon {
public:
    explicit Echelon(std::size_t cols) : pivots_(cols) {}

    void insert(SparseRow<F> row)
    {
        while (!row.empty()) {
            const std::size_t lead = row.front().first;
            auto& piv = pivots_[lead];
            if (!piv) {
                const F inv = row.front().second.inverse();
                for (auto& [c, x] : row) {
                    x = x * inv;
                }
                piv = std::move(row);
                ++rank_;
                return;
            }
            row = subtract(row, row.front().second, *piv);
        }
    }

    std::size_t rank() const { return rank_; }

private:
    // row - f * pivot, dropping zeros
    static SparseRow<F> subtract(const SparseRow<F>& row, const F& f, const SparseRow<F>& pivot)
    {
        SparseRow<F> out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, F{} - f * pivot[j].second);
                ++j;
            } else {
                F x = row[i].second - f * pivot[j].second;
                if (!x.is_zero()) {
                    out.emplace_back(row[i].first, std::move(x));
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<std::optional<SparseRow<F>>> pivots_;
    std::size_t rank_ = 0;
};

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > budget / base) {
            throw ResourceBudgetError("graded_dims: " + std::to_string(base) + "^" + std::to_string(exp) +
                                      " monomials exceed the budget of " + std::to_string(budget));
        }
        r *= base;
    }
    return r;
}

template <typename F>
std::size_t ideal_dimension(const QuadraticPresentation& p, std::size_t d)
{
    const std::size_t g = p.num_generators();
    std::vector<SparseRow<F>> rels;
    for (const auto& r : p.relations()) {
        SparseRow<F> row;
        for (std::size_t u = 0; u < g; ++u) {
            for (std::size_t v = 0; v < g; ++v) {
                if (r(u, v) != 0) {
                    F x = F::from(r(u, v));
                    if (!x.is_zero()) {
                        row.emplace_back(u * g + v, std::move(x));
                    }
                }
            }
        }
        rels.push_back(std::move(row));
    }

    std::size_t cols = 1;
    for (std::size_t i = 0; i < d; ++i) {
        cols *= g;
    }
    Echelon<F> ech(cols);
    for (std::size_t i = 0; i + 2 <= d; ++i) {
        std::size_t left_count = 1;
        for (std::size_t t = 0; t < i; ++t) {
            left_count *= g;
        }
        std::size_t right_count = 1;
        for (std::size_t t = 0; t < d - 2 - i; ++t) {
            right_count *= g;
        }
        for (const auto& rel : rels) {
            for (std::size_t left = 0; left < left_count; ++left) {
                for (std::size_t right = 0; right < right_count; ++right) {
                    // monomial index in base g, most significant letter first
                    SparseRow<F> row;
                    row.reserve(rel.size());
                    for (const auto& [uv, c] : rel) {
                        row.emplace_back((left * g * g + uv) * right_count + right, c);
                    }
                    ech.insert(std::move(row));
                }
            }
        }
    }
    return ech.rank();
}

} // namespace

std::vector<std::size_t> graded_dims(const QuadraticPresentation& p, std::size_t max_degree, RankMode mode,
                                     std::size_t monomial_budget)
{
    const std::size_t g = p.num_generators();
    checked_power(g, max_degree, monomial_budget);
    std::vector<std::size_t> dims;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        const std::size_t total = checked_power(g, d, monomial_budget);
        if (d < 2) {
            dims.push_back(total);
            continue;
        }
        const std::size_t ideal =
            mode == RankMode::rational ? ideal_dimension<QField>(p, d) : ideal_dimension<ModP>(p, d);
        dims.push_back(total - ideal);
    }
    return dims;
}

QuadraticPresentation sklyanin(const Rational& a, const Rational& b, const Rational& c)
{
    if (a == 0 && b == 0 && c == 0) {
        throw std::invalid_argument("sklyanin: parameters (a, b, c) must not all be zero");
    }
    constexpr std::size_t x = 0;
    constexpr std::size_t y = 1;
    constexpr std::size_t z = 2;
    auto rel = [&](std::size_t u, std::size_t v, std::size_t w) {
        RatMatrix r(3);
        r(u, v) += a;
        r(v, u) += b;
        r(w, w) += c;
        return r;
    };
    return {3, {rel(x, y, z), rel(y, z, x), rel(z, x, y)}};
}

std::uint64_t fat_point_multiplicity(FatPointSpec spec)
{
    const std::uint64_t n = spec.automorphism_order;
    if (n == 0) {
        throw std::invalid_argument("fat_point_multiplicity: automorphism order must be positive");
    }
    return std::gcd(n, std::uint64_t{3}) == 1 ? n : n / 3;
}

GramMatrix gram_p2() { return GramMatrix(IntMatrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}}); }

GramMatrix gram_quadric() { return GramMatrix(IntMatrix{{1, 2, 2, 4}, {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}}); }

namespace {

void require_nonnegative(long m, const char* what)
{
    if (m < 0) {
        throw std::invalid_argument(std::string(what) + ": m must be nonnegative, got " + std::to_string(m));
    }
}

} // namespace

GramMatrix gram_family(long m)
{
    require_nonnegative(m, "gram_family");
    const Integer mm = m;
    return GramMatrix(IntMatrix{{1, mm, 2 * mm, mm}, {0, 1, 3, 3}, {0, 0, 1, 3}, {0, 0, 0, 1}});
}

GramMatrix gram_family_blowup(long m)
{
    require_nonnegative(m, "gram_family_blowup");
    const Integer mm = m;
    return GramMatrix(IntMatrix{{1, 3, 6, mm}, {0, 1, 3, mm}, {0, 0, 1, mm}, {0, 0, 0, 1}});
}

GramMatrix extended_gram(std::uint64_t s, const QuadraticPresentation& algebra)
{
    if (s == 0) {
        throw std::invalid_argument("extended_gram: fat point multiplicity must be positive");
    }
    // Hom(S_i, S_j) = A_{j-i}; Hom(S_i, F) = s; no backward Homs, no higher Ext.
    const std::vector<std::size_t> hilbert = graded_dims(algebra, 2);
    IntMatrix m = IntMatrix::identity(4);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            m(i, j) = static_cast<unsigned long>(hilbert[j - i]);
        }
        m(i, 3) = static_cast<unsigned long>(s);
    }
    GramMatrix g(std::move(m));
    if (!(g == gram_family_blowup(static_cast<long>(s)))) {
        throw std::logic_error("extended_gram: dimension counts do not reproduce B'_s");
    }
    return g;
}

} // namespace ncsurf
