#include "ncsurf/eulerform.hpp"

#include <ostream>
#include <string>

namespace ncsurf {

GramMatrix::GramMatrix(IntMatrix m) : m_(std::move(m))
{
    const std::size_t n = m_.size();
    if (n == 0) {
        throw InvalidGramMatrix("Gram matrix must have positive rank");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m_(i, i) != 1) {
            throw InvalidGramMatrix("Gram matrix diagonal entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(i + 1) + ") is " + m_(i, i).get_str() + ", expected 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (m_(i, j) != 0) {
                throw InvalidGramMatrix("Gram matrix entry (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") below the diagonal is nonzero");
            }
        }
    }
}

GramMatrix GramMatrix::from_upper(std::size_t n, const std::vector<Integer>& upper)
{
    if (upper.size() != n * (n - 1) / 2) {
        throw InvalidGramMatrix("expected " + std::to_string(n * (n - 1) / 2) + " upper entries for rank " +
                                std::to_string(n));
    }
    IntMatrix m = IntMatrix::identity(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = upper[k++];
        }
    }
    return GramMatrix(std::move(m));
}

std::vector<Integer> GramMatrix::upper_entries() const
{
    const std::size_t n = rank();
    std::vector<Integer> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back(m_(i, j));
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GramMatrix& m) { return os << m.matrix(); }

IntMatrix serre_matrix(const GramMatrix& m)
{
    RatMatrix s = inverse(m.matrix()) * to_rational(m.matrix().transpose());
    try {
        return to_integer(s);
    } catch (const std::domain_error&) {
        // det M = 1 makes M^{-1} integral; reaching this is a bug
        throw std::logic_error("serre_matrix: non-integral Serre matrix for a unimodular Gram matrix");
    }
}

IntMatrix coxeter(const GramMatrix& m) { return -serre_matrix(m); }

SerreReport check_surface_type(const GramMatrix& m, std::size_t required_rank)
{
    SerreReport r;
    r.required_rank = required_rank;
    r.nondegenerate = det(m.matrix()) != 0;
    if (!r.nondegenerate) {
        return r;
    }
    IntMatrix n = serre_matrix(m) - IntMatrix::identity(m.rank());
    r.unipotent = is_nilpotent(n);
    r.rank_s_minus_id = rank(n);
    r.passes_surface_type = r.nondegenerate && r.unipotent && r.rank_s_minus_id == required_rank;
    return r;
}

std::ostream& operator<<(std::ostream& os, const SerreReport& r)
{
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "nondegenerate: " << yn(r.nondegenerate) << '\n'
       << "unipotent (s - id nilpotent): " << yn(r.unipotent) << '\n'
       << "rank(s - id): " << r.rank_s_minus_id << " (required " << r.required_rank << ")\n"
       << "surface type: " << (r.passes_surface_type ? "PASS" : "FAIL") << '\n';
    return os;
}

} // namespace ncsurf
