#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "ncsurf/exactmat.hpp"

namespace ncsurf {

class InvalidGramMatrix : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Gram matrix of an Euler form in the basis of an exceptional collection:
/// unit upper-triangular, hence det = 1. Entry (i, j) is <e_i, e_j>.
///
/// Construction validates and rejects malformed input; it never repairs it.
class GramMatrix {
public:
    explicit GramMatrix(IntMatrix m);

    /// Builds from the strictly upper entries in row-major order
    /// ((0,1), (0,2), ..., (n-2,n-1)).
    static GramMatrix from_upper(std::size_t n, const std::vector<Integer>& upper);

    static GramMatrix identity(std::size_t n) { return GramMatrix(IntMatrix::identity(n)); }

    std::size_t rank() const { return m_.size(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const { return m_; }

    std::vector<Integer> upper_entries() const;

    friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }

private:
    IntMatrix m_;
};

std::ostream& operator<<(std::ostream& os, const GramMatrix& m);

/// Serre automorphism s = M^{-1} M^t, so that M s = M^t, i.e. <x, s y> = <y, x>.
IntMatrix serre_matrix(const GramMatrix& m);

/// Coxeter matrix C = -M^{-1} M^t = -s.
IntMatrix coxeter(const GramMatrix& m);

struct SerreReport {
    bool nondegenerate = false;
    bool unipotent = false;
    std::size_t rank_s_minus_id = 0;
    std::size_t required_rank = 2;
    bool passes_surface_type = false;
};

/// Surface-type axioms on s = M^{-1} M^t: det M != 0, s - id nilpotent,
/// rk(s - id) == required_rank.
SerreReport check_surface_type(const GramMatrix& m, std::size_t required_rank = 2);

std::ostream& operator<<(std::ostream& os, const SerreReport& r);

} // namespace ncsurf
