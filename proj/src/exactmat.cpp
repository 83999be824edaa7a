#include "ncsurf/exactmat.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace ncsurf {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            r(i, j) = Rational(m(i, j));
        }
    }
    return r;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m(i, j).get_den() != 1) {
                throw std::domain_error("to_integer: entry " + m(i, j).get_str() + " is not integral");
            }
            r(i, j) = m(i, j).get_num();
        }
    }
    return r;
}

namespace {

// Scales each row by the lcm of its denominators. Row scaling changes the
// determinant by the product of the scales but never the rank.
IntMatrix clear_denominators(const RatMatrix& m, Integer* scale_product)
{
    const std::size_t n = m.size();
    IntMatrix out(n);
    Integer product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = m(i, j) * l;
            out(i, j) = scaled.get_num();
        }
        product *= l;
    }
    if (scale_product != nullptr) {
        *scale_product = product;
    }
    return out;
}

struct BareissResult {
    std::size_t rank = 0;
    Integer det = 0;
};

// Fraction-free elimination on a copy. Every division by the previous pivot
// is exact (Sylvester's identity).
BareissResult bareiss(IntMatrix a)
{
    const std::size_t n = a.size();
    BareissResult res;
    Integer prev = 1;
    int sign = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(row, j));
            }
            sign = -sign;
        }
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Integer t = a(row, col) * a(i, j) - a(i, col) * a(row, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, col) = 0;
        }
        prev = a(row, col);
        ++row;
    }
    res.rank = row;
    res.det = (row == n) ? Integer(sign * prev) : Integer(0);
    if (row == n && n == 0) {
        res.det = 1;
    }
    return res;
}

} // namespace

Integer det(const IntMatrix& m)
{
    if (m.size() == 0) {
        return 1;
    }
    return bareiss(m).det;
}

Rational det(const RatMatrix& m)
{
    Integer scale;
    IntMatrix scaled = clear_denominators(m, &scale);
    Rational d(det(scaled), scale);
    d.canonicalize();
    return d;
}

RatMatrix inverse(const RatMatrix& m)
{
    const std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrixError("inverse: matrix is singular");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

std::size_t rank(const IntMatrix& m) { return bareiss(m).rank; }

std::size_t rank(const RatMatrix& m) { return rank(clear_denominators(m, nullptr)); }

bool is_nilpotent(const IntMatrix& m) { return power(m, static_cast<unsigned>(m.size())).is_zero(); }

bool is_nilpotent(const RatMatrix& m) { return power(m, static_cast<unsigned>(m.size())).is_zero(); }

std::vector<Rational> charpoly(const RatMatrix& m)
{
    // c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    const std::size_t n = m.size();
    std::vector<Rational> coeffs(n + 1);
    coeffs[0] = 1;
    RatMatrix mk = RatMatrix::zero(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix next = m * mk;
        for (std::size_t i = 0; i < n; ++i) {
            next(i, i) += coeffs[k - 1];
        }
        mk = std::move(next);
        RatMatrix amk = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) {
            tr += amk(i, i);
        }
        coeffs[k] = -tr / Rational(static_cast<unsigned long>(k));
    }
    return coeffs;
}

std::vector<Integer> charpoly(const IntMatrix& m)
{
    std::vector<Rational> rc = charpoly(to_rational(m));
    std::vector<Integer> out;
    out.reserve(rc.size());
    for (const auto& c : rc) {
        if (c.get_den() != 1) {
            throw std::logic_error("charpoly: non-integral coefficient for an integer matrix");
        }
        out.push_back(c.get_num());
    }
    return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& m)
{
    const std::size_t n = m.size();
    IntMatrix a = m;
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < n; ++t) {
        // pick the smallest nonzero entry in the trailing block as pivot
        bool found = false;
        std::size_t pi = t;
        std::size_t pj = t;
        for (std::size_t i = t; i < n; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) {
            break;
        }
        for (;;) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(t, j), a(pi, j));
            }
            for (std::size_t i = 0; i < n; ++i) {
                std::swap(a(i, t), a(i, pj));
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0) {
                    for (std::size_t j = t; j < n; ++j) {
                        a(i, j) -= q * a(t, j);
                    }
                }
                if (a(i, t) != 0) {
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0) {
                    for (std::size_t i = t; i < n; ++i) {
                        a(i, j) -= q * a(i, t);
                    }
                }
                if (a(t, j) != 0) {
                    clean = false;
                }
            }
            if (clean) {
                // the pivot must also divide the whole trailing block
                std::size_t bi = n;
                for (std::size_t i = t + 1; i < n && bi == n; ++i) {
                    for (std::size_t j = t + 1; j < n; ++j) {
                        if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                            bi = i;
                            break;
                        }
                    }
                }
                if (bi == n) {
                    break;
                }
                for (std::size_t j = t; j < n; ++j) {
                    a(t, j) += a(bi, j);
                }
                pi = t;
                pj = t;
                continue;
            }
            // restart with the smallest remainder in row/column t as pivot
            pi = t;
            pj = t;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) != 0 && abs(a(i, t)) < abs(a(pi, pj))) {
                    pi = i;
                    pj = t;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) != 0 && abs(a(t, j)) < abs(a(pi, pj))) {
                    pi = t;
                    pj = j;
                }
            }
        }
        diag.push_back(abs(a(t, t)));
    }
    diag.resize(n, Integer(0));
    return diag;
}

namespace {

template <typename T>
void print_matrix(std::ostream& os, const Matrix<T>& m)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) {
                os << ' ';
            }
            os << m(i, j);
        }
        os << "]\n";
    }
}

} // namespace

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    print_matrix(os, m);
    return os;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m)
{
    print_matrix(os, m);
    return os;
}

} // namespace ncsurf
