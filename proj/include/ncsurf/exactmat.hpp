#pragma once

// Exact dense linear algebra over the integers and the rationals.
//
// Every matrix in this project is square and small (n <= 10), so the
// representation is a plain row-major vector of GMP values. No operation
// here ever rounds.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ncsurf {

using Integer = mpz_class;
using Rational = mpq_class;

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <typename T>
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()), data_()
    {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) {
                throw std::invalid_argument("Matrix: rows must all have length " + std::to_string(n_));
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static Matrix zero(std::size_t n) { return Matrix(n); }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Row-major entries.
    const std::vector<T>& entries() const { return data_; }

    Matrix transpose() const
    {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    bool is_zero() const
    {
        for (const auto& x : data_) {
            if (x != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        check_same(a, b);
        Matrix c(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            c.data_[k] = a.data_[k] + b.data_[k];
        }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        check_same(a, b);
        Matrix c(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            c.data_[k] = a.data_[k] - b.data_[k];
        }
        return c;
    }

    friend Matrix operator-(const Matrix& a)
    {
        Matrix c(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            c.data_[k] = -a.data_[k];
        }
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        check_same(a, b);
        const std::size_t n = a.n_;
        Matrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

private:
    static void check_same(const Matrix& a, const Matrix& b)
    {
        if (a.n_ != b.n_) {
            throw std::invalid_argument("Matrix: size mismatch");
        }
    }

    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Converts back to integers; throws std::domain_error if any entry has a
/// nontrivial denominator.
IntMatrix to_integer(const RatMatrix& m);

Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

RatMatrix inverse(const IntMatrix& m);
RatMatrix inverse(const RatMatrix& m);

/// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

template <typename T>
Matrix<T> power(const Matrix<T>& m, unsigned k)
{
    Matrix<T> result = Matrix<T>::identity(m.size());
    Matrix<T> base = m;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

/// M^n == 0 with n the side length.
bool is_nilpotent(const IntMatrix& m);
bool is_nilpotent(const RatMatrix& m);

/// Characteristic polynomial det(xI - M), coefficients from x^n down to x^0.
/// Computed by the Faddeev-LeVerrier recurrence.
std::vector<Rational> charpoly(const RatMatrix& m);
std::vector<Integer> charpoly(const IntMatrix& m);

/// Invariant factors d_1 | d_2 | ... | d_n of the Smith normal form, with
/// trailing zeros for rank deficiency. All factors are nonnegative.
std::vector<Integer> smith_invariants(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

} // namespace ncsurf
