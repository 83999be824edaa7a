#include "ncsurf/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsurf::kernels {

namespace {

using Mat = std::array<std::array<std::int64_t, max_rank>, max_rank>;

struct Checked {
    bool overflow = false;

    std::int64_t add(std::int64_t a, std::int64_t b)
    {
        std::int64_t r = 0;
        overflow |= __builtin_add_overflow(a, b, &r);
        return r;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b)
    {
        std::int64_t r = 0;
        overflow |= __builtin_sub_overflow(a, b, &r);
        return r;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b)
    {
        std::int64_t r = 0;
        overflow |= __builtin_mul_overflow(a, b, &r);
        return r;
    }
};

void unpack(std::span<const std::int64_t> upper, std::size_t n, Mat& m)
{
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = i == j ? 1 : 0;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = upper[k++];
        }
    }
}

void multiply(const Mat& a, const Mat& b, Mat& c, std::size_t n, Checked& ck)
{
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                acc = ck.add(acc, ck.mul(a[i][k], b[k][j]));
            }
            c[i][j] = acc;
        }
    }
}

std::size_t bareiss_rank(Mat a, std::size_t n, Checked& ck)
{
    std::int64_t prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        std::swap(a[pivot], a[row]);
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                const std::int64_t t = ck.sub(ck.mul(a[row][col], a[i][j]), ck.mul(a[i][col], a[row][j]));
                a[i][j] = t / prev;
            }
            a[i][col] = 0;
        }
        if (ck.overflow) {
            return 0;
        }
        prev = a[row][col];
        ++row;
    }
    return row;
}

} // namespace

Screen screen_surface_type(std::span<const std::int64_t> upper, std::size_t n, std::size_t required_rank)
{
    if (n == 0 || n > max_rank || upper.size() != n * (n - 1) / 2) {
        throw std::invalid_argument("screen_surface_type: bad packed matrix");
    }
    Checked ck;
    Mat m{};
    unpack(upper, n, m);

    // X = M^{-1}, unit upper-triangular: X[i][j] = -sum_{i<k<=j} M[i][k] X[k][j]
    Mat x{};
    for (std::size_t i = n; i-- > 0;) {
        x[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = i + 1; k <= j; ++k) {
                acc = ck.add(acc, ck.mul(m[i][k], x[k][j]));
            }
            x[i][j] = ck.sub(0, acc);
        }
    }

    // N = X M^t - I
    Mat s{};
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = std::max(i, j); k < n; ++k) {
                acc = ck.add(acc, ck.mul(x[i][k], m[j][k]));
            }
            s[i][j] = i == j ? ck.sub(acc, 1) : acc;
        }
        trace = ck.add(trace, s[i][i]);
    }
    if (ck.overflow) {
        return Screen::overflow;
    }
    // nilpotent => trace zero; cheap rejection for almost every candidate
    if (trace != 0) {
        return Screen::fail;
    }

    Mat p = s;
    Mat tmp{};
    for (std::size_t k = 1; k < n; ++k) {
        multiply(p, s, tmp, n, ck);
        p = tmp;
        if (ck.overflow) {
            return Screen::overflow;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p[i][j] != 0) {
                return Screen::fail;
            }
        }
    }
    const std::size_t r = bareiss_rank(s, n, ck);
    if (ck.overflow) {
        return Screen::overflow;
    }
    return r == required_rank ? Screen::pass : Screen::fail;
}

bool apply_generator_packed(std::span<const std::int64_t> upper, std::size_t n, BraidGenerator g,
                            std::span<std::int64_t> out)
{
    if (n == 0 || n > max_rank || !g.valid_for(n)) {
        throw std::invalid_argument("apply_generator_packed: bad input");
    }
    Checked ck;
    Mat m{};
    unpack(upper, n, m);
    const std::size_t k = g.index - 1;

    if (g.kind == BraidGenerator::Kind::epsilon) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != k) {
                m[k][j] = ck.sub(0, m[k][j]);
                m[j][k] = ck.sub(0, m[j][k]);
            }
        }
    } else {
        const bool left = g.kind == BraidGenerator::Kind::sigma;
        const std::int64_t x = ck.sub(0, m[k][k + 1]);
        for (std::size_t r = 0; r < n; ++r) {
            const std::int64_t ck0 = m[r][k];
            const std::int64_t ck1 = m[r][k + 1];
            if (left) {
                m[r][k] = ck.add(ck1, ck.mul(x, ck0));
                m[r][k + 1] = ck0;
            } else {
                m[r][k] = ck1;
                m[r][k + 1] = ck.add(ck0, ck.mul(x, ck1));
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            const std::int64_t r0 = m[k][c];
            const std::int64_t r1 = m[k + 1][c];
            if (left) {
                m[k][c] = ck.add(r1, ck.mul(x, r0));
                m[k + 1][c] = r0;
            } else {
                m[k][c] = r1;
                m[k + 1][c] = ck.add(r0, ck.mul(x, r1));
            }
        }
    }
    if (ck.overflow) {
        return false;
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out[idx++] = m[i][j];
        }
    }
    return true;
}

} // namespace ncsurf::kernels
