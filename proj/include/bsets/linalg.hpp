#pragma once

// Exact Gaussian elimination over the rationals: reduced row echelon form,
// rank, nullspace with integer basis vectors, and consistent solves.

#include "bsets/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bsets::linalg {

using Matrix = std::vector<std::vector<Rat>>;
using Vector = std::vector<Rat>;
using IntVector = std::vector<Int>;

struct Echelon {
    Matrix rref;                    // same shape as the input
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

inline Echelon row_reduce(Matrix a, std::size_t cols)
{
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        const Rat inv = 1 / a[r][c];
        for (auto& v : a[r])
            if (v != 0)
                v *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rat factor = a[i][c];
            for (std::size_t j = c; j < a[i].size(); ++j)
                if (a[r][j] != 0)
                    a[i][j] -= factor * a[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rref = std::move(a);
    return out;
}

inline std::size_t rank(const Matrix& a, std::size_t cols) { return row_reduce(a, cols).pivots.size(); }

// Scales v to coprime integers with the first nonzero entry positive.
inline IntVector primitive_integer(const Vector& v)
{
    Int l = 1;
    for (const auto& x : v)
        if (x != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    Int g = 0;
    for (const auto& x : v) {
        Rat scaled = x * l;
        out.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g == 0)
        return out;
    bool flip = false;
    for (const auto& x : out)
        if (x != 0) {
            flip = x < 0;
            break;
        }
    for (auto& x : out) {
        x /= g;
        if (flip)
            x = -x;
    }
    return out;
}

// Basis of { v : a v = 0 }, one vector per free column (in column order),
// each reduced to a primitive integer vector.
inline std::vector<IntVector> nullspace(const Matrix& a, std::size_t cols)
{
    Echelon e = row_reduce(a, cols);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : e.pivots)
        is_pivot[c] = 1;
    std::vector<IntVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.rref[r][free];
        basis.push_back(primitive_integer(v));
    }
    return basis;
}

// A solution of a x = b with free variables set to zero, or nullopt if the
// system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols)
{
    if (a.size() != b.size())
        throw std::invalid_argument("solve: row count mismatch");
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(cols);
        aug[i].push_back(b[i]);
    }
    Echelon e = row_reduce(std::move(aug), cols);
    for (std::size_t r = e.pivots.size(); r < e.rref.size(); ++r)
        if (e.rref[r][cols] != 0)
            return std::nullopt;
    Vector x(cols);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.rref[r][cols];
    return x;
}

} // namespace bsets::linalg
