#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace gwidth::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
    RationalMatrix matrix;            // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over Q; `columns` limits which columns may pivot.
inline RowEchelon reduce_rows(RationalMatrix m, std::size_t columns)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.matrix = std::move(m);
    return out;
}

inline std::size_t rank(const RationalMatrix& m)
{
    if (m.empty())
        return 0;
    return reduce_rows(m, m.front().size()).pivots.size();
}

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct Solution {
    SolveStatus status;
    std::vector<Rational> x;
};

/// Solves A x = b for a possibly overdetermined A (rows x cols).
inline Solution solve(const RationalMatrix& a, const std::vector<Rational>& b, std::size_t cols)
{
    RationalMatrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r)
        aug[r].push_back(b[r]);
    auto ech = reduce_rows(std::move(aug), cols);
    for (std::size_t r = ech.pivots.size(); r < ech.matrix.size(); ++r)
        if (ech.matrix[r][cols] != 0)
            return {SolveStatus::Inconsistent, {}};
    if (ech.pivots.size() < cols)
        return {SolveStatus::Underdetermined, {}};
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < cols; ++r)
        x[ech.pivots[r]] = ech.matrix[r][cols];
    return {SolveStatus::Unique, std::move(x)};
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& a)
{
    const std::size_t n = a.size();
    RationalMatrix aug = a;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            aug[r].push_back(r == c ? Rational(1) : Rational(0));
    auto ech = reduce_rows(std::move(aug), n);
    if (ech.pivots.size() < n)
        return std::nullopt;
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv[r][c] = ech.matrix[r][n + c];
    return inv;
}

} // namespace gwidth::detail
