#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace gwidth {

/**
 * Integer vector in Z^n. Depending on context it is an edge direction, a
 * facet normal, a torus weight or a subcircle direction.
 */
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<Integer> coords) : coords_(coords) {}

    static LatticeVector zero(std::size_t dim) { return LatticeVector(std::vector<Integer>(dim, 0)); }

    std::size_t dim() const noexcept { return coords_.size(); }
    Integer operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Integer> coords() const noexcept { return coords_; }

    bool is_zero() const
    {
        return std::all_of(coords_.begin(), coords_.end(), [](Integer c) { return c == 0; });
    }

    /// gcd of the absolute coordinates; 0 for the zero vector.
    Integer content() const
    {
        Integer g = 0;
        for (Integer c : coords_)
            g = std::gcd(g, c);
        return g;
    }

    bool is_primitive() const { return content() == 1; }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    friend LatticeVector operator-(const LatticeVector& v)
    {
        LatticeVector out = v;
        for (auto& c : out.coords_)
            c = -c;
        return out;
    }

    friend LatticeVector operator*(Integer s, const LatticeVector& v)
    {
        LatticeVector out = v;
        for (auto& c : out.coords_)
            c *= s;
        return out;
    }

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b)
    {
        if (a.dim() != b.dim())
            throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
        LatticeVector out = a;
        for (std::size_t i = 0; i < a.dim(); ++i)
            out.coords_[i] += b.coords_[i];
        return out;
    }

    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

private:
    std::vector<Integer> coords_;
};

inline std::string to_string(const LatticeVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }

/// Standard dot product over the integers.
inline Integer pairing(const LatticeVector& x, const LatticeVector& y)
{
    if (x.dim() != y.dim())
        throw Error(ErrorCode::DimensionMismatch,
                    "pairing of vectors of length " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
    Integer sum = 0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        sum += x[i] * y[i];
    return sum;
}

/// Pairing of an integer vector with a rational point.
inline Rational pairing(const LatticeVector& x, const RationalPoint& p)
{
    if (x.dim() != p.size())
        throw Error(ErrorCode::DimensionMismatch, "pairing of vector and point of different lengths");
    Rational sum = 0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        sum += Rational(x[i]) * p[i];
    return sum;
}

/// v divided by the gcd of its coordinates; same orientation.
inline LatticeVector primitive_direction(const LatticeVector& v)
{
    Integer g = v.content();
    if (g == 0)
        throw Error(ErrorCode::ZeroVector, "primitive direction of the zero vector");
    std::vector<Integer> out(v.coords().begin(), v.coords().end());
    for (auto& c : out)
        c /= g;
    return LatticeVector(std::move(out));
}

namespace detail {

using IntMatrix = std::vector<std::vector<Integer>>;

struct ExtendedGcd {
    Integer g, x, y; // x*a + y*b = g >= 0
};

inline ExtendedGcd extended_gcd(Integer a, Integer b)
{
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/**
 * Column-style Hermite reduction of the k x n matrix whose rows are
 * `normals`. On success A * U = [I_k | 0] with U unimodular; `inverse`
 * holds U^{-1}, whose first k rows are the normals themselves and whose
 * remaining rows complete them to a Z-basis.
 */
struct HermiteReduction {
    IntMatrix transform; // U
    IntMatrix inverse;   // U^{-1}
};

inline HermiteReduction hermite_reduce(std::span<const LatticeVector> normals, std::size_t n)
{
    const std::size_t k = normals.size();
    if (k > n)
        throw Error(ErrorCode::NotUnimodular, "more normals than the ambient dimension");
    IntMatrix a(k, std::vector<Integer>(n));
    for (std::size_t r = 0; r < k; ++r) {
        if (normals[r].dim() != n)
            throw Error(ErrorCode::DimensionMismatch, "normal " + to_string(normals[r]) + " has wrong length");
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = normals[r][c];
    }
    IntMatrix u(n, std::vector<Integer>(n, 0));
    IntMatrix v(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        u[i][i] = v[i][i] = 1;

    // Column operation on (c1, c2) by [[p, q], [r, s]]:
    //   col c1 <- p*col c1 + r*col c2,  col c2 <- q*col c1 + s*col c2.
    // The inverse row operation is applied to V so that V stays U^{-1}.
    auto column_op = [&](std::size_t c1, std::size_t c2, Integer p, Integer q, Integer r, Integer s) {
        auto apply = [&](IntMatrix& m) {
            for (auto& row : m) {
                Integer x = row[c1], y = row[c2];
                row[c1] = p * x + r * y;
                row[c2] = q * x + s * y;
            }
        };
        apply(a);
        apply(u);
        Integer det = p * s - q * r; // +-1
        for (std::size_t c = 0; c < n; ++c) {
            Integer x = v[c1][c], y = v[c2][c];
            v[c1][c] = det * (s * x - q * y);
            v[c2][c] = det * (-r * x + p * y);
        }
    };

    auto negate_column = [&](std::size_t c) {
        for (auto& r : a)
            r[c] = -r[c];
        for (auto& r : u)
            r[c] = -r[c];
        for (auto& x : v[c])
            x = -x;
    };

    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t col = row + 1; col < n; ++col) {
            Integer x = a[row][row], y = a[row][col];
            if (y == 0)
                continue;
            auto [g, s, t] = extended_gcd(x, y);
            column_op(row, col, s, -y / g, t, x / g);
        }
        if (a[row][row] == 0)
            throw Error(ErrorCode::NotUnimodular, "normals are linearly dependent");
        if (std::abs(a[row][row]) != 1)
            throw Error(ErrorCode::NotUnimodular, "normals do not extend to a Z-basis");
        if (a[row][row] < 0)
            negate_column(row);
        for (std::size_t col = 0; col < row; ++col) {
            Integer f = a[row][col];
            if (f != 0)
                column_op(col, row, 1, 0, -f, 1);
        }
    }
    return {std::move(u), std::move(v)};
}

} // namespace detail

/// Completes `normals` to a Z-basis of Z^n; the first normals.size() entries
/// of the result are the normals in their given order.
inline std::vector<LatticeVector> extend_to_basis(std::span<const LatticeVector> normals, std::size_t n)
{
    auto red = detail::hermite_reduce(normals, n);
    std::vector<LatticeVector> basis(normals.begin(), normals.end());
    for (std::size_t r = normals.size(); r < n; ++r)
        basis.emplace_back(red.inverse[r]);
    return basis;
}

/// Coordinates of xi in Z^n / span(normals) with respect to the completed basis.
inline std::vector<Integer> quotient_coordinates(const LatticeVector& xi, std::span<const LatticeVector> normals)
{
    const std::size_t n = xi.dim();
    auto red = detail::hermite_reduce(normals, n);
    std::vector<Integer> out;
    for (std::size_t c = normals.size(); c < n; ++c) {
        Integer sum = 0;
        for (std::size_t r = 0; r < n; ++r)
            sum += xi[r] * red.transform[r][c];
        out.push_back(sum);
    }
    return out;
}

/**
 * Order of the finite stabilizer of the xi-subcircle on the orbit stratum
 * whose stabilizer lattice is spanned by `normals`. Zero means the stratum
 * is fixed pointwise.
 */
inline Integer quotient_order(const LatticeVector& xi, std::span<const LatticeVector> normals)
{
    if (xi.is_zero())
        throw Error(ErrorCode::ZeroVector, "subcircle direction is zero");
    Integer g = 0;
    for (Integer c : quotient_coordinates(xi, normals))
        g = std::gcd(g, c);
    return g;
}

/// Integer determinant of a square matrix given by rows (Bareiss elimination).
inline Integer determinant(std::span<const LatticeVector> rows)
{
    const std::size_t n = rows.size();
    detail::IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].dim() != n)
            throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
        m[i].assign(rows[i].coords().begin(), rows[i].coords().end());
    }
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace gwidth
