#pragma once

#include <set>
#include <string>
#include <vector>

#include "circle_action.hpp"
#include "error.hpp"

namespace gwidth {

enum class CoefficientStatus { PointClass, ForcedZero, Unconstrained };

inline std::string to_string(CoefficientStatus s)
{
    switch (s) {
    case CoefficientStatus::PointClass: return "point class";
    case CoefficientStatus::ForcedZero: return "zero";
    case CoefficientStatus::Unconstrained: return "unconstrained";
    }
    return "?";
}

/// Coefficient a_i of degree 2i, paired with q^{-i}.
struct SeidelEntry {
    int index;
    int cohomology_degree;
    int q_exponent;
    CoefficientStatus status;
};

/**
 * What the fixed point data forces on S(phi) = a_n q^{-n} + ... + a_1 q^{-1} + a_0:
 * a_n is the point class, a_s = ... = a_{n-1} = 0, and a_0 ... a_{s-1} are
 * left unconstrained. A section class sigma_max + B contributes at
 * i = n - c1(B).
 */
struct SeidelStructure {
    int n = 0;
    Integer s = 0;
    std::vector<SeidelEntry> entries; // indexed by i = 0..n

    const SeidelEntry& entry(int i) const { return entries.at(static_cast<std::size_t>(i)); }

    bool fully_determined() const
    {
        for (const auto& e : entries)
            if (e.status == CoefficientStatus::Unconstrained)
                return false;
        return true;
    }
};

namespace detail {

/// q^{−4}: the exponent is written with a Unicode minus sign.
inline std::string q_power(int exponent)
{
    if (exponent < 0)
        return "q^{−" + std::to_string(-exponent) + "}";
    return "q^{" + std::to_string(exponent) + "}";
}

} // namespace detail

/// e.g. "S(φ) = [pt] ⊗ q^{−4}" or "S(φ) = [pt] ⊗ q^{−5} + a_2 ⊗ q^{−2} + a_1 ⊗ q^{−1} + a_0".
inline std::string seidel_formula(const SeidelStructure& st)
{
    std::string out = "S(φ) = [pt] ⊗ " + detail::q_power(-st.n);
    for (int i = st.n - 1; i >= 0; --i) {
        if (st.entry(i).status != CoefficientStatus::Unconstrained)
            continue;
        out += " + a_" + std::to_string(i);
        if (i > 0)
            out += " ⊗ " + detail::q_power(-i);
    }
    return out;
}

inline SeidelStructure seidel_structure(const ActionData& a)
{
    auto report = gromov_width(a); // throws HypothesisFailed
    SeidelStructure st;
    st.n = static_cast<int>(report.h_max.numerator());
    st.s = report.s.numerator();
    for (int i = 0; i <= st.n; ++i) {
        CoefficientStatus status = CoefficientStatus::Unconstrained;
        if (i == st.n)
            status = CoefficientStatus::PointClass;
        else if (i >= st.s)
            status = CoefficientStatus::ForcedZero;
        st.entries.push_back({i, 2 * i, -i, status});
    }
    return st;
}

/// Each a_i q^{-i} must have total degree 0, and the q-exponents must run 0, -1, ..., -n without gaps.
inline void degree_check(const SeidelStructure& st)
{
    std::set<int> exponents;
    for (const auto& e : st.entries) {
        if (e.cohomology_degree + 2 * e.q_exponent != 0)
            throw Error(ErrorCode::DegreeMismatch, "entry a_" + std::to_string(e.index) + " has degree " +
                                                       std::to_string(e.cohomology_degree) + " with q^" +
                                                       std::to_string(e.q_exponent));
        if (!exponents.insert(e.q_exponent).second)
            throw Error(ErrorCode::DegreeMismatch, "q-exponent " + std::to_string(e.q_exponent) + " repeated");
    }
    for (int i = 0; i <= st.n; ++i)
        if (!exponents.count(-i))
            throw Error(ErrorCode::DegreeMismatch, "gap: no entry with q-exponent " + std::to_string(-i));
    if (exponents.size() != static_cast<std::size_t>(st.n + 1))
        throw Error(ErrorCode::DegreeMismatch, "q-exponents outside 0..-" + std::to_string(st.n));
}

} // namespace gwidth
