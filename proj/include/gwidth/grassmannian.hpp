#pragma once

#include <string>
#include <vector>

#include "circle_action.hpp"
#include "error.hpp"

namespace gwidth {

/// Gr(k, m) with 1 <= k <= m - k.
struct GrassmannianSpec {
    int k;
    int m;
};

/**
 * Fixed point data of the circle rotating the first k coordinates of C^m,
 * acting on Gr(k, m). The fixed components are Gr(k1, k) x Gr(k2, m - k)
 * with k1 + k2 = k. Their normal weights are -1 with multiplicity
 * k1 (m - k - k2) and +1 with multiplicity k2 (k - k1); the remaining
 * tangent directions are fixed.
 */
inline ActionData grassmannian_action(GrassmannianSpec spec)
{
    const int k = spec.k, m = spec.m;
    if (k < 1 || k > m - k)
        throw Error(ErrorCode::InvalidRange, "Gr(" + std::to_string(k) + "," + std::to_string(m) +
                                                 ") needs 1 <= k <= m - k");
    std::vector<FixedComponent> components;
    for (int k1 = k; k1 >= 0; --k1) {
        const int k2 = k - k1;
        FixedComponent c;
        c.label = "Gr(" + std::to_string(k1) + "," + std::to_string(k) + ")xGr(" + std::to_string(k2) + "," +
                  std::to_string(m - k) + ")";
        c.complex_dim = k1 * (k - k1) + k2 * (m - k - k2);
        c.weights.assign(static_cast<std::size_t>(k1 * (m - k - k2)), -1);
        c.weights.insert(c.weights.end(), static_cast<std::size_t>(k2 * (k - k1)), 1);
        components.push_back(std::move(c));
    }
    return make_action(k * (m - k), std::move(components), Provenance{GrassmannianOrigin{k, m}});
}

/// k1 (m - k) - k2 k, the moment value of Gr(k1, k) x Gr(k2, m - k) in closed form.
inline Integer grassmannian_level(GrassmannianSpec spec, int k1)
{
    return Integer{k1} * (spec.m - spec.k) - Integer{spec.k - k1} * spec.k;
}

} // namespace gwidth
