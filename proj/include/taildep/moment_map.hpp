#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace taildep {

// The auxiliary function g : [0,1]^2 -> R^p integrated against stable tail
// dependence functions. Two built-in kinds have exact integration rules;
// GENERIC falls back to midpoint grid quadrature.
struct MomentMap {
    enum class Kind { TwoPointG, TriangleIndicator, Generic };

    Kind kind = Kind::TriangleIndicator;
    int p = 1;
    // Generic component callables; only used when kind == Generic.
    std::vector<std::function<double(double, double)>> components;
    bool integrable = true;  // caller's assertion for Generic
    int quad_m = 400;        // grid size for Generic quadrature

    // g_D(x,y) = 1{x+y<=1} (x, y)^T, p = 2.
    static MomentMap two_point_g() {
        MomentMap g;
        g.kind = Kind::TwoPointG;
        g.p = 2;
        return g;
    }

    // g(x,y) = 1{x+y<=1}, p = 1.
    static MomentMap triangle_indicator() {
        MomentMap g;
        g.kind = Kind::TriangleIndicator;
        g.p = 1;
        return g;
    }

    static MomentMap generic(std::vector<std::function<double(double, double)>> comps,
                             bool integrable_flag = true, int quad_m = 400) {
        if (comps.empty()) throw std::invalid_argument("MomentMap: no components");
        MomentMap g;
        g.kind = Kind::Generic;
        g.p = static_cast<int>(comps.size());
        g.components = std::move(comps);
        g.integrable = integrable_flag;
        g.quad_m = quad_m;
        return g;
    }

    double component(int c, double x, double y) const {
        switch (kind) {
            case Kind::TwoPointG:
                return (x + y <= 1.0) ? (c == 0 ? x : y) : 0.0;
            case Kind::TriangleIndicator:
                return (x + y <= 1.0) ? 1.0 : 0.0;
            case Kind::Generic:
                return components[static_cast<std::size_t>(c)](x, y);
        }
        return 0.0;
    }
};

}  // namespace taildep
