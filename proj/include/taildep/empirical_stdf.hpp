#pragma once

#include <vector>

#include "taildep/moment_map.hpp"
#include "taildep/sample.hpp"

namespace taildep {

enum class StdfVariant { L1, L2, MID };

// Rank-based nonparametric estimator of the stable tail dependence function.
// MID is the half-offset estimator used for all inference; L1/L2 are the
// bracketing variants.
struct EmpiricalSTDF {
    RankData ranks;
    int k = 1;
    StdfVariant variant = StdfVariant::MID;

    EmpiricalSTDF() = default;
    EmpiricalSTDF(RankData r, int k_, StdfVariant v = StdfVariant::MID);

    std::size_t n() const { return ranks.n; }
};

// Counting formula at one point; total on [0,1]^2.
double eval_stdf(const EmpiricalSTDF& e, double x, double y);

// Values at the m x m midpoint grid ((i+.5)/m, (j+.5)/m), row-major in i.
// Same counting formula as eval_stdf, evaluated in O(n + m^2).
std::vector<double> empirical_grid_values(const EmpiricalSTDF& e, int m);

// Integral of g * l over the unit square. Exact closed form for the two
// built-in g kinds; Generic uses midpoint grid quadrature with g.quad_m.
std::vector<double> integrate_g_empirical(const EmpiricalSTDF& e, const MomentMap& g);

// Integrals of 1, x and y over Delta ∩ [0,a]x[0,b] where Delta = {x+y<=1}.
// Building block for the exact rules; exposed for reuse by the limit-field
// cell weights.
struct TriangleMoments {
    double m1, mx, my;
};
TriangleMoments triangle_rect_moments(double a, double b);

}  // namespace taildep
