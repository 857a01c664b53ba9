#include "taildep/empirical_stdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "taildep/quadrature.hpp"

namespace taildep {

EmpiricalSTDF::EmpiricalSTDF(RankData r, int k_, StdfVariant v)
    : ranks(std::move(r)), k(k_), variant(v) {
    if (ranks.n < 2) throw std::invalid_argument("EmpiricalSTDF: need n >= 2");
    if (k < 1 || static_cast<std::size_t>(k) > ranks.n)
        throw std::invalid_argument("EmpiricalSTDF: k must satisfy 1 <= k <= n");
}

namespace {

// Indicator for one coordinate: does rank r fire at coordinate value x?
inline bool fires(StdfVariant v, std::int64_t r, double nd, double kx) {
    switch (v) {
        case StdfVariant::L1:
            return static_cast<double>(r) > nd + 1.0 - kx;
        case StdfVariant::L2:
            return static_cast<double>(r) >= nd + 1.0 - kx;
        case StdfVariant::MID:
            return static_cast<double>(r) > nd + 0.5 - kx;
    }
    return false;
}

inline double rank_offset(StdfVariant v) {
    return v == StdfVariant::MID ? 0.5 : 1.0;
}

}  // namespace

double eval_stdf(const EmpiricalSTDF& e, double x, double y) {
    const double nd = static_cast<double>(e.ranks.n);
    const double kx = e.k * x;
    const double ky = e.k * y;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < e.ranks.n; ++i) {
        if (fires(e.variant, e.ranks.rx[i], nd, kx) ||
            fires(e.variant, e.ranks.ry[i], nd, ky))
            ++count;
    }
    return static_cast<double>(count) / e.k;
}

std::vector<double> empirical_grid_values(const EmpiricalSTDF& e, int m) {
    if (m < 2) throw std::invalid_argument("empirical_grid_values: m must be >= 2");
    const std::size_t n = e.ranks.n;
    const double nd = static_cast<double>(n);

    // For each point, the number of leading grid abscissas where its
    // coordinate indicator does NOT fire. Uses the same float comparisons
    // as eval_stdf, located by binary search (the predicate is monotone).
    auto fail_count = [&](std::int64_t r) -> int {
        auto fails_at = [&](int i) {
            const double x = (i + 0.5) / m;
            return !fires(e.variant, r, nd, e.k * x);
        };
        if (!fails_at(0)) return 0;
        if (fails_at(m - 1)) return m;
        int lo = 0, hi = m - 1;  // fails_at(lo) true, fails_at(hi) false
        while (hi - lo > 1) {
            const int mid = lo + (hi - lo) / 2;
            (fails_at(mid) ? lo : hi) = mid;
        }
        return hi;
    };

    std::vector<std::int64_t> hist(static_cast<std::size_t>(m + 1) * (m + 1), 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int cx = fail_count(e.ranks.rx[i]);
        const int cy = fail_count(e.ranks.ry[i]);
        ++hist[static_cast<std::size_t>(cx) * (m + 1) + cy];
    }
    // Suffix sums: F(i,j) = #{points : cx > i and cy > j}.
    for (int i = m; i >= 0; --i) {
        std::int64_t run = 0;
        for (int j = m; j >= 0; --j) {
            run += hist[static_cast<std::size_t>(i) * (m + 1) + j];
            hist[static_cast<std::size_t>(i) * (m + 1) + j] = run;
        }
    }
    for (int j = m; j >= 0; --j) {
        for (int i = m - 1; i >= 0; --i) {
            hist[static_cast<std::size_t>(i) * (m + 1) + j] +=
                hist[static_cast<std::size_t>(i + 1) * (m + 1) + j];
        }
    }

    std::vector<double> out(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const std::int64_t both_fail =
                hist[static_cast<std::size_t>(i + 1) * (m + 1) + (j + 1)];
            out[static_cast<std::size_t>(i) * m + j] =
                static_cast<double>(static_cast<std::int64_t>(n) - both_fail) / e.k;
        }
    }
    return out;
}

TriangleMoments triangle_rect_moments(double a, double b) {
    const double c = std::max(a + b - 1.0, 0.0);
    TriangleMoments t;
    t.m1 = a * b - 0.5 * c * c;
    t.mx = 0.5 * a * a * b - c * c * c / 3.0 - 0.5 * (1.0 - b) * c * c;
    t.my = 0.5 * a * b * b - c * c * c / 3.0 - 0.5 * (1.0 - a) * c * c;
    return t;
}

std::vector<double> integrate_g_empirical(const EmpiricalSTDF& e, const MomentMap& g) {
    const std::size_t n = e.ranks.n;
    const double nd = static_cast<double>(n);
    const double off = rank_offset(e.variant);

    if (g.kind == MomentMap::Kind::Generic) {
        const int m = g.quad_m;
        const std::vector<double> vals = empirical_grid_values(e, m);
        std::vector<double> out(static_cast<std::size_t>(g.p));
        for (int c = 0; c < g.p; ++c) {
            auto f = [&](double x, double y) {
                const int i = static_cast<int>(x * m);
                const int j = static_cast<int>(y * m);
                return vals[static_cast<std::size_t>(i) * m + j] * g.component(c, x, y);
            };
            out[static_cast<std::size_t>(c)] = grid_quadrature(f, m);
        }
        return out;
    }

    // Exact: l = (1/k) sum_i 1{x > x_i or y > y_i} with clamped thresholds;
    // each summand integrates over Delta as (moment of Delta) minus the
    // moment of Delta ∩ [0,x_i]x[0,y_i].
    double s1 = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = std::clamp((nd + off - static_cast<double>(e.ranks.rx[i])) / e.k, 0.0, 1.0);
        const double yi = std::clamp((nd + off - static_cast<double>(e.ranks.ry[i])) / e.k, 0.0, 1.0);
        const TriangleMoments t = triangle_rect_moments(xi, yi);
        s1 += 0.5 - t.m1;
        sx += 1.0 / 6.0 - t.mx;
        sy += 1.0 / 6.0 - t.my;
    }
    if (g.kind == MomentMap::Kind::TriangleIndicator) return {s1 / e.k};
    return {sx / e.k, sy / e.k};
}

}  // namespace taildep
