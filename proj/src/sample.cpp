#include "taildep/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace taildep {

namespace {

// Ranks of one coordinate; stable sort keeps ties in input order.
std::vector<std::int64_t> rank_coordinate(const std::vector<double>& v, bool* ties) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<std::int64_t> r(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        r[order[pos]] = static_cast<std::int64_t>(pos + 1);
        if (pos > 0 && v[order[pos]] == v[order[pos - 1]]) *ties = true;
    }
    return r;
}

}  // namespace

RankData compute_ranks(const Sample& sample) {
    const std::size_t n = sample.size();
    if (n < 2) throw std::invalid_argument("compute_ranks: need n >= 2");
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = sample.pairs[i].first;
        ys[i] = sample.pairs[i].second;
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
            throw std::invalid_argument("compute_ranks: non-finite coordinate");
    }
    RankData out;
    out.n = n;
    out.rx = rank_coordinate(xs, &out.tie_warning);
    out.ry = rank_coordinate(ys, &out.tie_warning);
    return out;
}

}  // namespace taildep
