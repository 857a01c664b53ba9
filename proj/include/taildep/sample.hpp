#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace taildep {

// A bivariate sample; coordinates must be finite, n >= 2.
struct Sample {
    std::vector<std::pair<double, double>> pairs;

    std::size_t size() const { return pairs.size(); }
};

// Within-sample ranks: rank r means the value is the r-th smallest.
// Ties broken by input order (stable); tie_warning records that ties
// occurred in either coordinate.
struct RankData {
    std::vector<std::int64_t> rx;
    std::vector<std::int64_t> ry;
    std::size_t n = 0;
    bool tie_warning = false;
};

RankData compute_ranks(const Sample& sample);

}  // namespace taildep
