#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace taildep {

// SplitMix64 finalizer; used to spread seeds before feeding the engine.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic sub-stream seed for (parent seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// A seedable random stream: uniforms on (0,1) and standard normals.
// The output sequence is a pure function of the seed; child(i) streams are
// derived from the construction seed, independent of how much the parent
// has been consumed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

    RngStream child(std::uint64_t index) const {
        return RngStream(derive_seed(seed_, index));
    }

    std::uint64_t seed() const { return seed_; }

    // Open-interval uniform: never 0 or 1, safe under log/inversion.
    double uniform01() {
        const std::uint64_t r = eng_() >> 11;  // 53 bits
        return (static_cast<double>(r) + 0.5) * 0x1.0p-53;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace taildep
