#pragma once

#include <cstdint>

#include "dim/graph.hpp"

namespace dim {

// SplitMix64: x += 0x9e3779b97f4a7c15; z = x; z = (z ^ z>>30) *
// 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb; return
// z ^ z>>31. Fixed algorithm so generated instances are reproducible
// across platforms and implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Erdos-Renyi G(n, p) with weights uniform in [wmin, wmax], fully
// determined by the seed. Throws std::invalid_argument on p outside
// [0, 1], wmin > wmax or negative n.
Graph random_graph(int n, double p, double wmin, double wmax, std::uint64_t seed);

} // namespace dim
