#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace vsglb {

// SplitMix64 (Steele/Lea/Flood): 64-bit state, one mixing step per draw.
// Fixed as the project generator so instance streams, shuffles and benchmark
// CSVs are bit-identical across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1): top 53 bits scaled by 2^-53.
    double next_uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Child generator seeded from the next output of this stream.
    SplitMix64 split() noexcept { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

// In-place Fisher-Yates shuffle driven by SplitMix64.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next() % i);
        std::swap(values[i - 1], values[j]);
    }
}

inline std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

inline std::vector<std::size_t> shuffled_order(std::size_t n, std::uint64_t seed) {
    auto order = identity_order(n);
    SplitMix64 rng(seed);
    shuffle(order, rng);
    return order;
}

// Arrival orders must visit every index in [0, n) exactly once.
inline void validate_order(std::size_t n, std::span<const std::size_t> order) {
    if (order.size() != n)
        throw std::invalid_argument("arrival order must have exactly one entry per item");
    std::vector<char> seen(n, 0);
    for (std::size_t i : order) {
        if (i >= n || seen[i])
            throw std::invalid_argument("arrival order is not a permutation");
        seen[i] = 1;
    }
}

}  // namespace vsglb
