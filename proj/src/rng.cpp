#include "treeq/rng.hpp"

namespace treeq {

std::uint64_t SeededRng::derive(std::uint64_t seed, std::uint64_t index) {
    // SplitMix64 stream: the value at position `index` of the sequence
    // rooted at `seed`. Fixed algorithm, identical on every platform.
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::size_t sample_index(const std::vector<double>& probabilities, double u) {
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) return i;
    }
    return probabilities.empty() ? 0 : probabilities.size() - 1;
}

}  // namespace treeq
