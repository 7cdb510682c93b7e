#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace treeq {

/// Seeded 64-bit generator behind every stochastic operation.
///
/// Two access patterns, both bit-reproducible across platforms:
///   - a stateful stream (mt19937_64 with an explicit 53-bit uniform mapping)
///     for single measurements and site generation;
///   - stateless per-trial draws (SplitMix64 over (seed, trial index)) for
///     Monte Carlo batches, so partitioning trials across threads cannot
///     change the result.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) built from the top 53 bits of one engine output.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// SplitMix64 output for stream position `index` of a batch rooted at
    /// `seed`. Independent of any engine state.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

    /// Canonical [0, 1) double for trial `index` of a batch.
    static double trial_uniform(std::uint64_t seed, std::uint64_t index) {
        return static_cast<double>(derive(seed, index) >> 11) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 engine_;
};

/// Inverse-CDF draw: smallest i with u < p_0 + ... + p_i. Probabilities are
/// expected to sum to 1; the last index absorbs floating-point residue.
std::size_t sample_index(const std::vector<double>& probabilities, double u);

}  // namespace treeq
