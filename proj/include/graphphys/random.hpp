#pragma once

#include <cstdint>
#include <random>

namespace graphphys {

using Seed = std::uint64_t;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of replica i in an ensemble started from `seed`.
Seed replica_seed(Seed seed, std::uint64_t i);

/**
 * Reproducible generator: mt19937_64 with explicit conversions, so the
 * stream does not depend on the standard library's distributions.
 */
class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    bool bernoulli(double p) { return uniform() < p; }
    /// Standard normal deviate (Box-Muller).
    double normal();

private:
    std::mt19937_64 engine_;
};

} // namespace graphphys
