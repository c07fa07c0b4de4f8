#include <graphphys/random.hpp>

#include <cmath>
#include <numbers>

#include <graphphys/error.hpp>

namespace graphphys {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Seed replica_seed(Seed seed, std::uint64_t i) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0)
        fail(ErrorCode::InvalidArgument, "empty range");
    // Reject the low partial block so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = engine_();
        if (r >= threshold)
            return r % bound;
    }
}

double Rng::normal() {
    double u = uniform();
    while (u == 0.0)
        u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

} // namespace graphphys
