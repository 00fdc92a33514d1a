#pragma once

#include "homlab/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace homlab {

// Counter-based generator: every output is a pure function of
// (seed, stream, counter), so draws are order-independent and streams
// can be handed out per sample without shared state.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    static std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
        std::uint64_t z = mix(seed ^ (0x9e3779b97f4a7c15ULL + mix(stream)));
        return mix(z ^ (0xbf58476d1ce4e5b9ULL + counter));
    }

    std::uint64_t next() { return at(seed_, stream_, counter_++); }

    // Uniform integer in [0, bound); rejection keeps it exactly uniform.
    std::uint64_t uniform_below(std::uint64_t bound);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

// Draws index i with probability weights[i] / sum(weights), exactly.
// The uniform variate is consumed as a dyadic interval that is refined
// 64 bits at a time until it fits inside a single cell of the exact
// cumulative distribution, so no rounding bias is introduced.
std::size_t sample_exact(std::span<const Rat> weights, CounterRng& rng);

}  // namespace homlab
