#pragma once

#include <cstdint>
#include <random>

namespace spinmem {

/// Seeded source of random signs with substream derivation.
///
/// Reproducibility contract: identical (seed, stream_id) yields the identical
/// output sequence on every platform. The mt19937_64 raw output sequence is
/// fixed by the standard; std::*_distribution is not, so bits are consumed
/// directly.
class NoiseSource {
public:
    explicit NoiseSource(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id), engine_(mix(seed, stream_id)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Independent generator for a derived substream. Disjoint ids give
    /// streams safe to consume in parallel.
    NoiseSource substream(std::uint64_t id) const {
        return NoiseSource(seed_, mix(stream_id_, id));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// +1 or -1, each with probability 1/2.
    int sign() { return (engine_() >> 63) ? +1 : -1; }

    /// Uniform integer in [0, bound). Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

private:
    // splitmix64 finalizer; decorrelates seed/stream combinations
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

}  // namespace spinmem
