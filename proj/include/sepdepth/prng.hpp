#pragma once

#include <cstdint>

namespace sepdepth {

/// splitmix64: tiny, seedable, platform-stable generator. Used everywhere a
/// reproducible stream is part of the contract (random corpora, random graph
/// families, mutation tests); std:: distributions are avoided because their
/// output is not pinned across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound > 0. Modulo bias is irrelevant
    /// at the bounds used here and keeps the stream definition trivial.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Bernoulli draw: true with probability numer/denom.
    bool chance(std::uint64_t numer, std::uint64_t denom) {
        return next_below(denom) < numer;
    }

private:
    std::uint64_t state_;
};

/// Stateless mix for deriving independent sub-seeds from (seed, index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    return g.next();
}

} // namespace sepdepth
