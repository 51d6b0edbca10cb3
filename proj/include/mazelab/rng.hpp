#pragma once

#include <cstdint>

namespace mazelab {

// Counter-based deterministic generator built on the SplitMix64 mixing
// function. Streams derived from (seed, index) are independent, so work
// split across threads by index reproduces the single-threaded result
// bit for bit on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Stream for one unit of work (trial, carve pass, ...).
    static Rng derive(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform value in [0, n). Multiply-shift reduction; the modulo bias
    // of the plain approach is avoided and the result is platform-stable.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool next_bit() { return (next() >> 63) != 0; }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace mazelab
