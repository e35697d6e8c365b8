#pragma once

#include <cstdint>
#include <random>

namespace massbound {

// splitmix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic random stream: stream i of a 64-bit master seed.
//
// Trial i always draws from stream (seed, i) regardless of how trials are
// scheduled, so simulations are reproducible and may be partitioned freely.
// Doubles are produced from the top 53 bits of a mt19937_64 word, which the
// standard pins down exactly; no library distribution objects are used, so
// the byte-identical-output contract holds across toolchains.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix64(mix64(seed) ^ mix64(stream ^ 0x632BE59BD9B4E019ULL))) {}

    // uniform double in [0, 1)
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return uniform01() < prob; }

    std::uint64_t next_word() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace massbound
