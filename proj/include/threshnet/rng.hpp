#pragma once

#include <cstdint>

namespace threshnet {

// SplitMix64. Portable 64-bit generator: identical streams on every
// platform/compiler, unlike std::uniform_int_distribution which is
// implementation-defined. Substreams for parallel restarts are derived
// by remixing (seed, stream index).
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n > 0. Modulo bias is irrelevant at our ranges
    // and determinism is what matters.
    uint64_t bounded(uint64_t n) { return next() % n; }

    int below(int n) { return static_cast<int>(bounded(static_cast<uint64_t>(n))); }

    // uniform double in [0, 1) from the top 53 bits
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return unit() < p; }

    static SplitMix64 substream(uint64_t seed, uint64_t stream) {
        SplitMix64 g(seed ^ (0xd2b74407b1ce6e93ULL * (stream + 1)));
        g.next();
        return g;
    }
};

}  // namespace threshnet
