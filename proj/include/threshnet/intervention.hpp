#pragma once

#include <vector>

namespace threshnet {

// How a seed set is forced to 1.
//   Temporary: clamped until the clamped system stops changing, then released.
//   Fixed:     clamped at steps t = 0 .. duration-1.
struct SeedingMode {
    enum class Kind { Temporary, Fixed };
    Kind kind = Kind::Temporary;
    int duration = 1;  // only meaningful for Fixed

    static SeedingMode temporary() { return {Kind::Temporary, 1}; }
    static SeedingMode fixed(int d) { return {Kind::Fixed, d}; }

    bool operator==(const SeedingMode& o) const {
        return kind == o.kind && (kind == Kind::Temporary || duration == o.duration);
    }
};

struct Intervention {
    std::vector<int> seeds;  // sorted, unique
    SeedingMode mode;
};

}  // namespace threshnet
