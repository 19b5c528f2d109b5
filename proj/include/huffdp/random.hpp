#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace huffdp {

// splitmix64 finalizer, used to derive independent sub-stream seeds.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
    return mix_seed(mix_seed(seed) ^ key);
}

// Key for a stream value: its bit pattern, with -0.0 folded into 0.0 so the
// key agrees with map/cache equality.
inline std::uint64_t value_key(double v) {
    return std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v);
}

// Seeded random stream. mt19937_64 is fully specified by the standard; the
// draw mappings below avoid the implementation-defined std::*_distribution
// classes, so identical seeds give identical streams on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1)
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1)
    double unit_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // uniform on [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // uniform on (lo, hi)
    double uniform_open(double lo, double hi) { return lo + (hi - lo) * unit_open(); }

    // uniform over {0, ..., n-1}; not bias-corrected, fine for shuffling
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace huffdp
