#pragma once

#include <cstdint>
#include <string_view>

namespace cqe {

/// SplitMix64: tiny, fully specified, bit-identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0,1) with 53 random bits
    double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::uint64_t state_;
};

/// FNV-1a over a string, used to derive per-task seed streams.
inline std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic seed for one (shape, center) task of a run.
inline std::uint64_t task_seed(std::uint64_t master, std::string_view shape,
                               std::string_view center) {
    std::uint64_t h = hash_str(shape) ^ (hash_str(center) * 0x9e3779b97f4a7c15ULL);
    Rng mix(master ^ h);
    return mix.next_u64();
}

} // namespace cqe
