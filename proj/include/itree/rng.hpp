#pragma once

#include <cstdint>

namespace itree {

// Counter-based generator: splitmix64 finalizer over a keyed counter.
// Deterministic for a given seed, and fork(tag) yields an independent
// stream without sharing state, so generators can hand substreams to
// helpers without coupling their draw orders.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

    std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Uniform in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % bound;
    }

    Rng fork(std::uint64_t tag) const { return Rng(mix(key_ ^ mix(tag + 0xbf58476d1ce4e5b9ULL))); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace itree
