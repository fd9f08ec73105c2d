#pragma once

#include <cstdint>

namespace geci {

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: every draw is a pure function of
/// (key, counter), so streams keyed by (seed, stream, row) produce the
/// same values regardless of thread count or call interleaving.
class Rng {
public:
    Rng() : key_(0), ctr_(0) {}
    explicit Rng(uint64_t key) : key_(key), ctr_(0) {}
    Rng(uint64_t seed, uint64_t stream) : key_(derive_key(seed, stream)), ctr_(0) {}

    static uint64_t derive_key(uint64_t seed, uint64_t stream) {
        return mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL));
    }

    /// Child generator with an independent stream, without advancing this one.
    Rng split(uint64_t substream) const {
        return Rng(mix64(key_ ^ mix64(substream + 0x9e3779b97f4a7c15ULL)));
    }

    uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

    /// Uniform in [0, 1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in the open interval (0, 1); safe for inverse-CDF sampling.
    double next_open_double() {
        return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_normal();  // inverse-CDF, see stats.hpp

    /// Uniform integer in [0, bound) via rejection-free Lemire reduction.
    uint64_t next_below(uint64_t bound) {
        // 128-bit multiply keeps the distribution exactly uniform enough
        // for index sampling at the sizes used here.
        return uint64_t((__uint128_t(next_u64()) * bound) >> 64);
    }

private:
    uint64_t key_;
    uint64_t ctr_;
};

}  // namespace geci
