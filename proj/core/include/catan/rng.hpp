#pragma once

#include <cstdint>

namespace catanrl {

// Deterministic PRNG. All randomness in the project flows through this
// wrapper so replays are reproducible across platforms and stdlib versions
// (std::uniform_int_distribution is implementation-defined, so we roll the
// bounded draw ourselves).
class Rng {
public:
    Rng() : state_(0x9e3779b97f4a7c15ULL) {}
    explicit Rng(std::uint64_t seed) { reseed(seed); }

    void reseed(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    int uniform_int(int lo, int hi);

    // Uniform double in [0, 1).
    double uniform_double();

    // One six-sided die.
    int d6() { return uniform_int(1, 6); }

    // Derive an independent child stream (for per-game / per-worker seeding).
    std::uint64_t derive(std::uint64_t salt);

private:
    std::uint64_t state_;
};

// splitmix64 step, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t& x);

} // namespace catanrl
