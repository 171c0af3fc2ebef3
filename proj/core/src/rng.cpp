#include "catan/rng.hpp"

namespace catanrl {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void Rng::reseed(std::uint64_t seed) {
    // Scramble the raw seed so nearby seeds give unrelated streams.
    state_ = seed;
    (void)splitmix64(state_);
}

std::uint64_t Rng::next_u64() {
    return splitmix64(state_);
}

int Rng::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = ~0ULL - (~0ULL % span);
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

double Rng::uniform_double() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
}

std::uint64_t Rng::derive(std::uint64_t salt) {
    std::uint64_t x = state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(x);
}

} // namespace catanrl
