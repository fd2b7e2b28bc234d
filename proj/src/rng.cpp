#include "abc/rng.hpp"

namespace abc {
namespace {

// SplitMix64 step (Vigna). Used only for seeding.
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::uint64_t x = seed;
    std::uint64_t mixed = splitmix64(x);
    x = mixed ^ (stream_id * 0x9E3779B97F4A7C15ULL);
    (void)splitmix64(x);
    state_[0] = splitmix64(x);
    state_[1] = splitmix64(x);
    state_[2] = splitmix64(x);
    state_[3] = splitmix64(x);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
        state_[0] = 1; // all-zero state is invalid for xoshiro
    }
}

RngStream derive_stream(std::uint64_t seed, std::uint64_t stream_id) {
    return RngStream(seed, stream_id);
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t x = seed;
    std::uint64_t out = splitmix64(x);
    for (std::uint64_t label : path) {
        x = out ^ (label * 0xD1B54A32D192ED03ULL);
        out = splitmix64(x);
    }
    return out;
}

} // namespace abc
