#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace abc {

/// Deterministic counter-derived random stream.
///
/// Every Monte Carlo task owns one stream, keyed by (seed, stream_id).
/// Identical keys reproduce identical draw sequences; distinct stream ids
/// give statistically independent sequences, so a sampler that assigns one
/// stream per particle is reproducible regardless of how particles are
/// scheduled across threads.
///
/// The generator is xoshiro256++ (Blackman & Vigna, public domain), state
/// seeded through SplitMix64 as its authors recommend.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform draw in [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal draw.
    double normal() { return normal_(*this); }

    /// Gamma(shape, 1) draw.
    double gamma(double shape) {
        std::gamma_distribution<double> g(shape, 1.0);
        return g(*this);
    }

    /// Beta(a, b) draw via the two-gamma representation.
    double beta(double a, double b) {
        const double x = gamma(a);
        const double y = gamma(b);
        return x / (x + y);
    }

    /// Chi-squared draw with `df` degrees of freedom.
    double chi_squared(double df) { return 2.0 * gamma(df / 2.0); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_ = 0;
    std::uint64_t stream_id_ = 0;
    std::uint64_t state_[4] = {};
    std::normal_distribution<double> normal_{};
};

/// Creates the stream keyed by (seed, stream_id). Pure function of its inputs.
RngStream derive_stream(std::uint64_t seed, std::uint64_t stream_id);

/// Hashes a path of labels onto a fresh 64-bit seed. Used to give nested
/// runs (experiment -> replicate -> method) independent seed roots without
/// coordinating stream-id ranges.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

} // namespace abc
