#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace bvp {

// Deterministic random stream: xoshiro256++ seeded through SplitMix64.
//
// Child streams are derived from the *origin seed* (never from consumed
// state), so derive(tag) is stable no matter how many values have been
// drawn. Derivation scheme, fixed for reproducibility:
//
//   child_seed = splitmix64( seed + (tag + 1) * 0x9E3779B97F4A7C15 )
//
// The experiment harness derives one stream per Monte-Carlo iteration
// (tag = iteration index) and the noise generator derives one substream
// per noise stage (tags 1..3), which keeps noise versions nested: adding
// a stage never shifts the draws of the stages below it.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
        // xoshiro must not start in the all-zero state
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t seed() const { return seed_; }

    RngStream derive(std::uint64_t tag) const {
        std::uint64_t x = seed_ + (tag + 1) * 0x9E3779B97F4A7C15ULL;
        return RngStream(splitmix64(x));
    }

    std::uint64_t next_u64() {
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

    // uniform on [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1]; safe as a log() argument
    double uniform01_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // uniform integer in [0, n); n must be > 0
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // +1 or -1 with equal probability
    double random_sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    // standard normal via Box-Muller; generates pairs, caches the second
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01_open();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t splitmix64(std::uint64_t&& x) {
        std::uint64_t v = x;
        return splitmix64(v);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace bvp
