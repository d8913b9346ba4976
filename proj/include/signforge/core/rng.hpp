// Copyright (c) signforge contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

namespace signforge {

/// FNV-1a 64-bit hash; used to key per-stage rng streams by name.
constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : s) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 1099511628211ULL;
    }
    return h;
}

/// Stateless SplitMix64 output function. Counter-based construction:
/// feeding (seed XOR key) gives an independent, order-free stream seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_stream(std::uint64_t seed, std::string_view stage) {
    return splitmix64(seed ^ fnv1a(stage));
}
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t key) {
    return splitmix64(seed ^ key);
}

/// Sequential SplitMix64 generator. Cheap to construct, so renderer code
/// creates one per (pixel, sample) from derived seeds and stays
/// schedule-independent.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Inclusive integer range.
    long uniform_int(long lo, long hi);
    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller (cosine branch only, two u64 per draw).
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }
    /// Gamma(alpha, 1) via Marsaglia-Tsang, valid for alpha > 0.
    double gamma(double alpha);
    double beta(double alpha, double beta);

private:
    std::uint64_t state_;
};

}  // namespace signforge
