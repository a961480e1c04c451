#pragma once

#include <cstdint>
#include <random>

namespace rotting {

using Rng = std::mt19937_64;

// SplitMix64 finalizer (Steele, Lea & Flood 2014). Bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed of repetition `k` under base seed `base`:
//   mix(base, k) = splitmix64(splitmix64(base) ^ splitmix64(k + 1))
// The two inner hashes keep (base, k) and (k, base) apart.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t k) noexcept {
    return splitmix64(splitmix64(base) ^ splitmix64(k + 1));
}

// Independent streams derived from one run seed. The environment owns the arm
// and noise streams, the policy owns the policy stream, so swapping the policy
// never changes which arms or which noise a seed produces.
enum class Stream : std::uint64_t { ArmMeans = 1, Noise = 2, Policy = 3 };

constexpr std::uint64_t stream_seed(std::uint64_t run_seed, Stream s) noexcept {
    return mix_seed(run_seed ^ 0xA5A5A5A5A5A5A5A5ULL, static_cast<std::uint64_t>(s));
}

}  // namespace rotting
