#pragma once

#include <cstdint>
#include <vector>

#include "rotting/environment.hpp"

namespace rotting {

enum class SsucbRadius {
    Classic,    // sqrt(2 log t / n), t = pulls made so far
    Threshold,  // sqrt(radius_scale log T / n), same form as UCB-TP
};

struct SsucbConfig {
    std::uint64_t horizon = 1;
    std::uint64_t subsample_count = 1;  // K
    SsucbRadius radius = SsucbRadius::Classic;
    double radius_scale = 10.0;         // used by SsucbRadius::Threshold only

    // K = ceil(sqrt(T)).
    static SsucbConfig make(std::uint64_t horizon, SsucbRadius radius = SsucbRadius::Classic);
    void validate() const;
};

// Subsampled UCB: draws K arms up front, plays each once, then runs UCB on
// that subset alone. Ties go to the lowest ArmId.
class Ssucb {
public:
    explicit Ssucb(SsucbConfig cfg);

    ArmId next_arm(Environment& env);
    void observe(const Observation& obs);

    const SsucbConfig& config() const noexcept { return cfg_; }
    const std::vector<ArmId>& arms() const noexcept { return arms_; }
    std::uint64_t pulls_of(std::size_t slot) const { return counts_[slot]; }
    double empirical_mean(std::size_t slot) const { return sums_[slot] / static_cast<double>(counts_[slot]); }

private:
    std::size_t best_slot() const;

    SsucbConfig cfg_;
    double log_horizon_;
    std::vector<ArmId> arms_;
    std::vector<double> sums_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t steps_ = 0;
    std::size_t last_slot_ = 0;
};

}  // namespace rotting
