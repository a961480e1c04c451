#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rotting/rng.hpp"

namespace rotting {

// Dense identifier of a sampled arm: 0, 1, 2, ... in order of sampling.
struct ArmId {
    std::uint64_t index = 0;
    friend constexpr auto operator<=>(ArmId, ArmId) = default;
};

struct ArmState {
    double initial_mean = 0.0;
    std::uint64_t pulls = 0;
    double decay_accum = 0.0;  // running sum of applied rotting, never pulls * rate

    double mean() const noexcept { return initial_mean - decay_accum; }
};

// Rule producing the rotting amount applied to the pulled arm. Every emitted
// value lies in [0, max_rate].
class RottingSchedule {
public:
    enum class Kind { Zero, Constant, Custom };
    // (pulls of the arm before this pull, global time before this pull) -> rate
    using Rule = std::function<double(std::uint64_t pulls, std::uint64_t time)>;

    static RottingSchedule zero();
    static RottingSchedule constant(double rate);
    static RottingSchedule custom(double max_rate, Rule rule);

    Kind kind() const noexcept { return kind_; }
    double max_rate() const noexcept { return max_rate_; }

    // Throws UsageError if a custom rule leaves [0, max_rate].
    double rate(std::uint64_t pulls, std::uint64_t time) const {
        if (kind_ == Kind::Custom) return checked_custom(pulls, time);
        return max_rate_;
    }

private:
    RottingSchedule(Kind kind, double max_rate, Rule rule);
    double checked_custom(std::uint64_t pulls, std::uint64_t time) const;

    Kind kind_;
    double max_rate_;
    Rule rule_;
};

struct EnvConfig {
    std::uint64_t horizon = 1;
    RottingSchedule schedule = RottingSchedule::zero();
    double noise_std = 1.0;
    std::uint64_t seed = 0;
};

struct Observation {
    ArmId arm;
    double reward = 0.0;
    double true_mean_before_pull = 0.0;
    double rot_applied = 0.0;
};

// Pseudo-regret of one pull against the constant optimum 1.
constexpr double regret_increment(const Observation& obs) noexcept {
    return 1.0 - obs.true_mean_before_pull;
}

// Rested rotting environment over an infinite reservoir of arms with
// Uniform[0,1] initial means. Arms exist only once sampled.
class Environment {
public:
    explicit Environment(EnvConfig cfg);

    ArmId sample_new_arm();

    // Reward is drawn from the pre-pull mean, then the arm rots.
    Observation pull(ArmId arm);

    const ArmState& arm(ArmId id) const;
    std::uint64_t arms_sampled() const noexcept { return arms_.size(); }
    std::uint64_t time() const noexcept { return time_; }
    std::uint64_t horizon() const noexcept { return cfg_.horizon; }
    const EnvConfig& config() const noexcept { return cfg_; }

private:
    EnvConfig cfg_;
    std::vector<ArmState> arms_;
    Rng arm_rng_;
    Rng noise_rng_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uint64_t time_ = 0;
};

}  // namespace rotting
