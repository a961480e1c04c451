#pragma once

#include <cstdint>
#include <vector>

#include "rotting/environment.hpp"
#include "rotting/exp3.hpp"
#include "rotting/policy.hpp"
#include "rotting/rng.hpp"

namespace rotting {

// Candidate rotting rates 2^-3, 2^-4, ..., 2^-ceil(1.5 log2 H), descending.
// Throws ConfigError for H < 4.
std::vector<double> aucbtp_candidate_set(std::uint64_t block_len);

// ceil(sqrt(n)) computed exactly in integers.
std::uint64_t ceil_sqrt(std::uint64_t n) noexcept;

struct AucbTpConfig {
    std::uint64_t horizon = 1;
    std::uint64_t block_len = 4;
    std::vector<double> candidates;
    double alpha = 1.0;
    double reward_norm_c = 93.0;
    double radius_scale = 10.0;

    // alpha = min(1, sqrt(B log B / ((e - 1) ceil(T / H)))).
    static double default_alpha(std::size_t candidates, std::uint64_t horizon,
                                 std::uint64_t block_len);
    // H = ceil(sqrt(T)) with the derived candidate set and alpha.
    static AucbTpConfig make(std::uint64_t horizon, double reward_norm_c = 93.0);

    std::uint64_t blocks() const noexcept { return (horizon + block_len - 1) / block_len; }
    void validate() const;  // throws ConfigError
};

// g = 1/2 + block_reward_sum / (2 C H log T + 4 sqrt(H log T)), clamped to [0, 1].
double normalized_block_gain(double block_reward_sum, double reward_norm_c,
                             std::uint64_t block_len, double log_horizon);

// Per-block state of the base policy selected by the master.
struct AucbTpBlockState {
    std::uint64_t block = 0;       // 0-based block number
    std::size_t expert = 0;        // index into the candidate set
    double beta = 0.0;             // candidate rotting rate in force
    double threshold = 0.0;        // 1 - beta^(1/3)
    ArmId current_arm;
    CorrectedStats stats;          // counts pulls since the block start only
    std::uint64_t steps_in_block = 0;
    double reward_sum = 0.0;
};

// Keep/discard decision inside a block; the radius uses log(H).
PolicyAction aucbtp_block_step(const AucbTpBlockState& block, const AucbTpConfig& cfg);

// Adaptive UCB-Threshold Policy. Time is cut into blocks of H steps; an EXP3
// master picks a candidate rotting rate per block, and a UCB-threshold base
// tuned to that rate runs inside the block starting from a fresh arm.
class AucbTp {
public:
    AucbTp(AucbTpConfig cfg, std::uint64_t policy_seed);

    ArmId next_arm(Environment& env);
    void observe(const Observation& obs);

    const AucbTpConfig& config() const noexcept { return cfg_; }
    const Exp3& master() const noexcept { return master_; }
    const AucbTpBlockState& block() const noexcept { return block_; }
    std::uint64_t steps() const noexcept { return steps_; }

private:
    void start_block(Environment& env);

    AucbTpConfig cfg_;
    double log_horizon_;
    double log_block_;
    Exp3 master_;
    Rng rng_;
    AucbTpBlockState block_;
    std::uint64_t steps_ = 0;
};

}  // namespace rotting
