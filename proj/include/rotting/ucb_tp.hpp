#pragma once

#include <cstdint>

#include "rotting/environment.hpp"
#include "rotting/policy.hpp"

namespace rotting {

struct UcbTpConfig {
    std::uint64_t horizon = 1;
    double rho_known = 0.0;     // maximum rotting rate handed to the policy
    double delta = 1.0;         // keep the arm while its index is >= 1 - delta
    double radius_scale = 10.0;

    // delta = max(rho^(1/3), 1/sqrt(T)).
    static double default_delta(std::uint64_t horizon, double rho);
    static UcbTpConfig make(std::uint64_t horizon, double rho);

    void validate() const;  // throws ConfigError
};

struct UcbTpState {
    ArmId current_arm;
    CorrectedStats stats;
};

// Throws UsageError when the current arm has not been pulled yet.
double ucbtp_index(const UcbTpState& state, const UcbTpConfig& cfg);

// Keep the current arm iff its index reaches the threshold 1 - delta.
PolicyAction ucbtp_step(const UcbTpState& state, const UcbTpConfig& cfg);

// UCB-Threshold Policy: pull one arm until its rotting-corrected UCB drops
// below 1 - delta, then discard it for good and move to a fresh arm.
class UcbTp {
public:
    explicit UcbTp(UcbTpConfig cfg);

    ArmId next_arm(Environment& env);
    void observe(const Observation& obs);

    const UcbTpState& state() const noexcept { return state_; }
    const UcbTpConfig& config() const noexcept { return cfg_; }
    double threshold() const noexcept { return threshold_; }

private:
    UcbTpConfig cfg_;
    double log_horizon_;
    double threshold_;
    UcbTpState state_;
};

}  // namespace rotting
