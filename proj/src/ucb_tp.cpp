#include "rotting/ucb_tp.hpp"

#include <algorithm>
#include <cmath>

#include "rotting/errors.hpp"

namespace rotting {

double UcbTpConfig::default_delta(std::uint64_t horizon, double rho) {
    return std::max(std::cbrt(rho), 1.0 / std::sqrt(static_cast<double>(horizon)));
}

UcbTpConfig UcbTpConfig::make(std::uint64_t horizon, double rho) {
    UcbTpConfig cfg;
    cfg.horizon = horizon;
    cfg.rho_known = rho;
    cfg.delta = default_delta(horizon, rho);
    return cfg;
}

void UcbTpConfig::validate() const {
    if (horizon < 1) throw ConfigError("UCB-TP: horizon must be at least 1");
    if (!(rho_known >= 0.0 && rho_known < 1.0))
        throw ConfigError("UCB-TP: known rotting rate must lie in [0, 1)");
    // T = 1 gives delta = 1 through the default rule; the threshold is never consulted.
    if (!(delta > 0.0 && (delta < 1.0 || (delta == 1.0 && horizon == 1))))
        throw ConfigError("UCB-TP: delta must lie in (0, 1)");
    if (!(radius_scale > 0.0)) throw ConfigError("UCB-TP: radius_scale must be positive");
}

double ucbtp_index(const UcbTpState& state, const UcbTpConfig& cfg) {
    if (state.stats.n == 0) throw UsageError("UCB-TP index is undefined before the first pull");
    return threshold_index(state.stats.corrected_sum, state.stats.n, cfg.rho_known,
                           cfg.radius_scale, std::log(static_cast<double>(cfg.horizon)));
}

PolicyAction ucbtp_step(const UcbTpState& state, const UcbTpConfig& cfg) {
    return ucbtp_index(state, cfg) >= 1.0 - cfg.delta ? PolicyAction::PullCurrent
                                                       : PolicyAction::PullFresh;
}

UcbTp::UcbTp(UcbTpConfig cfg)
    : cfg_(cfg),
      log_horizon_(std::log(static_cast<double>(cfg.horizon))),
      threshold_(1.0 - cfg.delta) {
    cfg_.validate();
}

ArmId UcbTp::next_arm(Environment& env) {
    const bool keep =
        state_.stats.n > 0 &&
        threshold_index(state_.stats.corrected_sum, state_.stats.n, cfg_.rho_known,
                        cfg_.radius_scale, log_horizon_) >= threshold_;
    if (!keep) state_ = UcbTpState{env.sample_new_arm(), {}};
    return state_.current_arm;
}

void UcbTp::observe(const Observation& obs) { state_.stats.add(obs.reward, cfg_.rho_known); }

}  // namespace rotting
