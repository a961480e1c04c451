#include "rotting/ssucb.hpp"

#include <cmath>

#include "rotting/aucb_tp.hpp"
#include "rotting/errors.hpp"

namespace rotting {

SsucbConfig SsucbConfig::make(std::uint64_t horizon, SsucbRadius radius) {
    SsucbConfig cfg;
    cfg.horizon = horizon;
    cfg.subsample_count = ceil_sqrt(horizon);
    cfg.radius = radius;
    return cfg;
}

void SsucbConfig::validate() const {
    if (horizon < 1) throw ConfigError("SSUCB: horizon must be at least 1");
    if (subsample_count < 1) throw ConfigError("SSUCB: subsample count must be at least 1");
    if (!(radius_scale > 0.0)) throw ConfigError("SSUCB: radius_scale must be positive");
}

Ssucb::Ssucb(SsucbConfig cfg)
    : cfg_(cfg), log_horizon_(std::log(static_cast<double>(cfg.horizon))) {
    cfg_.validate();
}

std::size_t Ssucb::best_slot() const {
    const double numerator = cfg_.radius == SsucbRadius::Classic
                                 ? 2.0 * std::log(static_cast<double>(steps_))
                                 : cfg_.radius_scale * log_horizon_;
    std::size_t best = 0;
    double best_value = -INFINITY;
    for (std::size_t i = 0; i < arms_.size(); ++i) {
        const double n = static_cast<double>(counts_[i]);
        const double value = sums_[i] / n + std::sqrt(numerator / n);
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    return best;
}

ArmId Ssucb::next_arm(Environment& env) {
    if (arms_.empty()) {
        const auto k = cfg_.subsample_count;
        arms_.reserve(k);
        for (std::uint64_t i = 0; i < k; ++i) arms_.push_back(env.sample_new_arm());
        sums_.assign(k, 0.0);
        counts_.assign(k, 0);
    }
    last_slot_ = steps_ < arms_.size() ? static_cast<std::size_t>(steps_) : best_slot();
    return arms_[last_slot_];
}

void Ssucb::observe(const Observation& obs) {
    sums_[last_slot_] += obs.reward;
    ++counts_[last_slot_];
    ++steps_;
}

}  // namespace rotting
