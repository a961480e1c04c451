#include "rotting/aucb_tp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rotting/errors.hpp"

namespace rotting {

std::uint64_t ceil_sqrt(std::uint64_t n) noexcept {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r >= n) --r;
    while (static_cast<unsigned __int128>(r) * r < n) ++r;
    return r;
}

std::vector<double> aucbtp_candidate_set(std::uint64_t block_len) {
    if (block_len < 4)
        throw ConfigError("AUCB-TP needs block length H >= 4, got H=" + std::to_string(block_len));
    // Smallest e with e >= 1.5 log2 H, i.e. 2^(2e) >= H^3, evaluated exactly.
    const unsigned __int128 h = block_len;
    const unsigned __int128 cube = h * h * h;
    int last = 0;
    while ((static_cast<unsigned __int128>(1) << (2 * last)) < cube) ++last;
    std::vector<double> set;
    for (int e = 3; e <= last; ++e) set.push_back(std::ldexp(1.0, -e));
    return set;
}

double AucbTpConfig::default_alpha(std::size_t candidates, std::uint64_t horizon,
                                   std::uint64_t block_len) {
    const double b = static_cast<double>(candidates);
    const double rounds = static_cast<double>((horizon + block_len - 1) / block_len);
    return std::min(1.0, std::sqrt(b * std::log(b) / ((std::numbers::e - 1.0) * rounds)));
}

AucbTpConfig AucbTpConfig::make(std::uint64_t horizon, double reward_norm_c) {
    AucbTpConfig cfg;
    cfg.horizon = horizon;
    cfg.block_len = ceil_sqrt(horizon);
    cfg.candidates = aucbtp_candidate_set(cfg.block_len);
    cfg.alpha = default_alpha(cfg.candidates.size(), horizon, cfg.block_len);
    cfg.reward_norm_c = reward_norm_c;
    return cfg;
}

void AucbTpConfig::validate() const {
    if (horizon < 1) throw ConfigError("AUCB-TP: horizon must be at least 1");
    if (block_len < 2) throw ConfigError("AUCB-TP: block length must be at least 2");
    if (candidates.empty()) throw ConfigError("AUCB-TP: empty candidate set");
    for (double b : candidates)
        if (!(b > 0.0 && b < 1.0)) throw ConfigError("AUCB-TP: candidates must lie in (0, 1)");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("AUCB-TP: alpha must lie in [0, 1]");
    if (!(reward_norm_c > 0.0)) throw ConfigError("AUCB-TP: C must be positive");
    if (!(radius_scale > 0.0)) throw ConfigError("AUCB-TP: radius_scale must be positive");
}

double normalized_block_gain(double block_reward_sum, double reward_norm_c,
                             std::uint64_t block_len, double log_horizon) {
    const double h = static_cast<double>(block_len);
    const double scale = 2.0 * reward_norm_c * h * log_horizon + 4.0 * std::sqrt(h * log_horizon);
    // T = 1 makes the scale zero; no block is ever completed with reward mass then.
    if (!(scale > 0.0)) return 0.5;
    return std::clamp(0.5 + block_reward_sum / scale, 0.0, 1.0);
}

PolicyAction aucbtp_block_step(const AucbTpBlockState& block, const AucbTpConfig& cfg) {
    if (block.stats.n == 0) return PolicyAction::PullFresh;
    const double index =
        threshold_index(block.stats.corrected_sum, block.stats.n, block.beta, cfg.radius_scale,
                        std::log(static_cast<double>(cfg.block_len)));
    return index >= block.threshold ? PolicyAction::PullCurrent : PolicyAction::PullFresh;
}

AucbTp::AucbTp(AucbTpConfig cfg, std::uint64_t policy_seed)
    : cfg_((cfg.validate(), std::move(cfg))),
      log_horizon_(std::log(static_cast<double>(cfg_.horizon))),
      log_block_(std::log(static_cast<double>(cfg_.block_len))),
      master_(cfg_.candidates.size(), cfg_.alpha),
      rng_(policy_seed) {}

void AucbTp::start_block(Environment& env) {
    const std::uint64_t block = steps_ / cfg_.block_len;
    const std::size_t expert = master_.select(rng_);
    const double beta = cfg_.candidates[expert];
    block_ = AucbTpBlockState{};
    block_.block = block;
    block_.expert = expert;
    block_.beta = beta;
    block_.threshold = 1.0 - std::cbrt(beta);
    block_.current_arm = env.sample_new_arm();
}

ArmId AucbTp::next_arm(Environment& env) {
    if (steps_ % cfg_.block_len == 0) {
        start_block(env);
        return block_.current_arm;
    }
    const double index = threshold_index(block_.stats.corrected_sum, block_.stats.n, block_.beta,
                                         cfg_.radius_scale, log_block_);
    if (index < block_.threshold) {
        block_.current_arm = env.sample_new_arm();
        block_.stats = {};
    }
    return block_.current_arm;
}

void AucbTp::observe(const Observation& obs) {
    block_.stats.add(obs.reward, block_.beta);
    block_.reward_sum += obs.reward;
    ++block_.steps_in_block;
    ++steps_;
    if (block_.steps_in_block == cfg_.block_len || steps_ == cfg_.horizon)
        master_.update(normalized_block_gain(block_.reward_sum, cfg_.reward_norm_c,
                                             cfg_.block_len, log_horizon_));
}

}  // namespace rotting
