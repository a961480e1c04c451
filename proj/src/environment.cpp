#include "rotting/environment.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rotting/errors.hpp"

namespace rotting {

namespace {

void check_max_rate(double rate) {
    if (!(rate >= 0.0 && rate < 1.0))
        throw ConfigError("rotting rate must lie in [0, 1), got " + std::to_string(rate));
}

}  // namespace

RottingSchedule::RottingSchedule(Kind kind, double max_rate, Rule rule)
    : kind_(kind), max_rate_(max_rate), rule_(std::move(rule)) {}

RottingSchedule RottingSchedule::zero() { return {Kind::Zero, 0.0, {}}; }

RottingSchedule RottingSchedule::constant(double rate) {
    check_max_rate(rate);
    return {Kind::Constant, rate, {}};
}

RottingSchedule RottingSchedule::custom(double max_rate, Rule rule) {
    check_max_rate(max_rate);
    if (!rule) throw ConfigError("custom rotting schedule needs a rule");
    return {Kind::Custom, max_rate, std::move(rule)};
}

double RottingSchedule::checked_custom(std::uint64_t pulls, std::uint64_t time) const {
    const double r = rule_(pulls, time);
    if (!(r >= 0.0 && r <= max_rate_))
        throw UsageError("custom rotting rule emitted " + std::to_string(r) +
                         " outside [0, " + std::to_string(max_rate_) + "]");
    return r;
}

Environment::Environment(EnvConfig cfg)
    : cfg_(std::move(cfg)),
      arm_rng_(stream_seed(cfg_.seed, Stream::ArmMeans)),
      noise_rng_(stream_seed(cfg_.seed, Stream::Noise)) {
    if (cfg_.horizon < 1) throw ConfigError("horizon must be at least 1");
    if (!(cfg_.noise_std >= 0.0) || !std::isfinite(cfg_.noise_std))
        throw ConfigError("noise_std must be a finite non-negative number");
}

ArmId Environment::sample_new_arm() {
    const ArmId id{arms_.size()};
    arms_.push_back(ArmState{uniform_(arm_rng_), 0, 0.0});
    return id;
}

Observation Environment::pull(ArmId id) {
    if (id.index >= arms_.size())
        throw UsageError("pull of unknown arm " + std::to_string(id.index));
    if (time_ >= cfg_.horizon) throw UsageError("pull past the horizon");

    ArmState& a = arms_[id.index];
    Observation obs;
    obs.arm = id;
    obs.true_mean_before_pull = a.mean();
    obs.reward = obs.true_mean_before_pull + cfg_.noise_std * normal_(noise_rng_);
    obs.rot_applied = cfg_.schedule.rate(a.pulls, time_);
    a.decay_accum += obs.rot_applied;
    ++a.pulls;
    ++time_;
    return obs;
}

const ArmState& Environment::arm(ArmId id) const {
    if (id.index >= arms_.size())
        throw UsageError("unknown arm " + std::to_string(id.index));
    return arms_[id.index];
}

}  // namespace rotting
