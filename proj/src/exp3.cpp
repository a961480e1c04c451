#include "rotting/exp3.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rotting/errors.hpp"

namespace rotting {

Exp3::Exp3(std::size_t experts, double alpha)
    : alpha_(alpha), weights_(experts, 1.0), probabilities_(experts, 1.0 / static_cast<double>(experts)) {
    if (experts == 0) throw ConfigError("EXP3 needs at least one expert");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("EXP3 alpha must lie in [0, 1]");
}

std::vector<double> Exp3::mixture(std::span<const double> weights, double alpha) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::logic_error("EXP3 weights are not positive and finite");
    const double uniform = alpha / static_cast<double>(weights.size());
    std::vector<double> p(weights.size());
    std::transform(weights.begin(), weights.end(), p.begin(),
                   [&](double w) { return (1.0 - alpha) * (w / total) + uniform; });
    return p;
}

std::size_t Exp3::select(Rng& rng) {
    probabilities_ = mixture(weights_, alpha_);
    const double u = uniform_(rng);
    double cumulative = 0.0;
    selected_ = probabilities_.size() - 1;
    for (std::size_t i = 0; i + 1 < probabilities_.size(); ++i) {
        cumulative += probabilities_[i];
        if (u < cumulative) {
            selected_ = i;
            break;
        }
    }
    pending_ = true;
    return selected_;
}

void Exp3::update(double gain) {
    if (!pending_) throw UsageError("EXP3 update without a preceding selection");
    pending_ = false;
    const double g = std::clamp(gain, 0.0, 1.0);
    const double b = static_cast<double>(weights_.size());
    weights_[selected_] *= std::exp(alpha_ * g / (b * probabilities_[selected_]));
    const double top = *std::max_element(weights_.begin(), weights_.end());
    for (double& w : weights_) w /= top;
}

}  // namespace rotting
